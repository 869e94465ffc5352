#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "emwrc/bitvec.hpp"
#include "emwrc/errors.hpp"

namespace emwrc::gf2 {

// Packet payload over GF(2)^S, S <= 64 bits. The default configuration uses
// S = 1 (packets are single data bits) but every operation is symbol-wise.
using Symbol = std::uint64_t;

// One equation: coefficient vector plus its payload. A missing payload marks
// an erased row, which carries no usable equation.
struct BinaryRow {
  BitVector coefficients;
  std::optional<Symbol> payload;

  bool erased() const { return !payload.has_value(); }

  static BinaryRow erased_row(std::size_t n_vars) {
    return BinaryRow{BitVector(n_vars), std::nullopt};
  }
  static BinaryRow unit(std::size_t n_vars, std::size_t var, Symbol value) {
    BinaryRow r{BitVector(n_vars), value};
    r.coefficients.set(var);
    return r;
  }
};

// Ordered list of equations over n_vars variables. Row order is preserved:
// row l corresponds to the uplink slot it came from.
struct LinearSystem {
  std::vector<BinaryRow> rows;
  std::size_t n_vars = 0;
};

// Modulo-2 sum of two rows (coefficients and payloads).
// Throws ErasedOperand if either payload is missing.
BinaryRow row_xor(const BinaryRow& a, const BinaryRow& b);

// Solves the system by Gaussian elimination over GF(2), substituting the
// known assignments first. Returns one entry per variable: its value when
// uniquely determined by the non-erased rows plus knowns, otherwise nullopt.
// The result depends only on the row space, not on row order.
// Throws InconsistentSystem when elimination derives 0 = 1.
std::vector<std::optional<Symbol>> solve_unique(
    const LinearSystem& sys, const std::map<std::size_t, Symbol>& known);

// If `target` lies in the GF(2) span of the basis row coefficients, returns
// the witnessing subset of row indices produced by elimination with
// lowest-index pivots (canonical); otherwise nullopt. Erased rows in `basis`
// are skipped.
std::optional<std::vector<std::size_t>> span_membership(
    const BitVector& target, const std::vector<BinaryRow>& basis);

}  // namespace emwrc::gf2
