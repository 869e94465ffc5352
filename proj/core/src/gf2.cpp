#include "emwrc/gf2.hpp"

#include <algorithm>

namespace emwrc::gf2 {

BinaryRow row_xor(const BinaryRow& a, const BinaryRow& b) {
  if (a.erased() || b.erased())
    throw ErasedOperand("row_xor: operand payload is erased");
  BinaryRow out;
  out.coefficients = a.coefficients ^ b.coefficients;
  out.payload = *a.payload ^ *b.payload;
  return out;
}

namespace {

// Reduced row echelon form of the non-erased rows. Pivot selection scans
// columns left to right and rows in index order, which makes the witness
// bookkeeping in span_membership canonical.
std::vector<BinaryRow> reduced_echelon(std::vector<BinaryRow> rows,
                                       std::size_t n_vars) {
  std::vector<BinaryRow> pivots;  // one per pivot column, ascending
  for (auto& row : rows) {
    for (const auto& p : pivots) {
      const std::size_t c = p.coefficients.find_first();
      if (row.coefficients.test(c)) row = row_xor(row, p);
    }
    if (row.coefficients.any()) {
      pivots.push_back(std::move(row));
      std::sort(pivots.begin(), pivots.end(),
                [](const BinaryRow& a, const BinaryRow& b) {
                  return a.coefficients.find_first() <
                         b.coefficients.find_first();
                });
    } else if (row.payload && *row.payload != 0) {
      throw InconsistentSystem("elimination produced 0 = 1");
    }
  }
  // Back-substitution: clear every pivot column above its pivot row.
  for (std::size_t i = pivots.size(); i-- > 0;) {
    const std::size_t c = pivots[i].coefficients.find_first();
    for (std::size_t j = 0; j < i; ++j)
      if (pivots[j].coefficients.test(c))
        pivots[j] = row_xor(pivots[j], pivots[i]);
  }
  (void)n_vars;
  return pivots;
}

}  // namespace

std::vector<std::optional<Symbol>> solve_unique(
    const LinearSystem& sys, const std::map<std::size_t, Symbol>& known) {
  std::vector<BinaryRow> rows;
  rows.reserve(sys.rows.size() + known.size());
  for (const auto& [var, value] : known)
    rows.push_back(BinaryRow::unit(sys.n_vars, var, value));
  for (const auto& r : sys.rows)
    if (!r.erased()) rows.push_back(r);

  const auto rref = reduced_echelon(std::move(rows), sys.n_vars);

  std::vector<std::optional<Symbol>> out(sys.n_vars);
  for (const auto& row : rref)
    if (row.coefficients.count() == 1)
      out[row.coefficients.find_first()] = *row.payload;
  return out;
}

std::optional<std::vector<std::size_t>> span_membership(
    const BitVector& target, const std::vector<BinaryRow>& basis) {
  // Echelon basis with a witness mask per pivot: which input rows XOR to it.
  struct Tracked {
    BitVector coeffs;
    BitVector witness;
  };
  std::vector<Tracked> pivots;
  for (std::size_t r = 0; r < basis.size(); ++r) {
    if (basis[r].erased()) continue;
    Tracked t{basis[r].coefficients, BitVector(basis.size())};
    t.witness.set(r);
    for (const auto& p : pivots) {
      if (t.coeffs.test(p.coeffs.find_first())) {
        t.coeffs ^= p.coeffs;
        t.witness ^= p.witness;
      }
    }
    if (t.coeffs.any()) {
      pivots.push_back(std::move(t));
      std::sort(pivots.begin(), pivots.end(),
                [](const Tracked& a, const Tracked& b) {
                  return a.coeffs.find_first() < b.coeffs.find_first();
                });
    }
  }

  BitVector residue = target;
  BitVector witness(basis.size());
  for (const auto& p : pivots) {
    if (residue.test(p.coeffs.find_first())) {
      residue ^= p.coeffs;
      witness ^= p.witness;
    }
  }
  if (residue.any()) return std::nullopt;
  return witness.set_bits();
}

}  // namespace emwrc::gf2
