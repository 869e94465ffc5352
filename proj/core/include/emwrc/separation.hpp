#pragma once

#include <optional>
#include <vector>

#include "emwrc/channel.hpp"
#include "emwrc/gf2.hpp"
#include "emwrc/strategy.hpp"

namespace emwrc {

// Outcome of data separation at one destination: per-user packet value, or
// nullopt when that user's round packet is unresolvable (erased end-to-end).
// values[destination] is always resolved.
struct SeparationResult {
  std::vector<std::optional<gf2::Symbol>> values;
  int destination = -1;

  bool resolved(int user) const {
    return values[static_cast<std::size_t>(user)].has_value();
  }
};

// Solves the augmented system (unit row for the destination's own packet
// plus all non-erased received rows) and reports which users' packets are
// uniquely determined.
SeparationResult separate(const ReceivedMatrix& received, int destination,
                          gf2::Symbol own_packet);

// Data separation needs at least N-1 equations.
bool feasibility_check(const TransmissionMatrix& A);

}  // namespace emwrc
