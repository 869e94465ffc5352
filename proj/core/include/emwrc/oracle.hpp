#pragma once

#include <cstdint>

#include "emwrc/analytics.hpp"
#include "emwrc/channel.hpp"

namespace emwrc::oracle {

inline constexpr std::uint64_t kDefaultPatternGuard = std::uint64_t{1} << 24;

// Exact pairwise EEER by exhaustive enumeration: every uplink survival
// assignment over the transmitting entries of A, then per destination every
// downlink row-erasure pattern, each weighted by its Bernoulli probability
// and pushed through the real relay and separation pipelines. Ground truth
// for the analytic recursions. Throws TooLarge when the pattern count
// exceeds the guard.
PairwiseEeerMatrix exact_eeer(Scheme scheme, const ErasureProfile& profile,
                              bool reconstruction,
                              std::uint64_t pattern_guard = kDefaultPatternGuard);

// Exact per-(user, slot) probability that the user's coefficient is absent
// from that row of A~ after relay reconstruction, by the same enumeration.
EquivalentErasureTable exact_equivalent_uplink(
    Scheme scheme, const ErasureProfile& profile,
    std::uint64_t pattern_guard = kDefaultPatternGuard);

}  // namespace emwrc::oracle
