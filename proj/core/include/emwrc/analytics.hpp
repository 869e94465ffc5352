#pragma once

#include <cmath>
#include <vector>

#include "emwrc/channel.hpp"
#include "emwrc/strategy.hpp"

namespace emwrc {

// N x N table of pairwise end-to-end erasure rates, eps(i, j) = probability
// that source i's round packet is unresolvable at destination j. Diagonal is
// zero by convention; summaries run over off-diagonal entries only.
struct PairwiseEeerMatrix {
  int n_users = 0;
  Scheme scheme = Scheme::Owr;
  bool reconstruction = false;
  std::vector<double> eps;  // row-major, eps[src * n + dst]

  double at(int src, int dst) const {
    return eps[static_cast<std::size_t>(src) *
                   static_cast<std::size_t>(n_users) +
               static_cast<std::size_t>(dst)];
  }
  double& at(int src, int dst) {
    return eps[static_cast<std::size_t>(src) *
                   static_cast<std::size_t>(n_users) +
               static_cast<std::size_t>(dst)];
  }
  double max() const;
  double min() const;
  double average() const;
};

// Per-position uplink erasure rates feeding the EEER recursions. lower[i] is
// the rate of user i's packet in the slot where it is the second member of
// the pair (slot i-1); upper[i] in the slot where it is the first member
// (slot i). Entries that do not exist for the scheme (MPWR chain ends) are
// NaN and never read.
struct UplinkPositionRates {
  std::vector<double> lower;
  std::vector<double> upper;

  static UplinkPositionRates raw(const ErasureProfile& profile);
};

// Equivalent uplink erasure rates after relay reconstruction, evaluated from
// the closed-form chain sums (MPWR) and wrap-around sums (OPPWR), together
// with the repair probabilities they derive from.
struct EquivalentErasureTable {
  std::vector<double> before;     // eps_u^{i,i-1}
  std::vector<double> within;     // eps_u^{i,i}
  std::vector<double> pc_before;  // P_c^{i,i-1}
  std::vector<double> pc_within;  // P_c^{i,i}

  UplinkPositionRates position_rates() const { return {before, within}; }
};

// Which form of the joint-retrieval term P_c the recursions use. Corrected
// is the product of the two independent path events; DuplicatedFactor keeps
// a duplicated final factor instead and exists so oracle-check can
// adjudicate between the two forms.
enum class PcVariant { Corrected, DuplicatedFactor };

// P(k) for positions k = 0..M-1 of one substitution chain: probability that
// the position-k variable is resolvable at the position-0 destination, given
// per-position uplink rates and the destination's downlink rate. cyclic
// selects the OPPWR wrap (position 0 closes the ring with P2(0) = 1).
std::vector<double> chain_resolve_probabilities(
    const std::vector<double>& lower, const std::vector<double>& upper,
    double eps_down, bool cyclic, PcVariant variant = PcVariant::Corrected);

// Closed form for OWR: eps(i,j) = 1 - (1 - eps_u[i])(1 - eps_d[j]).
PairwiseEeerMatrix eeer_owr(const ErasureProfile& profile);

// MPWR pairwise EEER from the forward/backward recursions, decomposed per
// destination into the two independent sub-chains below and above it.
PairwiseEeerMatrix eeer_mpwr(const UplinkPositionRates& rates,
                             const ErasureProfile& profile,
                             PcVariant variant = PcVariant::Corrected);
PairwiseEeerMatrix eeer_mpwr(const ErasureProfile& profile);

// OPPWR pairwise EEER: one cyclic chain, rotated to each destination.
PairwiseEeerMatrix eeer_oppwr(const UplinkPositionRates& rates,
                              const ErasureProfile& profile,
                              PcVariant variant = PcVariant::Corrected);
PairwiseEeerMatrix eeer_oppwr(const ErasureProfile& profile);

// Equivalent uplink rates under relay reconstruction. Throws SchemeMismatch
// for OWR (single transmission per packet, nothing to reconstruct).
EquivalentErasureTable equivalent_uplink(Scheme scheme,
                                         const ErasureProfile& profile);

// Dispatch: pairwise EEER for any scheme, optionally with the
// reconstruction-adjusted position rates.
PairwiseEeerMatrix analytic_eeer(Scheme scheme, const ErasureProfile& profile,
                                 bool reconstruction,
                                 PcVariant variant = PcVariant::Corrected);

// Mean off-diagonal pairwise EEER.
double average_eeer(const PairwiseEeerMatrix& mat);

// Cut-set upper bound on the common rate per uplink+downlink slot pair:
// R = min_i min{ min_{j != i} (1 - eps_u[j]),
//                (1 - prod_{j != i} eps_u[j]) / (N - 1),
//                (1 - eps_d[i]) / (N - 1) }.
// The single-user MAC term is intentionally not divided by N-1.
double rate_upper_bound(const ErasureProfile& profile);

// (1 - eeer_max) / L with the scheme's slot count L.
double normalized_rate(Scheme scheme, double eeer_max, int n_users);

// Ideal-fountain overhead eps_f / (1 - eps_f). Throws DomainError at 1.
double overhead_prediction(double eeer);

}  // namespace emwrc
