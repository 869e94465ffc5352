#include "emwrc/analytics.hpp"

#include <limits>

namespace emwrc {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

double PairwiseEeerMatrix::max() const {
  double m = 0.0;
  for (int i = 0; i < n_users; ++i)
    for (int j = 0; j < n_users; ++j)
      if (i != j) m = std::max(m, at(i, j));
  return m;
}

double PairwiseEeerMatrix::min() const {
  double m = 1.0;
  for (int i = 0; i < n_users; ++i)
    for (int j = 0; j < n_users; ++j)
      if (i != j) m = std::min(m, at(i, j));
  return m;
}

double PairwiseEeerMatrix::average() const {
  double s = 0.0;
  for (int i = 0; i < n_users; ++i)
    for (int j = 0; j < n_users; ++j)
      if (i != j) s += at(i, j);
  return s / (static_cast<double>(n_users) * (n_users - 1));
}

UplinkPositionRates UplinkPositionRates::raw(const ErasureProfile& profile) {
  return {profile.eps_up, profile.eps_up};
}

std::vector<double> chain_resolve_probabilities(
    const std::vector<double>& lower, const std::vector<double>& upper,
    double eps_down, bool cyclic, PcVariant variant) {
  const std::size_t m = lower.size();
  const double ed = 1.0 - eps_down;
  std::vector<double> p1(m, 0.0), p2(m, 0.0), pc(m, 0.0), p(m, 0.0);
  p1[0] = p2[0] = p[0] = 1.0;
  if (m == 1) return p;

  // Forward path: the position-k variable read out of chain slot k-1, with
  // the position-(k-1) variable either erased there or resolved upstream.
  for (std::size_t k = 1; k < m; ++k)
    p1[k] = ed * (1.0 - lower[k]) *
            (upper[k - 1] + (1.0 - upper[k - 1]) * p1[k - 1]);

  // Backward path: read out of chain slot k, with the position-(k+1)
  // variable erased there or resolved downstream. The cyclic wrap closes the
  // ring at the destination, which counts as resolved (P2 = 1).
  if (cyclic) {
    for (std::size_t k = m; k-- > 1;) {
      const std::size_t next = (k + 1) % m;
      const double pnext = next == 0 ? 1.0 : p2[next];
      p2[k] = ed * (1.0 - upper[k]) *
              (lower[next] + (1.0 - lower[next]) * pnext);
    }
  } else {
    p2[m - 1] = 0.0;  // the last variable appears in one slot only
    for (std::size_t k = m - 1; k-- > 1;)
      p2[k] = ed * (1.0 - upper[k]) *
              (lower[k + 1] + (1.0 - lower[k + 1]) * p2[k + 1]);
  }

  // Joint retrieval from both slots. The two path events draw on disjoint
  // channel randomness, so the corrected form is their product.
  const std::size_t pc_end = cyclic ? m : m - 1;
  for (std::size_t k = 1; k < pc_end; ++k) {
    const std::size_t next = (k + 1) % m;
    const double pnext = (cyclic && next == 0) ? 1.0 : p2[next];
    const double eps_prev = upper[k - 1];
    const double eps_next = lower[next];
    const double p1_prev = p1[k - 1];
    double bracket;
    if (variant == PcVariant::Corrected) {
      bracket = (eps_prev + (1.0 - eps_prev) * p1_prev) *
                (eps_next + (1.0 - eps_next) * pnext);
    } else {
      // Variant form: the last term carries (1 - eps_next)^2 instead of
      // (1 - eps_prev)(1 - eps_next).
      bracket = eps_prev * eps_next +
                eps_next * (1.0 - eps_prev) * p1_prev +
                eps_prev * (1.0 - eps_next) * pnext +
                (1.0 - eps_next) * (1.0 - eps_next) * p1_prev * pnext;
    }
    pc[k] = ed * ed * (1.0 - lower[k]) * (1.0 - upper[k]) * bracket;
  }

  for (std::size_t k = 1; k < m; ++k) p[k] = p1[k] + p2[k] - pc[k];
  return p;
}

PairwiseEeerMatrix eeer_owr(const ErasureProfile& profile) {
  const int n = profile.n_users();
  PairwiseEeerMatrix mat{n, Scheme::Owr, false,
                         std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        mat.at(i, j) = 1.0 - (1.0 - profile.eps_up[static_cast<std::size_t>(i)]) *
                                 (1.0 - profile.eps_down[static_cast<std::size_t>(j)]);
  return mat;
}

PairwiseEeerMatrix eeer_mpwr(const UplinkPositionRates& rates,
                             const ErasureProfile& profile,
                             PcVariant variant) {
  const int n = profile.n_users();
  PairwiseEeerMatrix mat{n, Scheme::Mpwr, false,
                         std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int j = 0; j < n; ++j) {
    const double ed = profile.eps_down[static_cast<std::size_t>(j)];
    // Sub-chain above the destination: positions k map to users j + k.
    if (n - j >= 2) {
      const auto m = static_cast<std::size_t>(n - j);
      std::vector<double> lo(m, kNaN), up(m, kNaN);
      for (std::size_t k = 0; k < m; ++k) {
        const auto u = static_cast<std::size_t>(j) + k;
        if (k > 0) lo[k] = rates.lower[u];
        if (k + 1 < m) up[k] = rates.upper[u];
      }
      const auto p = chain_resolve_probabilities(lo, up, ed, false, variant);
      for (std::size_t k = 1; k < m; ++k)
        mat.at(j + static_cast<int>(k), j) = 1.0 - p[k];
    }
    // Sub-chain below, reversed: positions map to users j - k, and the
    // reversal swaps each user's lower/upper slot roles.
    if (j >= 1) {
      const auto m = static_cast<std::size_t>(j) + 1;
      std::vector<double> lo(m, kNaN), up(m, kNaN);
      for (std::size_t k = 0; k < m; ++k) {
        const auto u = static_cast<std::size_t>(j) - k;
        if (k > 0) lo[k] = rates.upper[u];
        if (k + 1 < m) up[k] = rates.lower[u];
      }
      const auto p = chain_resolve_probabilities(lo, up, ed, false, variant);
      for (std::size_t k = 1; k < m; ++k)
        mat.at(j - static_cast<int>(k), j) = 1.0 - p[k];
    }
  }
  return mat;
}

PairwiseEeerMatrix eeer_mpwr(const ErasureProfile& profile) {
  return eeer_mpwr(UplinkPositionRates::raw(profile), profile);
}

PairwiseEeerMatrix eeer_oppwr(const UplinkPositionRates& rates,
                              const ErasureProfile& profile,
                              PcVariant variant) {
  const int n = profile.n_users();
  PairwiseEeerMatrix mat{n, Scheme::Oppwr, false,
                         std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  for (int j = 0; j < n; ++j) {
    // One cyclic chain rotated so the destination sits at position 0.
    const auto m = static_cast<std::size_t>(n);
    std::vector<double> lo(m), up(m);
    for (std::size_t k = 0; k < m; ++k) {
      const auto u = static_cast<std::size_t>((j + static_cast<int>(k)) % n);
      lo[k] = rates.lower[u];
      up[k] = rates.upper[u];
    }
    const auto p = chain_resolve_probabilities(
        lo, up, profile.eps_down[static_cast<std::size_t>(j)], true, variant);
    for (std::size_t k = 1; k < m; ++k)
      mat.at((j + static_cast<int>(k)) % n, j) = 1.0 - p[k];
  }
  return mat;
}

PairwiseEeerMatrix eeer_oppwr(const ErasureProfile& profile) {
  return eeer_oppwr(UplinkPositionRates::raw(profile), profile);
}

EquivalentErasureTable equivalent_uplink(Scheme scheme,
                                         const ErasureProfile& profile) {
  if (scheme == Scheme::Owr)
    throw SchemeMismatch(
        "reconstruction cannot help OWR: each packet is sent once");
  const auto n = profile.eps_up.size();
  const auto& eps = profile.eps_up;
  EquivalentErasureTable t;
  t.before.assign(n, kNaN);
  t.within.assign(n, kNaN);
  t.pc_before.assign(n, kNaN);
  t.pc_within.assign(n, kNaN);

  if (scheme == Scheme::Mpwr) {
    // Chain sums: the repair walks away from the damaged slot until it hits
    // an uplink erasure that leaves a usable single-user row.
    for (std::size_t i = 1; i < n; ++i) {  // P_c^{i,i-1}, users 2..N
      double sum = 0.0, run = 1.0;
      for (std::size_t s = i + 1; s < n; ++s) {
        sum += run * eps[s];
        run *= (1.0 - eps[s]) * (1.0 - eps[s]);
      }
      t.pc_before[i] = (1.0 - eps[i]) * sum;
      t.before[i] = eps[i] * (1.0 - t.pc_before[i]);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {  // P_c^{i,i}, users 1..N-1
      double sum = 0.0, run = 1.0;
      for (std::size_t s = i; s-- > 0;) {
        sum += run * eps[s];
        run *= (1.0 - eps[s]) * (1.0 - eps[s]);
      }
      t.pc_within[i] = (1.0 - eps[i]) * sum;
      t.within[i] = eps[i] * (1.0 - t.pc_within[i]);
    }
  } else {
    // Wrap-around sums over the other N-1 slots of the ring.
    for (std::size_t i = 0; i < n; ++i) {
      double sum = 0.0, run = 1.0;
      for (std::size_t s = 0; s + 1 < n; ++s) {
        const std::size_t user = (i + s + 1) % n;
        sum += run * eps[user];
        run *= (1.0 - eps[user]) * (1.0 - eps[user]);
      }
      t.pc_before[i] = (1.0 - eps[i]) * sum;
      t.before[i] = eps[i] * (1.0 - t.pc_before[i]);

      sum = 0.0;
      run = 1.0;
      for (std::size_t s = 0; s + 1 < n; ++s) {
        const std::size_t user = (i + n - s - 1) % n;
        sum += run * eps[user];
        run *= (1.0 - eps[user]) * (1.0 - eps[user]);
      }
      t.pc_within[i] = (1.0 - eps[i]) * sum;
      t.within[i] = eps[i] * (1.0 - t.pc_within[i]);
    }
  }
  return t;
}

PairwiseEeerMatrix analytic_eeer(Scheme scheme, const ErasureProfile& profile,
                                 bool reconstruction, PcVariant variant) {
  PairwiseEeerMatrix mat;
  if (scheme == Scheme::Owr) {
    mat = eeer_owr(profile);  // reconstruction is a no-op for OWR
  } else {
    const UplinkPositionRates rates =
        reconstruction ? equivalent_uplink(scheme, profile).position_rates()
                       : UplinkPositionRates::raw(profile);
    mat = scheme == Scheme::Mpwr ? eeer_mpwr(rates, profile, variant)
                                 : eeer_oppwr(rates, profile, variant);
  }
  mat.reconstruction = reconstruction;
  return mat;
}

double average_eeer(const PairwiseEeerMatrix& mat) { return mat.average(); }

double rate_upper_bound(const ErasureProfile& profile) {
  const auto n = profile.eps_up.size();
  if (n < 2) throw DomainError("rate bound needs N >= 2");
  double rate = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    double worst_user = 1.0;
    double survive_product = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      worst_user = std::min(worst_user, 1.0 - profile.eps_up[j]);
      survive_product *= profile.eps_up[j];
    }
    const double sum_rate = (1.0 - survive_product) / (static_cast<double>(n) - 1.0);
    const double broadcast =
        (1.0 - profile.eps_down[i]) / (static_cast<double>(n) - 1.0);
    rate = std::min({rate, worst_user, sum_rate, broadcast});
  }
  return rate;
}

double normalized_rate(Scheme scheme, double eeer_max, int n_users) {
  return (1.0 - eeer_max) / slots_per_round(scheme, n_users);
}

double overhead_prediction(double eeer) {
  if (!(eeer >= 0.0 && eeer < 1.0))
    throw DomainError("overhead prediction defined for EEER in [0,1)");
  return eeer / (1.0 - eeer);
}

}  // namespace emwrc
