#include "emwrc/oracle.hpp"

#include <cmath>
#include <limits>

#include "emwrc/separation.hpp"

namespace emwrc::oracle {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct TransmitEntry {
  std::size_t slot;
  std::size_t user;
};

std::vector<TransmitEntry> transmitting_entries(const TransmissionMatrix& A) {
  std::vector<TransmitEntry> entries;
  for (std::size_t l = 0; l < A.rows.size(); ++l)
    for (std::size_t u : A.rows[l].set_bits()) entries.push_back({l, u});
  return entries;
}

void check_guard(const TransmissionMatrix& A, std::size_t n_entries,
                 std::uint64_t guard) {
  const auto L = static_cast<std::uint64_t>(A.slot_count());
  const auto n = static_cast<std::uint64_t>(A.n_users);
  if (n_entries + L >= 62)
    throw TooLarge("oracle enumeration: pattern space too large");
  const std::uint64_t patterns =
      (std::uint64_t{1} << n_entries) * n * (std::uint64_t{1} << L);
  if (patterns > guard)
    throw TooLarge("oracle enumeration: pattern count exceeds guard");
}

// Iterates every uplink survival assignment over the transmitting entries,
// weighting each by its exact Bernoulli probability.
template <typename Fn>
void for_each_uplink_pattern(const TransmissionMatrix& A,
                             const ErasureProfile& profile,
                             const std::vector<TransmitEntry>& entries,
                             Fn&& fn) {
  const auto n = static_cast<std::size_t>(A.n_users);
  const std::vector<gf2::Symbol> x(n, 0);  // resolvability is structural
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << entries.size());
       ++mask) {
    double weight = 1.0;
    for (std::size_t e = 0; e < entries.size(); ++e) {
      const double eps = profile.eps_up[entries[e].user];
      weight *= (mask >> e) & 1 ? 1.0 - eps : eps;
    }
    if (weight == 0.0) continue;
    std::vector<BitVector> survival(A.rows.size(), BitVector(n));
    for (std::size_t e = 0; e < entries.size(); ++e)
      if ((mask >> e) & 1) survival[entries[e].slot].set(entries[e].user);
    fn(weight, apply_uplink(A, x, std::move(survival)));
  }
}

}  // namespace

PairwiseEeerMatrix exact_eeer(Scheme scheme, const ErasureProfile& profile,
                              bool reconstruction,
                              std::uint64_t pattern_guard) {
  profile.validate();
  const int n = profile.n_users();
  const TransmissionMatrix A = build_matrix(scheme, n);
  const auto entries = transmitting_entries(A);
  check_guard(A, entries.size(), pattern_guard);

  PairwiseEeerMatrix mat{n, scheme, reconstruction,
                         std::vector<double>(static_cast<std::size_t>(n) * n, 0.0)};
  double total_weight = 0.0;
  for_each_uplink_pattern(
      A, profile, entries, [&](double w_up, UplinkOutcome up) {
        total_weight += w_up;
        const ReceivedMatrix relay =
            reconstruction ? relay_reconstruct(up, A) : relay_forward(up);
        std::vector<std::size_t> active;
        for (std::size_t l = 0; l < relay.rows.size(); ++l)
          if (!relay.rows[l].erased()) active.push_back(l);

        for (int j = 0; j < n; ++j) {
          const double ed = profile.eps_down[static_cast<std::size_t>(j)];
          for (std::uint64_t dmask = 0;
               dmask < (std::uint64_t{1} << active.size()); ++dmask) {
            double w_down = 1.0;
            for (std::size_t b = 0; b < active.size(); ++b)
              w_down *= (dmask >> b) & 1 ? 1.0 - ed : ed;
            if (w_down == 0.0) continue;

            ReceivedMatrix rx;
            rx.origin = Origin::User;
            rx.user = j;
            rx.n_users = n;
            rx.rows.assign(relay.rows.size(),
                           gf2::BinaryRow::erased_row(static_cast<std::size_t>(n)));
            for (std::size_t b = 0; b < active.size(); ++b)
              if ((dmask >> b) & 1) rx.rows[active[b]] = relay.rows[active[b]];

            const SeparationResult sep = separate(rx, j, 0);
            const double w = w_up * w_down;
            for (int i = 0; i < n; ++i)
              if (i != j && !sep.resolved(i)) mat.at(i, j) += w;
          }
        }
      });
  if (std::abs(total_weight - 1.0) > 1e-12)
    throw InconsistentSystem("oracle pattern weights do not partition unity");
  return mat;
}

EquivalentErasureTable exact_equivalent_uplink(Scheme scheme,
                                               const ErasureProfile& profile,
                                               std::uint64_t pattern_guard) {
  if (scheme == Scheme::Owr)
    throw SchemeMismatch("equivalent uplink rates exist for pairwise schemes");
  profile.validate();
  const auto n = static_cast<std::size_t>(profile.n_users());
  const TransmissionMatrix A = build_matrix(scheme, profile.n_users());
  const auto entries = transmitting_entries(A);
  check_guard(A, entries.size(), pattern_guard);

  EquivalentErasureTable t;
  t.before.assign(n, kNaN);
  t.within.assign(n, kNaN);
  t.pc_before.assign(n, kNaN);
  t.pc_within.assign(n, kNaN);
  std::vector<double> absent_before(n, 0.0), absent_within(n, 0.0);

  for_each_uplink_pattern(
      A, profile, entries, [&](double w_up, UplinkOutcome up) {
        const ReceivedMatrix rec = relay_reconstruct(up, A);
        for (const auto& e : entries) {
          const bool absent = rec.rows[e.slot].erased() ||
                              !rec.rows[e.slot].coefficients.test(e.user);
          if (!absent) continue;
          // Slot l pairs users (l, l+1 mod N): first member sits in its
          // "within" slot, second member in its "before" slot.
          if (e.user == e.slot)
            absent_within[e.user] += w_up;
          else
            absent_before[e.user] += w_up;
        }
      });

  for (const auto& e : entries) {
    const double eps = profile.eps_up[e.user];
    if (e.user == e.slot) {
      t.within[e.user] = absent_within[e.user];
      t.pc_within[e.user] =
          eps > 0.0 ? 1.0 - absent_within[e.user] / eps : kNaN;
    } else {
      t.before[e.user] = absent_before[e.user];
      t.pc_before[e.user] =
          eps > 0.0 ? 1.0 - absent_before[e.user] / eps : kNaN;
    }
  }
  return t;
}

}  // namespace emwrc::oracle
