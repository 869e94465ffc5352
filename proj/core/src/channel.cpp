#include "emwrc/channel.hpp"

#include <utility>

namespace emwrc {

ErasureProfile ErasureProfile::symmetric(int n_users, double eps_u,
                                         double eps_d) {
  ErasureProfile p;
  p.eps_up.assign(static_cast<std::size_t>(n_users), eps_u);
  p.eps_down.assign(static_cast<std::size_t>(n_users), eps_d);
  return p;
}

void ErasureProfile::validate() const {
  if (eps_up.size() != eps_down.size() || eps_up.size() < 2)
    throw DomainError("erasure profile needs matching per-user lists, N >= 2");
  for (double e : eps_up)
    if (!(e >= 0.0 && e <= 1.0))
      throw DomainError("uplink erasure probability outside [0,1]");
  for (double e : eps_down)
    if (!(e >= 0.0 && e <= 1.0))
      throw DomainError("downlink erasure probability outside [0,1]");
}

UplinkOutcome apply_uplink(const TransmissionMatrix& A,
                           std::span<const gf2::Symbol> x,
                           std::vector<BitVector> survival) {
  UplinkOutcome out;
  const auto n = static_cast<std::size_t>(A.n_users);
  out.received.origin = Origin::RelayRaw;
  out.received.n_users = A.n_users;
  out.received.rows.reserve(A.rows.size());
  for (std::size_t l = 0; l < A.rows.size(); ++l) {
    gf2::BinaryRow row{BitVector(n), std::nullopt};
    gf2::Symbol payload = 0;
    bool anyone = false;
    for (std::size_t i : A.rows[l].set_bits()) {
      if (survival[l].test(i)) {
        row.coefficients.set(i);
        payload ^= x[i];
        anyone = true;
      }
    }
    if (anyone) row.payload = payload;
    out.received.rows.push_back(std::move(row));
  }
  out.survival = std::move(survival);
  return out;
}

UplinkOutcome uplink(const TransmissionMatrix& A,
                     std::span<const gf2::Symbol> x,
                     const ErasureProfile& profile, StreamKey key) {
  const StreamKey up = stage_key(key, Stage::Uplink);
  std::vector<BitVector> survival;
  survival.reserve(A.rows.size());
  const auto n = static_cast<std::size_t>(A.n_users);
  for (std::size_t l = 0; l < A.rows.size(); ++l) {
    BitVector b(n);
    const StreamKey slot = up.child(l);
    for (std::size_t i : A.rows[l].set_bits())
      if (!slot.child(i).bernoulli(profile.eps_up[i])) b.set(i);
    survival.push_back(std::move(b));
  }
  return apply_uplink(A, x, std::move(survival));
}

ReceivedMatrix relay_forward(const UplinkOutcome& up) {
  ReceivedMatrix out = up.received;
  out.origin = Origin::RelayRaw;
  return out;
}

ReceivedMatrix relay_reconstruct(const UplinkOutcome& up,
                                 const TransmissionMatrix& A) {
  ReceivedMatrix out = up.received;
  out.origin = Origin::RelayReconstructed;
  for (std::size_t l = 0; l < out.rows.size(); ++l) {
    const BitVector& intended = A.rows[l];
    if (!out.rows[l].erased() && out.rows[l].coefficients == intended)
      continue;
    const auto combo = gf2::span_membership(intended, up.received.rows);
    if (!combo) continue;  // damaged row kept as received
    gf2::BinaryRow repaired{BitVector(intended.size()), gf2::Symbol{0}};
    for (std::size_t r : *combo)
      repaired = gf2::row_xor(repaired, up.received.rows[r]);
    out.rows[l] = std::move(repaired);
  }
  return out;
}

ReceivedMatrix downlink_for_user(const ReceivedMatrix& x_r, int user,
                                 const ErasureProfile& profile,
                                 StreamKey key) {
  const StreamKey down =
      stage_key(key, Stage::Downlink).child(static_cast<std::uint64_t>(user));
  ReceivedMatrix out;
  out.origin = Origin::User;
  out.user = user;
  out.n_users = x_r.n_users;
  out.rows.reserve(x_r.rows.size());
  const double eps = profile.eps_down[static_cast<std::size_t>(user)];
  for (std::size_t l = 0; l < x_r.rows.size(); ++l) {
    if (x_r.rows[l].erased() || down.child(l).bernoulli(eps))
      out.rows.push_back(
          gf2::BinaryRow::erased_row(static_cast<std::size_t>(x_r.n_users)));
    else
      out.rows.push_back(x_r.rows[l]);
  }
  return out;
}

std::vector<ReceivedMatrix> downlink(const ReceivedMatrix& x_r,
                                     const ErasureProfile& profile,
                                     StreamKey key) {
  std::vector<ReceivedMatrix> out;
  out.reserve(static_cast<std::size_t>(x_r.n_users));
  for (int u = 0; u < x_r.n_users; ++u)
    out.push_back(downlink_for_user(x_r, u, profile, key));
  return out;
}

}  // namespace emwrc
