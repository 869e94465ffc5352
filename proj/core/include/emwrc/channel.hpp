#pragma once

#include <span>
#include <vector>

#include "emwrc/gf2.hpp"
#include "emwrc/rng.hpp"
#include "emwrc/strategy.hpp"

namespace emwrc {

// Per-user uplink/downlink erasure probabilities.
struct ErasureProfile {
  std::vector<double> eps_up;
  std::vector<double> eps_down;

  int n_users() const { return static_cast<int>(eps_up.size()); }

  static ErasureProfile symmetric(int n_users, double eps_u, double eps_d);
  void validate() const;  // throws DomainError on bad sizes or probabilities
};

enum class Origin { RelayRaw, RelayReconstructed, User };

// Erasure-marked matrix as seen at the relay (A_r before reconstruction,
// A~ after) or at a user after the downlink.
struct ReceivedMatrix {
  std::vector<gf2::BinaryRow> rows;
  Origin origin = Origin::RelayRaw;
  int user = -1;  // destination index when origin == User
  int n_users = 0;
};

// Uplink result: the Bernoulli survival matrix B plus the received rows
// A (.) B with payloads. A row is erased exactly when every transmitter in
// that slot was erased.
struct UplinkOutcome {
  std::vector<BitVector> survival;
  ReceivedMatrix received;
};

// Deterministic core of the uplink: applies a given survival matrix to the
// transmit matrix and payloads. Shared by the Monte Carlo path and the
// exhaustive oracle.
UplinkOutcome apply_uplink(const TransmissionMatrix& A,
                           std::span<const gf2::Symbol> x,
                           std::vector<BitVector> survival);

// One uplink phase: survival bits b_{l,i} drawn independently per
// transmitting entry with P(b=0) = eps_up[i], keyed by (key, slot, user).
UplinkOutcome uplink(const TransmissionMatrix& A,
                     std::span<const gf2::Symbol> x,
                     const ErasureProfile& profile, StreamKey key);

// Relay pass-through: rows forwarded unchanged, zero buffering.
ReceivedMatrix relay_forward(const UplinkOutcome& up);

// Matrix reconstruction: for every slot whose received row differs from the
// intended row of A, the relay searches the GF(2) span of all non-erased
// received rows for the intended row and, when found, substitutes the
// witnessing combination (coefficients and payload alike). Rows never get
// worse; unrepairable rows are kept as received.
ReceivedMatrix relay_reconstruct(const UplinkOutcome& up,
                                 const TransmissionMatrix& A);

// Downlink broadcast to one user: each relay row is independently replaced
// by an erased row with probability eps_down[user]; rows already erased at
// the relay stay erased. Draws are keyed by (key, user, row).
ReceivedMatrix downlink_for_user(const ReceivedMatrix& x_r, int user,
                                 const ErasureProfile& profile, StreamKey key);

// Downlink to all users (independent draws per user and row).
std::vector<ReceivedMatrix> downlink(const ReceivedMatrix& x_r,
                                     const ErasureProfile& profile,
                                     StreamKey key);

}  // namespace emwrc
