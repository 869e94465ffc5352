#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emwrc/bitvec.hpp"
#include "emwrc/errors.hpp"
#include "emwrc/rng.hpp"

namespace emwrc {

enum class Scheme { Owr, Mpwr, Oppwr };

// Lowercase wire names: "owr", "mpwr", "oppwr".
std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

// Uplink slots per round: N for OWR, N-1 for MPWR, N for OPPWR.
int slots_per_round(Scheme s, int n_users);

// The L x N binary outer code A: a_{l,i} = 1 means user i transmits in
// uplink slot l. Users and slots are 0-based internally.
struct TransmissionMatrix {
  std::vector<BitVector> rows;
  Scheme scheme = Scheme::Owr;
  int n_users = 0;

  int slot_count() const { return static_cast<int>(rows.size()); }
  bool transmits(int slot, int user) const {
    return rows[static_cast<std::size_t>(slot)].test(
        static_cast<std::size_t>(user));
  }
};

// Per-round transmission order. permutation[k] is the user in position k.
struct Schedule {
  std::vector<int> permutation;
  std::uint64_t round_index = 0;

  bool is_identity() const;
};

// Builds the scheme's canonical matrix: identity for OWR, the sequential
// pairwise band for MPWR, the circulant band (wrap row (N-1, 0)) for OPPWR.
// Throws TooFewUsers for n_users < 2.
TransmissionMatrix build_matrix(Scheme scheme, int n_users);

// Identity order when shuffled is false; otherwise a Fisher-Yates permutation
// that is a pure function of (seed, round_index), so every user and the
// harness reconstruct the same round order without replaying history.
Schedule next_schedule(StreamKey seed, std::uint64_t round_index, int n_users,
                       bool shuffled);

// Reassigns pairwise rows to the scheduled user order: row k pairs users
// permutation[k] and permutation[k+1] (OPPWR wraps the last row). Row
// weights are preserved. Throws SchemeMismatch for OWR with a non-identity
// permutation.
TransmissionMatrix apply_schedule(const TransmissionMatrix& matrix,
                                  const Schedule& sched);

}  // namespace emwrc
