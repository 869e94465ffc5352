#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "emwrc/bitvec.hpp"
#include "emwrc/errors.hpp"
#include "emwrc/gf2.hpp"
#include "emwrc/rng.hpp"

namespace emwrc {

// Degree distribution of the LT layer. Built from the truncated 1/(i(i-1))
// profile with a spiked degree-1 mass: Q(1) = q1, Q(i) = 1/(a i (i-1)) for
// 2 <= i < m, Q(m) chosen so the i >= 2 block sums to one, and
// a = (m-1)/m + (1/(m z^{m-1})) * sum_{i>=m} z^i / i. P(i) = Q(i)/sum Q.
struct DegreeDistribution {
  std::vector<double> p;    // p[d-1] = P(d), d = 1..m
  std::vector<double> cdf;  // running sums of p
  int max_degree = 0;
  double z = 0.0;
  double q1 = 0.0;
  double a = 0.0;
  double q_total = 0.0;  // sum of Q before normalization

  double probability(int degree) const {
    return (degree >= 1 && degree <= max_degree)
               ? p[static_cast<std::size_t>(degree - 1)]
               : 0.0;
  }
};

// Throws DomainError for m < 2 or z outside (0,1) or q1 outside [0,1),
// NegativeMass if the truncation leaves a negative Q(i).
DegreeDistribution build_distribution(int m, double z, double q1);

// A fountain-coded packet together with the source combination it encodes.
// The combination is fully determined by (seed, source_user, sequence), so
// any synchronized party can reconstruct it; it is stored for testability.
struct CodedPacket {
  int source_user = -1;
  std::uint64_t sequence = 0;
  gf2::Symbol payload = 0;
  std::vector<std::uint32_t> combination;  // sorted 0-based source indices
};

// The source-index combination for packet (user, seq): degree sampled from
// the distribution, then that many distinct indices drawn uniformly by
// sequential rejection. Pure function of (seed, user, seq).
std::vector<std::uint32_t> packet_combination(const DegreeDistribution& dist,
                                              StreamKey seed, int user,
                                              std::uint64_t seq,
                                              std::uint32_t n_source);

// Encodes the next packet of `user`: XOR of the combination's source packets.
CodedPacket encode_next(const DegreeDistribution& dist, StreamKey seed,
                        int user, std::uint64_t seq,
                        std::span<const gf2::Symbol> source);

// Incremental LT decoder for one source stream. Received equations are kept
// in row-echelon form, so completion is detected at the exact packet where
// the combination matrix reaches rank K.
class LtDecoder {
 public:
  explicit LtDecoder(std::uint32_t n_source);

  void add(std::span<const std::uint32_t> combination, gf2::Symbol payload);
  bool complete() const { return rank_ == n_source_; }
  std::uint32_t rank() const { return rank_; }
  std::uint64_t received_count() const { return received_; }

  // All K source packets; call only when complete().
  std::vector<gf2::Symbol> packets() const;

 private:
  std::uint32_t n_source_;
  std::uint32_t rank_ = 0;
  std::uint64_t received_ = 0;
  std::vector<gf2::BinaryRow> pivot_rows_;  // pivot_rows_[c] has pivot c
  std::vector<bool> has_pivot_;
};

// One received equation for the stream decoder.
using ReceivedEquation = std::pair<std::vector<std::uint32_t>, gf2::Symbol>;

// Batch decode: peeling (belief propagation) first; if the peel stalls and at
// least K equations arrived, a Gaussian-elimination fallback via solve_unique.
// Returns all K packets when uniquely determined, otherwise nullopt.
std::optional<std::vector<gf2::Symbol>> decode(
    const std::vector<ReceivedEquation>& received, std::uint32_t n_source);

// Peeling pass only (no fallback); resolved values per source index.
std::vector<std::optional<gf2::Symbol>> peel_only(
    const std::vector<ReceivedEquation>& received, std::uint32_t n_source);

// Overhead (K' - K)/K where K' is the largest per-destination packet count.
double measure_overhead(std::span<const std::uint64_t> k_prime_per_destination,
                        std::uint64_t n_source);

}  // namespace emwrc
