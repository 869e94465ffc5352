#include "emwrc/fountain.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace emwrc {

DegreeDistribution build_distribution(int m, double z, double q1) {
  if (m < 2) throw DomainError("degree distribution needs m >= 2");
  if (!(z > 0.0 && z < 1.0)) throw DomainError("code rate z must be in (0,1)");
  if (!(q1 >= 0.0 && q1 < 1.0)) throw DomainError("Q(1) must be in [0,1)");

  // Tail sum_{i>=m} z^i/i via the log series: -ln(1-z) - sum_{i<m} z^i/i.
  double head = 0.0;
  double zi = 1.0;
  for (int i = 1; i < m; ++i) {
    zi *= z;
    head += zi / i;
  }
  const double tail = -std::log1p(-z) - head;
  const double a =
      (m - 1.0) / m + tail / (m * std::pow(z, m - 1.0));

  std::vector<double> q(static_cast<std::size_t>(m), 0.0);
  q[0] = q1;
  for (int i = 2; i <= m - 1; ++i)
    q[static_cast<std::size_t>(i - 1)] = 1.0 / (a * i * (i - 1.0));
  q[static_cast<std::size_t>(m - 1)] = 1.0 - (m - 2.0) / (a * (m - 1.0));

  double q_total = 0.0;
  for (double v : q) {
    if (v < 0.0) throw NegativeMass("degree distribution has negative mass");
    q_total += v;
  }

  DegreeDistribution dist;
  dist.max_degree = m;
  dist.z = z;
  dist.q1 = q1;
  dist.a = a;
  dist.q_total = q_total;
  dist.p.resize(q.size());
  dist.cdf.resize(q.size());
  double running = 0.0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    dist.p[i] = q[i] / q_total;
    running += dist.p[i];
    dist.cdf[i] = running;
  }
  dist.cdf.back() = 1.0;
  return dist;
}

namespace {

int sample_degree(const DegreeDistribution& dist, double u) {
  const auto it = std::lower_bound(dist.cdf.begin(), dist.cdf.end(), u);
  return static_cast<int>(it - dist.cdf.begin()) + 1;
}

}  // namespace

std::vector<std::uint32_t> packet_combination(const DegreeDistribution& dist,
                                              StreamKey seed, int user,
                                              std::uint64_t seq,
                                              std::uint32_t n_source) {
  const StreamKey pkt = stage_key(seed, Stage::FountainDegree)
                            .child(static_cast<std::uint64_t>(user))
                            .child(seq);
  int degree = sample_degree(dist, pkt.unit(0));
  if (degree > static_cast<int>(n_source)) degree = static_cast<int>(n_source);

  // Distinct uniform indices by sequential rejection.
  const StreamKey idx = stage_key(seed, Stage::FountainIndex)
                            .child(static_cast<std::uint64_t>(user))
                            .child(seq);
  std::vector<std::uint32_t> combo;
  combo.reserve(static_cast<std::size_t>(degree));
  std::uint64_t draw = 0;
  while (combo.size() < static_cast<std::size_t>(degree)) {
    const auto candidate =
        static_cast<std::uint32_t>(idx.uniform_below(n_source, draw++));
    if (std::find(combo.begin(), combo.end(), candidate) == combo.end())
      combo.push_back(candidate);
  }
  std::sort(combo.begin(), combo.end());
  return combo;
}

CodedPacket encode_next(const DegreeDistribution& dist, StreamKey seed,
                        int user, std::uint64_t seq,
                        std::span<const gf2::Symbol> source) {
  CodedPacket pkt;
  pkt.source_user = user;
  pkt.sequence = seq;
  pkt.combination = packet_combination(
      dist, seed, user, seq, static_cast<std::uint32_t>(source.size()));
  pkt.payload = 0;
  for (std::uint32_t k : pkt.combination) pkt.payload ^= source[k];
  return pkt;
}

LtDecoder::LtDecoder(std::uint32_t n_source)
    : n_source_(n_source),
      pivot_rows_(n_source),
      has_pivot_(n_source, false) {}

void LtDecoder::add(std::span<const std::uint32_t> combination,
                    gf2::Symbol payload) {
  ++received_;
  if (complete()) return;
  gf2::BinaryRow row{BitVector(n_source_), payload};
  for (std::uint32_t k : combination) {
    if (k >= n_source_)
      throw DomainError("combination index outside the source range");
    row.coefficients.set(k);
  }
  // Reduce against the echelon basis; insert when a new pivot appears.
  for (;;) {
    const std::size_t c = row.coefficients.find_first();
    if (c == row.coefficients.size()) return;  // dependent equation
    if (!has_pivot_[c]) {
      pivot_rows_[c] = std::move(row);
      has_pivot_[c] = true;
      ++rank_;
      return;
    }
    row = gf2::row_xor(row, pivot_rows_[c]);
  }
}

std::vector<gf2::Symbol> LtDecoder::packets() const {
  if (!complete())
    throw DomainError("decoder has not reached full rank");
  // Back-substitute from the highest pivot down.
  std::vector<gf2::Symbol> out(n_source_, 0);
  for (std::size_t c = n_source_; c-- > 0;) {
    gf2::Symbol v = *pivot_rows_[c].payload;
    for (std::size_t k : pivot_rows_[c].coefficients.set_bits())
      if (k > c) v ^= out[k];
    out[c] = v;
  }
  return out;
}

std::vector<std::optional<gf2::Symbol>> peel_only(
    const std::vector<ReceivedEquation>& received, std::uint32_t n_source) {
  struct Row {
    std::vector<std::uint32_t> unknowns;
    gf2::Symbol payload = 0;
  };
  std::vector<Row> rows;
  rows.reserve(received.size());
  std::vector<std::vector<std::size_t>> adjacency(n_source);
  for (const auto& [combo, payload] : received) {
    Row r{combo, payload};
    for (std::uint32_t k : combo) {
      if (k >= n_source)
        throw DomainError("combination index outside the source range");
      adjacency[k].push_back(rows.size());
    }
    rows.push_back(std::move(r));
  }

  std::vector<std::optional<gf2::Symbol>> value(n_source);
  std::deque<std::size_t> ready;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (rows[r].unknowns.size() == 1) ready.push_back(r);

  while (!ready.empty()) {
    const std::size_t r = ready.front();
    ready.pop_front();
    if (rows[r].unknowns.size() != 1) continue;
    const std::uint32_t var = rows[r].unknowns.front();
    if (value[var]) continue;
    value[var] = rows[r].payload;
    for (std::size_t other : adjacency[var]) {
      auto& row = rows[other];
      const auto it = std::find(row.unknowns.begin(), row.unknowns.end(), var);
      if (it == row.unknowns.end()) continue;
      row.unknowns.erase(it);
      row.payload ^= *value[var];
      if (row.unknowns.size() == 1) ready.push_back(other);
    }
  }
  return value;
}

std::optional<std::vector<gf2::Symbol>> decode(
    const std::vector<ReceivedEquation>& received, std::uint32_t n_source) {
  auto peeled = peel_only(received, n_source);
  if (std::all_of(peeled.begin(), peeled.end(),
                  [](const auto& v) { return v.has_value(); })) {
    std::vector<gf2::Symbol> out(n_source);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = *peeled[k];
    return out;
  }
  if (received.size() < n_source) return std::nullopt;

  // Stalled with enough equations: Gaussian elimination fallback.
  gf2::LinearSystem sys;
  sys.n_vars = n_source;
  sys.rows.reserve(received.size());
  for (const auto& [combo, payload] : received) {
    gf2::BinaryRow row{BitVector(n_source), payload};
    for (std::uint32_t k : combo) row.coefficients.set(k);
    sys.rows.push_back(std::move(row));
  }
  const auto solved = gf2::solve_unique(sys, {});
  std::vector<gf2::Symbol> out(n_source);
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!solved[k]) return std::nullopt;
    out[k] = *solved[k];
  }
  return out;
}

double measure_overhead(std::span<const std::uint64_t> k_prime_per_destination,
                        std::uint64_t n_source) {
  std::uint64_t worst = 0;
  for (std::uint64_t k : k_prime_per_destination) worst = std::max(worst, k);
  return static_cast<double>(worst - n_source) / static_cast<double>(n_source);
}

}  // namespace emwrc
