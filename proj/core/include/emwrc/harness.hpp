#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "emwrc/analytics.hpp"
#include "emwrc/channel.hpp"
#include "emwrc/fountain.hpp"
#include "emwrc/separation.hpp"
#include "emwrc/strategy.hpp"

namespace emwrc {

// One experiment description, filled from CLI flags and/or a JSON file.
struct ExperimentConfig {
  std::vector<Scheme> schemes{Scheme::Owr};
  int users_lo = 4;
  int users_hi = 4;
  std::vector<double> eps_up{0.1};    // one entry = symmetric, else per-user
  std::vector<double> eps_down{0.1};  // one entry = symmetric, else per-user
  bool reconstruct = false;
  bool shuffle = false;
  std::uint64_t rounds = 100000;
  std::uint64_t trials = 10;
  std::uint32_t packets = 1000;
  std::optional<std::uint64_t> seed;
  std::string output;  // empty = stdout
  int threads = 1;
  bool sweep_simulate = false;        // sweep also runs Monte Carlo cells
  std::uint64_t round_cap_factor = 10;  // overhead round cap = factor * K

  // Throws ConfigError on invalid values; needs_seed enforces the
  // reproducibility contract of the simulate/overhead commands.
  void validate(bool needs_seed) const;
  ErasureProfile profile_for(int n_users) const;
};

ExperimentConfig config_from_json_file(const std::string& path);

// Parse helpers shared with the CLI: "4" or "2..16"; "0.1" or "0.1,0.2,...".
std::pair<int, int> parse_users_range(const std::string& text);
std::vector<double> parse_probability_list(const std::string& text);

// One metric value in the flat CSV schema. src/dst are 1-based user indices
// for pairwise metrics, the 1-based trial ordinal for per-trial metrics, and
// absent (-1) otherwise.
struct ResultRecord {
  std::string scheme;
  int n_users = 0;
  std::string eps_u;
  std::string eps_d;
  bool reconstruct = false;
  bool shuffle = false;
  std::string metric;
  int src = -1;
  int dst = -1;
  double value = 0.0;
  std::optional<double> std_err;
};

// Exact header: scheme,n_users,eps_u,eps_d,reconstruct,shuffle,metric,src,dst,value,stderr
std::string csv_header();
std::string to_csv(const std::vector<ResultRecord>& records);
std::string format_value(double v);  // 9 significant digits

// Runs one communication round (schedule, uplink, relay, downlink,
// separation) and returns every destination's separation result.
std::vector<SeparationResult> run_round(const TransmissionMatrix& base,
                                        const ErasureProfile& profile,
                                        bool reconstruct, bool shuffle,
                                        StreamKey trial_key,
                                        std::uint64_t round,
                                        std::span<const gf2::Symbol> x);

// analyze: pairwise matrix, summaries, equivalent uplink table (when
// reconstructing), normalized rate, overhead prediction, rate upper bound.
std::vector<ResultRecord> run_analyze(const ExperimentConfig& config);

// simulate: empirical per-pair unresolved frequencies over config.rounds
// rounds with binomial standard errors, plus max/avg/min summary rows.
std::vector<ResultRecord> run_simulate(const ExperimentConfig& config);

// overhead: full pipeline with the fountain layer until every user decoded
// every other user. Per-trial raw and normalized overheads (src = trial
// ordinal), their means with standard errors, and the analytic prediction.
std::vector<ResultRecord> run_overhead(const ExperimentConfig& config);

// sweep: cartesian product of schemes x user range through run_analyze (and
// run_simulate when sweep_simulate), cells aggregated in fixed order.
std::vector<ResultRecord> run_sweep(const ExperimentConfig& config);

// oracle-check: analytic recursions against exhaustive enumeration, one
// entry per recursion variant, plus equivalent-uplink table deviations when
// reconstruction is requested.
struct OracleCheckEntry {
  std::string label;
  double max_deviation = 0.0;
};
struct OracleCheckReport {
  std::vector<OracleCheckEntry> entries;
  double adopted_max = 0.0;  // corrected recursion, no reconstruction
  double tolerance = 1e-9;

  bool ok() const { return adopted_max <= tolerance; }
  std::string text() const;
};
OracleCheckReport run_oracle_check(const ExperimentConfig& config);

// Runs fn(0..n-1) on `threads` workers. Results must be written to
// disjoint, index-addressed slots so the aggregate is order-independent.
void parallel_for(std::uint64_t n, int threads,
                  const std::function<void(std::uint64_t)>& fn);

}  // namespace emwrc
