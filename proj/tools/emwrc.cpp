// Command-line front end: analyze | oracle-check | simulate | overhead | sweep.
// Exit codes: 0 success, 1 validation error, 2 oracle deviation, 3 runtime limit.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "emwrc/harness.hpp"

namespace {

struct RawOptions {
  std::string scheme = "owr";
  std::string users = "4";
  std::string eps_up = "0.1";
  std::string eps_down = "0.1";
  bool reconstruct = false;
  bool shuffle = false;
  bool simulate = false;
  std::uint64_t rounds = 100000;
  std::uint64_t trials = 10;
  std::uint32_t packets = 1000;
  std::uint64_t seed = 0;
  std::uint64_t round_cap_factor = 10;
  int threads = 1;
  std::string output;
  std::string config_path;
};

void add_common_options(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--scheme", o.scheme, "owr | mpwr | oppwr | all");
  cmd->add_option("--users", o.users, "number of users N, or a range A..B");
  cmd->add_option("--eps-up", o.eps_up,
                  "uplink erasure probability, or comma-separated per-user list");
  cmd->add_option("--eps-down", o.eps_down,
                  "downlink erasure probability, or comma-separated list");
  cmd->add_flag("--reconstruct", o.reconstruct, "relay matrix reconstruction");
  cmd->add_flag("--shuffle", o.shuffle, "shuffled per-round transmission order");
  cmd->add_option("--rounds", o.rounds, "communication rounds to simulate");
  cmd->add_option("--trials", o.trials, "independent trials");
  cmd->add_option("--packets", o.packets, "source packets per user (K)");
  cmd->add_option("--seed", o.seed, "master seed (required to simulate)");
  cmd->add_option("--output", o.output, "output file (default: stdout)");
  cmd->add_option("--config", o.config_path, "JSON config file; flags override it");
  cmd->add_option("--threads", o.threads, "worker threads");
}

std::vector<emwrc::Scheme> parse_schemes(const std::string& s) {
  if (s == "all")
    return {emwrc::Scheme::Owr, emwrc::Scheme::Mpwr, emwrc::Scheme::Oppwr};
  return {emwrc::parse_scheme(s)};
}

emwrc::ExperimentConfig build_config(const CLI::App* cmd, const RawOptions& o) {
  emwrc::ExperimentConfig cfg;
  if (!o.config_path.empty()) cfg = emwrc::config_from_json_file(o.config_path);
  if (cmd->count("--scheme")) cfg.schemes = parse_schemes(o.scheme);
  if (cmd->count("--users"))
    std::tie(cfg.users_lo, cfg.users_hi) = emwrc::parse_users_range(o.users);
  if (cmd->count("--eps-up")) cfg.eps_up = emwrc::parse_probability_list(o.eps_up);
  if (cmd->count("--eps-down"))
    cfg.eps_down = emwrc::parse_probability_list(o.eps_down);
  if (cmd->count("--reconstruct")) cfg.reconstruct = o.reconstruct;
  if (cmd->count("--shuffle")) cfg.shuffle = o.shuffle;
  if (cmd->count("--rounds")) cfg.rounds = o.rounds;
  if (cmd->count("--trials")) cfg.trials = o.trials;
  if (cmd->count("--packets")) cfg.packets = o.packets;
  if (cmd->count("--seed")) cfg.seed = o.seed;
  if (cmd->count("--output")) cfg.output = o.output;
  if (cmd->count("--threads")) cfg.threads = o.threads;
  if (cmd->get_option_no_throw("--simulate") && cmd->count("--simulate"))
    cfg.sweep_simulate = o.simulate;
  if (cmd->get_option_no_throw("--round-cap-factor") &&
      cmd->count("--round-cap-factor"))
    cfg.round_cap_factor = o.round_cap_factor;
  return cfg;
}

int write_output(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::fwrite(data.data(), 1, data.size(), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open output file: " << path << "\n";
    return 1;
  }
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fountain-coded data sharing over erasure multi-way relay channels"};
  app.require_subcommand(1);

  RawOptions opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "closed-form EEER, rates and overhead prediction");
  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "analytic recursions vs exhaustive enumeration");
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo round pipeline without the fountain layer");
  CLI::App* overhead = app.add_subcommand(
      "overhead", "full pipeline until every user decodes every stream");
  CLI::App* sweep =
      app.add_subcommand("sweep", "grid of schemes x users through analyze");
  for (CLI::App* cmd : {analyze, oracle_check, simulate, overhead, sweep})
    add_common_options(cmd, opt);
  sweep->add_flag("--simulate", opt.simulate,
                  "also run the Monte Carlo pipeline per cell");
  overhead->add_option("--round-cap-factor", opt.round_cap_factor,
                       "abort when rounds exceed factor * K");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    const emwrc::ExperimentConfig cfg = build_config(cmd, opt);
    if (cmd == analyze)
      return write_output(cfg.output, emwrc::to_csv(emwrc::run_analyze(cfg)));
    if (cmd == simulate)
      return write_output(cfg.output, emwrc::to_csv(emwrc::run_simulate(cfg)));
    if (cmd == overhead)
      return write_output(cfg.output, emwrc::to_csv(emwrc::run_overhead(cfg)));
    if (cmd == sweep)
      return write_output(cfg.output, emwrc::to_csv(emwrc::run_sweep(cfg)));
    const emwrc::OracleCheckReport report = emwrc::run_oracle_check(cfg);
    const int rc = write_output(cfg.output, report.text());
    if (rc != 0) return rc;
    return report.ok() ? 0 : 2;
  } catch (const emwrc::TooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const emwrc::RoundLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const emwrc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
