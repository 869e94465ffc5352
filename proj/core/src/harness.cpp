#include "emwrc/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "emwrc/fountain.hpp"
#include "emwrc/oracle.hpp"

namespace emwrc {

namespace {

constexpr int kDegreeMax = 78;
constexpr double kCodeRate = 0.9872;
constexpr double kDegreeOneMass = 0.01;

struct CellContext {
  std::string scheme;
  int n_users;
  std::string eps_u;
  std::string eps_d;
  bool reconstruct;
  bool shuffle;
};

std::string format_profile_side(const std::vector<double>& eps, int n) {
  const bool uniform =
      std::all_of(eps.begin(), eps.end(), [&](double v) { return v == eps.front(); });
  if (eps.size() == 1 || uniform) return format_value(eps.front());
  std::string out;
  for (int i = 0; i < n; ++i) {
    if (i) out += ';';
    out += format_value(eps[static_cast<std::size_t>(i)]);
  }
  return out;
}

CellContext make_context(const ExperimentConfig& cfg, Scheme scheme, int n) {
  const ErasureProfile p = cfg.profile_for(n);
  return {scheme_name(scheme), n,           format_profile_side(p.eps_up, n),
          format_profile_side(p.eps_down, n), cfg.reconstruct, cfg.shuffle};
}

ResultRecord make_record(const CellContext& ctx, std::string metric,
                         double value, int src = -1, int dst = -1,
                         std::optional<double> std_err = std::nullopt) {
  return ResultRecord{ctx.scheme,      ctx.n_users, ctx.eps_u,
                      ctx.eps_d,       ctx.reconstruct, ctx.shuffle,
                      std::move(metric), src,        dst,
                      value,           std_err};
}

double binomial_stderr(double p, std::uint64_t n) {
  return std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

gf2::Symbol payload_bit(StreamKey key) { return key.bits(0) & 1u; }

std::vector<gf2::Symbol> round_payloads(StreamKey round_key, int n_users) {
  const StreamKey src = stage_key(round_key, Stage::SourceData);
  std::vector<gf2::Symbol> x(static_cast<std::size_t>(n_users));
  for (int i = 0; i < n_users; ++i)
    x[static_cast<std::size_t>(i)] =
        payload_bit(src.child(static_cast<std::uint64_t>(i)));
  return x;
}

double max_offdiag_deviation(const PairwiseEeerMatrix& a,
                             const PairwiseEeerMatrix& b) {
  double dev = 0.0;
  for (int i = 0; i < a.n_users; ++i)
    for (int j = 0; j < a.n_users; ++j)
      if (i != j) dev = std::max(dev, std::abs(a.at(i, j) - b.at(i, j)));
  return dev;
}

}  // namespace

void ExperimentConfig::validate(bool needs_seed) const {
  if (schemes.empty()) throw ConfigError("no scheme selected");
  if (users_lo < 2 || users_hi < users_lo)
    throw ConfigError("users: need a value or range with N >= 2");
  for (const auto* side : {&eps_up, &eps_down}) {
    if (side->empty())
      throw ConfigError("erasure probabilities: empty list");
    if (side->size() > 1) {
      if (users_lo != users_hi)
        throw ConfigError("per-user erasure lists require a single N");
      if (static_cast<int>(side->size()) != users_lo)
        throw ConfigError("per-user erasure list length must equal N");
    }
    for (double e : *side)
      if (!(e >= 0.0 && e <= 1.0))
        throw ConfigError("erasure probabilities must lie in [0,1]");
  }
  if (rounds < 1) throw ConfigError("rounds must be >= 1");
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (packets < 1) throw ConfigError("packets must be >= 1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (needs_seed && !seed)
    throw ConfigError("simulation commands require --seed (reproducibility)");
}

ErasureProfile ExperimentConfig::profile_for(int n_users) const {
  ErasureProfile p;
  p.eps_up = eps_up.size() == 1
                 ? std::vector<double>(static_cast<std::size_t>(n_users), eps_up[0])
                 : eps_up;
  p.eps_down =
      eps_down.size() == 1
          ? std::vector<double>(static_cast<std::size_t>(n_users), eps_down[0])
          : eps_down;
  p.validate();
  return p;
}

std::pair<int, int> parse_users_range(const std::string& text) {
  const auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      const int n = std::stoi(text);
      return {n, n};
    }
    return {std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw ConfigError("users: expected N or A..B, got '" + text + "'");
  }
}

std::vector<double> parse_probability_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw ConfigError("erasure probability: expected number, got '" + item +
                        "'");
    }
  }
  if (out.empty()) throw ConfigError("erasure probability list is empty");
  return out;
}

ExperimentConfig config_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config JSON parse error: ") + e.what());
  }

  ExperimentConfig cfg;
  try {
    if (j.contains("scheme")) {
      const auto s = j["scheme"].get<std::string>();
      cfg.schemes = s == "all"
                        ? std::vector<Scheme>{Scheme::Owr, Scheme::Mpwr,
                                              Scheme::Oppwr}
                        : std::vector<Scheme>{parse_scheme(s)};
    }
    if (j.contains("users")) {
      if (j["users"].is_number_integer())
        cfg.users_lo = cfg.users_hi = j["users"].get<int>();
      else
        std::tie(cfg.users_lo, cfg.users_hi) =
            parse_users_range(j["users"].get<std::string>());
    }
    for (auto [key, field] :
         {std::pair{"eps_up", &cfg.eps_up}, std::pair{"eps_down", &cfg.eps_down}}) {
      if (!j.contains(key)) continue;
      if (j[key].is_number())
        *field = {j[key].get<double>()};
      else if (j[key].is_array())
        *field = j[key].get<std::vector<double>>();
      else
        *field = parse_probability_list(j[key].get<std::string>());
    }
    if (j.contains("reconstruct")) cfg.reconstruct = j["reconstruct"].get<bool>();
    if (j.contains("shuffle")) cfg.shuffle = j["shuffle"].get<bool>();
    if (j.contains("rounds")) cfg.rounds = j["rounds"].get<std::uint64_t>();
    if (j.contains("trials")) cfg.trials = j["trials"].get<std::uint64_t>();
    if (j.contains("packets")) cfg.packets = j["packets"].get<std::uint32_t>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("simulate")) cfg.sweep_simulate = j["simulate"].get<bool>();
    if (j.contains("round_cap_factor"))
      cfg.round_cap_factor = j["round_cap_factor"].get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config field error: ") + e.what());
  }
  return cfg;
}

std::string format_value(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string csv_header() {
  return "scheme,n_users,eps_u,eps_d,reconstruct,shuffle,metric,src,dst,value,"
         "stderr";
}

std::string to_csv(const std::vector<ResultRecord>& records) {
  std::string out = csv_header();
  out += '\n';
  for (const auto& r : records) {
    out += r.scheme;
    out += ',';
    out += std::to_string(r.n_users);
    out += ',';
    out += r.eps_u;
    out += ',';
    out += r.eps_d;
    out += ',';
    out += r.reconstruct ? '1' : '0';
    out += ',';
    out += r.shuffle ? '1' : '0';
    out += ',';
    out += r.metric;
    out += ',';
    if (r.src >= 0) out += std::to_string(r.src);
    out += ',';
    if (r.dst >= 0) out += std::to_string(r.dst);
    out += ',';
    out += format_value(r.value);
    out += ',';
    if (r.std_err) out += format_value(*r.std_err);
    out += '\n';
  }
  return out;
}

void parallel_for(std::uint64_t n, int threads,
                  const std::function<void(std::uint64_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::uint64_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const auto count = static_cast<std::uint64_t>(threads) < n
                         ? static_cast<std::size_t>(threads)
                         : static_cast<std::size_t>(n);
  pool.reserve(count);
  for (std::size_t t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

std::vector<SeparationResult> run_round(const TransmissionMatrix& base,
                                        const ErasureProfile& profile,
                                        bool reconstruct, bool shuffle,
                                        StreamKey trial_key,
                                        std::uint64_t round,
                                        std::span<const gf2::Symbol> x) {
  // Identity rows are user-symmetric, so shuffling is a no-op there.
  const Schedule sched = next_schedule(
      trial_key, round, base.n_users, shuffle && base.scheme != Scheme::Owr);
  const TransmissionMatrix A = apply_schedule(base, sched);
  const StreamKey round_key = trial_key.child(round);
  const UplinkOutcome up = uplink(A, x, profile, round_key);
  const ReceivedMatrix relay =
      reconstruct ? relay_reconstruct(up, A) : relay_forward(up);
  std::vector<SeparationResult> out;
  out.reserve(static_cast<std::size_t>(base.n_users));
  for (int j = 0; j < base.n_users; ++j) {
    const ReceivedMatrix rx = downlink_for_user(relay, j, profile, round_key);
    out.push_back(separate(rx, j, x[static_cast<std::size_t>(j)]));
  }
  return out;
}

std::vector<ResultRecord> run_analyze(const ExperimentConfig& cfg) {
  cfg.validate(false);
  std::vector<ResultRecord> records;
  for (const Scheme scheme : cfg.schemes) {
    for (int n = cfg.users_lo; n <= cfg.users_hi; ++n) {
      const CellContext ctx = make_context(cfg, scheme, n);
      const ErasureProfile profile = cfg.profile_for(n);
      const PairwiseEeerMatrix mat =
          analytic_eeer(scheme, profile, cfg.reconstruct);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (i != j)
            records.push_back(make_record(ctx, "pairwise_eeer", mat.at(i, j),
                                          i + 1, j + 1));
      records.push_back(make_record(ctx, "eeer_max", mat.max()));
      records.push_back(make_record(ctx, "eeer_avg", mat.average()));
      records.push_back(make_record(ctx, "eeer_min", mat.min()));
      if (cfg.reconstruct && scheme != Scheme::Owr) {
        const EquivalentErasureTable t = equivalent_uplink(scheme, profile);
        for (int i = 0; i < n; ++i) {
          const auto u = static_cast<std::size_t>(i);
          if (!std::isnan(t.before[u]))
            records.push_back(
                make_record(ctx, "equiv_uplink_before", t.before[u], i + 1));
          if (!std::isnan(t.within[u]))
            records.push_back(
                make_record(ctx, "equiv_uplink_within", t.within[u], i + 1));
        }
      }
      records.push_back(make_record(
          ctx, "normalized_rate", normalized_rate(scheme, mat.max(), n)));
      if (mat.max() < 1.0)
        records.push_back(make_record(ctx, "overhead_prediction",
                                      overhead_prediction(mat.max())));
      records.push_back(
          make_record(ctx, "rate_upper_bound", rate_upper_bound(profile)));
    }
  }
  return records;
}

std::vector<ResultRecord> run_simulate(const ExperimentConfig& cfg) {
  cfg.validate(true);
  std::vector<ResultRecord> records;
  const StreamKey master(*cfg.seed);
  for (const Scheme scheme : cfg.schemes) {
    for (int n = cfg.users_lo; n <= cfg.users_hi; ++n) {
      const CellContext ctx = make_context(cfg, scheme, n);
      const ErasureProfile profile = cfg.profile_for(n);
      const TransmissionMatrix base = build_matrix(scheme, n);
      const StreamKey trial_key = stage_key(master, Stage::Trial).child(0);
      const std::uint64_t rounds = cfg.rounds;

      // Fixed chunk partition: per-chunk integer counts sum identically
      // for any worker count.
      const std::uint64_t chunk_count = std::min<std::uint64_t>(rounds, 256);
      const auto nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
      std::vector<std::vector<std::uint64_t>> chunk_counts(
          chunk_count, std::vector<std::uint64_t>(nn, 0));
      parallel_for(chunk_count, cfg.threads, [&](std::uint64_t c) {
        auto& counts = chunk_counts[c];
        const std::uint64_t begin = rounds * c / chunk_count;
        const std::uint64_t end = rounds * (c + 1) / chunk_count;
        for (std::uint64_t r = begin; r < end; ++r) {
          const auto x = round_payloads(trial_key.child(r), n);
          const auto results = run_round(base, profile, cfg.reconstruct,
                                         cfg.shuffle, trial_key, r, x);
          for (int j = 0; j < n; ++j) {
            for (int i = 0; i < n; ++i) {
              if (i == j) continue;
              const auto& v =
                  results[static_cast<std::size_t>(j)].values[static_cast<std::size_t>(i)];
              if (!v)
                ++counts[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                         static_cast<std::size_t>(j)];
              else if (*v != x[static_cast<std::size_t>(i)])
                throw InconsistentSystem(
                    "separated value disagrees with transmitted packet");
            }
          }
        }
      });

      std::vector<std::uint64_t> totals(nn, 0);
      for (const auto& counts : chunk_counts)
        for (std::size_t k = 0; k < nn; ++k) totals[k] += counts[k];

      double max_rate = 0.0, min_rate = 1.0, var_sum = 0.0;
      double max_se = 0.0, min_se = 0.0;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          if (i == j) continue;
          const double p =
              static_cast<double>(totals[static_cast<std::size_t>(i) *
                                             static_cast<std::size_t>(n) +
                                         static_cast<std::size_t>(j)]) /
              static_cast<double>(rounds);
          const double se = binomial_stderr(p, rounds);
          records.push_back(
              make_record(ctx, "pairwise_eeer_sim", p, i + 1, j + 1, se));
          if (p >= max_rate) {
            max_rate = p;
            max_se = se;
          }
          if (p <= min_rate) {
            min_rate = p;
            min_se = se;
          }
          var_sum += p * (1.0 - p) / static_cast<double>(rounds);
        }
      }
      const double pairs = static_cast<double>(n) * (n - 1);
      records.push_back(make_record(ctx, "eeer_max_sim", max_rate, -1, -1, max_se));
      records.push_back(make_record(ctx, "eeer_avg_sim",
                                    [&] {
                                      double s = 0.0;
                                      for (auto t : totals) s += static_cast<double>(t);
                                      return s / (pairs * static_cast<double>(rounds));
                                    }(),
                                    -1, -1, std::sqrt(var_sum) / pairs));
      records.push_back(make_record(ctx, "eeer_min_sim", min_rate, -1, -1, min_se));
    }
  }
  return records;
}

std::vector<ResultRecord> run_overhead(const ExperimentConfig& cfg) {
  cfg.validate(true);
  std::vector<ResultRecord> records;
  const StreamKey master(*cfg.seed);
  const DegreeDistribution dist =
      build_distribution(kDegreeMax, kCodeRate, kDegreeOneMass);

  for (const Scheme scheme : cfg.schemes) {
    for (int n = cfg.users_lo; n <= cfg.users_hi; ++n) {
      const CellContext ctx = make_context(cfg, scheme, n);
      const ErasureProfile profile = cfg.profile_for(n);
      const TransmissionMatrix base = build_matrix(scheme, n);
      const std::uint32_t K = cfg.packets;
      const std::uint64_t cap = cfg.round_cap_factor * K;
      const int L = slots_per_round(scheme, n);

      std::vector<double> raw(cfg.trials, 0.0), normalized(cfg.trials, 0.0);
      parallel_for(cfg.trials, cfg.threads, [&](std::uint64_t t) {
        const StreamKey trial_key = stage_key(master, Stage::Trial).child(t);
        const StreamKey source_key = stage_key(trial_key, Stage::SourceData);
        std::vector<std::vector<gf2::Symbol>> sources(
            static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          auto& s = sources[static_cast<std::size_t>(i)];
          s.resize(K);
          const StreamKey k = source_key.child(static_cast<std::uint64_t>(i));
          for (std::uint32_t p = 0; p < K; ++p) s[p] = k.bits(p) & 1u;
        }

        // decoders[dst][src]; a destination finishes when all its source
        // streams reach rank K.
        std::vector<std::vector<LtDecoder>> decoders;
        decoders.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) {
          std::vector<LtDecoder> row;
          row.reserve(static_cast<std::size_t>(n));
          for (int i = 0; i < n; ++i) row.emplace_back(K);
          decoders.push_back(std::move(row));
        }
        std::vector<std::uint64_t> finish(static_cast<std::size_t>(n), 0);
        int destinations_done = 0;

        std::vector<gf2::Symbol> x(static_cast<std::size_t>(n));
        for (std::uint64_t r = 0; r < cap && destinations_done < n; ++r) {
          for (int i = 0; i < n; ++i)
            x[static_cast<std::size_t>(i)] =
                encode_next(dist, trial_key, i, r,
                            sources[static_cast<std::size_t>(i)])
                    .payload;
          const auto results = run_round(base, profile, cfg.reconstruct,
                                         cfg.shuffle, trial_key, r, x);
          for (int j = 0; j < n; ++j) {
            const auto ju = static_cast<std::size_t>(j);
            if (finish[ju]) continue;
            bool done = true;
            for (int i = 0; i < n; ++i) {
              if (i == j) continue;
              auto& dec = decoders[ju][static_cast<std::size_t>(i)];
              const auto& v = results[ju].values[static_cast<std::size_t>(i)];
              if (v && !dec.complete())
                dec.add(packet_combination(dist, trial_key, i, r, K), *v);
              done = done && dec.complete();
            }
            if (done) {
              finish[ju] = r + 1;
              ++destinations_done;
            }
          }
        }
        if (destinations_done < n)
          throw RoundLimitExceeded("overhead run hit the round cap before "
                                   "every destination decoded");
        for (int j = 0; j < n; ++j)
          for (int i = 0; i < n; ++i)
            if (i != j &&
                decoders[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]
                        .packets() != sources[static_cast<std::size_t>(i)])
              throw InconsistentSystem("decoded stream disagrees with source");

        raw[t] = measure_overhead(finish, K);
        normalized[t] = raw[t] / static_cast<double>(L);
      });

      for (std::uint64_t t = 0; t < cfg.trials; ++t) {
        records.push_back(make_record(ctx, "overhead", raw[t],
                                      static_cast<int>(t) + 1));
        records.push_back(make_record(ctx, "overhead_normalized", normalized[t],
                                      static_cast<int>(t) + 1));
      }
      const auto mean_se = [&](const std::vector<double>& v) {
        double mean = 0.0;
        for (double d : v) mean += d;
        mean /= static_cast<double>(v.size());
        double var = 0.0;
        for (double d : v) var += (d - mean) * (d - mean);
        const double se = v.size() > 1
                              ? std::sqrt(var / (static_cast<double>(v.size()) - 1.0) /
                                          static_cast<double>(v.size()))
                              : 0.0;
        return std::pair{mean, se};
      };
      const auto [raw_mean, raw_se] = mean_se(raw);
      const auto [norm_mean, norm_se] = mean_se(normalized);
      records.push_back(make_record(ctx, "overhead_mean", raw_mean, -1, -1, raw_se));
      records.push_back(
          make_record(ctx, "overhead_normalized_mean", norm_mean, -1, -1, norm_se));

      const PairwiseEeerMatrix mat =
          analytic_eeer(scheme, profile, cfg.reconstruct);
      const double eps_f = cfg.shuffle ? mat.average() : mat.max();
      if (eps_f < 1.0)
        records.push_back(make_record(ctx, "overhead_prediction",
                                      overhead_prediction(eps_f)));
    }
  }
  return records;
}

std::vector<ResultRecord> run_sweep(const ExperimentConfig& cfg) {
  cfg.validate(cfg.sweep_simulate);
  struct Cell {
    Scheme scheme;
    int n;
  };
  std::vector<Cell> cells;
  for (const Scheme scheme : cfg.schemes)
    for (int n = cfg.users_lo; n <= cfg.users_hi; ++n)
      cells.push_back({scheme, n});

  const StreamKey master(cfg.seed.value_or(0));
  std::vector<std::vector<ResultRecord>> slots(cells.size());
  parallel_for(cells.size(), cfg.threads, [&](std::uint64_t c) {
    ExperimentConfig cell_cfg = cfg;
    cell_cfg.schemes = {cells[c].scheme};
    cell_cfg.users_lo = cell_cfg.users_hi = cells[c].n;
    cell_cfg.threads = 1;  // cells are the parallel unit
    try {
      auto recs = run_analyze(cell_cfg);
      if (cfg.sweep_simulate) {
        cell_cfg.seed = stage_key(master, Stage::SweepCell).child(c).raw();
        auto sim = run_simulate(cell_cfg);
        recs.insert(recs.end(), sim.begin(), sim.end());
      }
      slots[c] = std::move(recs);
    } catch (const Error& e) {
      // Partial failure: flag the cell and keep sweeping.
      const CellContext ctx = make_context(cfg, cells[c].scheme, cells[c].n);
      slots[c] = {make_record(ctx, "error", std::nan(""))};
      std::fprintf(stderr, "sweep cell %s N=%d failed: %s\n",
                   scheme_name(cells[c].scheme).c_str(), cells[c].n, e.what());
    }
  });

  std::vector<ResultRecord> records;
  for (auto& s : slots)
    records.insert(records.end(), s.begin(), s.end());
  return records;
}

OracleCheckReport run_oracle_check(const ExperimentConfig& cfg) {
  cfg.validate(false);
  OracleCheckReport report;
  const auto add = [&](std::string label, double dev, bool adopted) {
    report.entries.push_back({std::move(label), dev});
    if (adopted) report.adopted_max = std::max(report.adopted_max, dev);
  };

  for (const Scheme scheme : cfg.schemes) {
    for (int n = cfg.users_lo; n <= cfg.users_hi; ++n) {
      const ErasureProfile profile = cfg.profile_for(n);
      const std::string tag = scheme_name(scheme) + " N=" + std::to_string(n);
      if (scheme == Scheme::Owr) {
        const auto exact = oracle::exact_eeer(scheme, profile, false);
        add(tag + " closed-form",
            max_offdiag_deviation(eeer_owr(profile), exact), true);
        continue;
      }
      const auto exact_plain = oracle::exact_eeer(scheme, profile, false);
      add(tag + " corrected recursion",
          max_offdiag_deviation(
              analytic_eeer(scheme, profile, false, PcVariant::Corrected),
              exact_plain),
          true);
      add(tag + " duplicated-factor Pc variant",
          max_offdiag_deviation(
              analytic_eeer(scheme, profile, false, PcVariant::DuplicatedFactor),
              exact_plain),
          false);
      if (cfg.reconstruct) {
        const auto exact_rec = oracle::exact_eeer(scheme, profile, true);
        add(tag + " reconstruction, chain-sum equivalents",
            max_offdiag_deviation(analytic_eeer(scheme, profile, true),
                                  exact_rec),
            false);
        const auto exact_table = oracle::exact_equivalent_uplink(scheme, profile);
        const PairwiseEeerMatrix with_exact_rates =
            scheme == Scheme::Mpwr
                ? eeer_mpwr(exact_table.position_rates(), profile)
                : eeer_oppwr(exact_table.position_rates(), profile);
        add(tag + " reconstruction, enumerated equivalents",
            max_offdiag_deviation(with_exact_rates, exact_rec), false);

        const auto analytic_table = equivalent_uplink(scheme, profile);
        double table_dev = 0.0;
        for (std::size_t i = 0; i < analytic_table.before.size(); ++i) {
          if (!std::isnan(analytic_table.before[i]) &&
              !std::isnan(exact_table.before[i]))
            table_dev = std::max(
                table_dev,
                std::abs(analytic_table.before[i] - exact_table.before[i]));
          if (!std::isnan(analytic_table.within[i]) &&
              !std::isnan(exact_table.within[i]))
            table_dev = std::max(
                table_dev,
                std::abs(analytic_table.within[i] - exact_table.within[i]));
        }
        add(tag + " equivalent-uplink table", table_dev, false);
      }
    }
  }
  return report;
}

std::string OracleCheckReport::text() const {
  std::string out;
  for (const auto& e : entries) {
    out += e.label;
    out += ": max deviation ";
    out += format_value(e.max_deviation);
    out += '\n';
  }
  out += "adopted recursion max deviation: ";
  out += format_value(adopted_max);
  out += ok() ? " (within tolerance " : " (EXCEEDS tolerance ";
  out += format_value(tolerance);
  out += ")\n";
  return out;
}

}  // namespace emwrc
