// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each check pins its tolerance in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "emwrc/fountain.hpp"
#include "emwrc/harness.hpp"
#include "emwrc/oracle.hpp"
#include "emwrc/separation.hpp"

using namespace emwrc;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes << "    FAILED: " << what << "\n";
    }
  }
  void note(const std::string& line) { notes << "    " << line << "\n"; }
};

double max_dev(const PairwiseEeerMatrix& a, const PairwiseEeerMatrix& b) {
  double dev = 0.0;
  for (int i = 0; i < a.n_users; ++i)
    for (int j = 0; j < a.n_users; ++j)
      if (i != j) dev = std::max(dev, std::abs(a.at(i, j) - b.at(i, j)));
  return dev;
}

ErasureProfile asymmetric_a(int n) {
  ErasureProfile p;
  for (int i = 0; i < n; ++i) {
    p.eps_up.push_back(0.05 + 0.04 * i);
    p.eps_down.push_back(0.12 - 0.02 * i);
  }
  return p;
}

ErasureProfile asymmetric_b(int n) {
  ErasureProfile p;
  for (int i = 0; i < n; ++i) {
    p.eps_up.push_back(0.3 / (i + 1));
    p.eps_down.push_back(0.05 + 0.03 * (i % 2));
  }
  return p;
}

std::vector<BitVector> full_survival(const TransmissionMatrix& A) {
  std::vector<BitVector> s;
  for (const auto& r : A.rows) s.push_back(r);
  return s;
}

// ---- criteria -------------------------------------------------------------

void criterion_closed_forms(Check& c) {
  const auto mat = eeer_owr(ErasureProfile::symmetric(4, 0.1, 0.1));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j)
        c.require(std::abs(mat.at(i, j) - 0.19) <= 1e-15,
                  "pairwise EEER != 0.19");
  c.require(std::abs(overhead_prediction(mat.max()) - 0.19 / 0.81) <= 1e-12,
            "overhead prediction != 0.19/0.81");
}

void criterion_worked_examples(Check& c) {
  // Ring example: third slot loses x3; rows 1 xor 2 restore it.
  {
    const auto A = build_matrix(Scheme::Oppwr, 3);
    const std::vector<gf2::Symbol> x = {1, 0, 1};
    auto survival = full_survival(A);
    survival[2].set(2, false);
    const auto up = apply_uplink(A, x, std::move(survival));
    BitVector damaged(3);
    damaged.set(0);
    c.require(up.received.rows[2].coefficients == damaged,
              "ring damage pattern wrong");
    const auto fixed = relay_reconstruct(up, A);
    c.require(fixed.rows[2].coefficients == A.rows[2],
              "ring reconstruction failed to restore the wrap row");
    c.require(*fixed.rows[2].payload == (x[0] ^ x[2]),
              "restored payload is not x1 xor x3");
  }
  // Chain counterpart: x3 appears once, the damage is unrepairable.
  {
    const auto A = build_matrix(Scheme::Mpwr, 3);
    const std::vector<gf2::Symbol> x = {1, 0, 1};
    auto survival = full_survival(A);
    survival[1].set(2, false);
    const auto fixed = relay_reconstruct(apply_uplink(A, x, std::move(survival)), A);
    BitVector bare(3);
    bare.set(1);
    c.require(fixed.rows[1].coefficients == bare,
              "chain damage must stay unrepaired");
  }
  // Separation example: x2 lost in uplink, third row lost in downlink.
  {
    ReceivedMatrix rx;
    rx.origin = Origin::User;
    rx.user = 0;
    rx.n_users = 4;
    gf2::BinaryRow r0{BitVector(4), gf2::Symbol{0}};
    r0.coefficients.set(0);
    r0.coefficients.set(1);
    gf2::BinaryRow r1{BitVector(4), gf2::Symbol{1}};
    r1.coefficients.set(2);
    rx.rows = {r0, r1, gf2::BinaryRow::erased_row(4)};
    const auto sep = separate(rx, 0, 1);
    c.require(sep.resolved(1) && *sep.values[1] == 1, "x2 must resolve to 1");
    c.require(sep.resolved(2) && *sep.values[2] == 1, "x3 must resolve to 1");
    c.require(!sep.resolved(3), "x4 must be declared erased");
  }
}

void criterion_oracle_equivalence(Check& c) {
  double plain_worst = 0.0, recon_worst = 0.0;
  for (const Scheme s : {Scheme::Mpwr, Scheme::Oppwr}) {
    for (int n = 2; n <= 5; ++n) {
      std::vector<ErasureProfile> profiles;
      for (const double e : {0.0, 0.05, 0.1, 0.3})
        profiles.push_back(ErasureProfile::symmetric(n, e, e));
      profiles.push_back(asymmetric_a(n));
      profiles.push_back(asymmetric_b(n));
      for (const auto& profile : profiles) {
        plain_worst = std::max(
            plain_worst, max_dev(analytic_eeer(s, profile, false),
                                 oracle::exact_eeer(s, profile, false)));
        recon_worst = std::max(
            recon_worst, max_dev(analytic_eeer(s, profile, true),
                                 oracle::exact_eeer(s, profile, true)));
      }
    }
  }
  c.note("corrected recursions vs enumeration, no reconstruction: max dev " +
         format_value(plain_worst));
  c.require(plain_worst <= 1e-9, "plain recursions deviate beyond 1e-9");
  c.note("reconstruction-adjusted recursions: max dev " +
         format_value(recon_worst) +
         " (documented model gap: per-row equivalent rates ignore repair "
         "correlation)");
  c.require(recon_worst <= 0.06,
            "reconstruction-adjusted deviation exceeded the recorded 0.06 bound");
}

void criterion_remarks(Check& c) {
  for (int n = 3; n <= 10; ++n) {
    for (const double e : {0.05, 0.1}) {
      const auto chain = eeer_mpwr(ErasureProfile::symmetric(n, e, e));
      c.require(std::abs(chain.max() - chain.at(n - 1, 0)) <= 1e-12,
                "chain max EEER must be the full-chain pair (N,1)");
      const auto ring = eeer_oppwr(ErasureProfile::symmetric(n, e, e));
      c.require(std::abs(ring.max() - ring.at(n / 2, 0)) <= 1e-12,
                "ring max EEER must sit at source offset floor(N/2)+1");
    }
  }
}

void criterion_asymptotics(Check& c) {
  const int n = 50;
  for (const double e : {0.1, 0.3}) {
    const double pc_limit = (1.0 - e) / (2.0 - e);
    const double eq_limit = e / (2.0 - e);
    const auto chain = equivalent_uplink(Scheme::Mpwr,
                                         ErasureProfile::symmetric(n, e, e));
    double pc_before = 0.0, pc_within = 0.0, eq_before = 0.0, eq_within = 0.0;
    int nb = 0, nw = 0;
    for (int i = 0; i < n; ++i) {
      const auto iu = static_cast<std::size_t>(i);
      if (!std::isnan(chain.pc_before[iu])) {
        pc_before += chain.pc_before[iu];
        eq_before += chain.before[iu];
        ++nb;
      }
      if (!std::isnan(chain.pc_within[iu])) {
        pc_within += chain.pc_within[iu];
        eq_within += chain.within[iu];
        ++nw;
      }
    }
    pc_before /= nb;
    pc_within /= nw;
    eq_before /= nb;
    eq_within /= nw;

    const auto ring = equivalent_uplink(Scheme::Oppwr,
                                        ErasureProfile::symmetric(n, e, e));
    double ring_pc = 0.0, ring_eq = 0.0;
    for (int i = 0; i < n; ++i) {
      ring_pc += ring.pc_before[static_cast<std::size_t>(i)];
      ring_eq += ring.before[static_cast<std::size_t>(i)];
    }
    ring_pc /= n;
    ring_eq /= n;

    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "eps=%.1f: chain mean Pc %.6f/%.6f vs limit %.6f; ring Pc "
                  "%.6f; chain mean equiv %.6f/%.6f vs limit %.6f; ring equiv "
                  "%.6f",
                  e, pc_before, pc_within, pc_limit, ring_pc, eq_before,
                  eq_within, eq_limit, ring_eq);
    c.note(buf);

    // As specified: N = 50, tolerance 0.01. The chain mean carries an O(1/N)
    // boundary deficit of ~1/((N-1)(1-eb^2)) that still exceeds 0.01 at
    // N = 50, so these two checks fail; see the notes for the measured gap.
    c.require(std::abs(pc_before - pc_limit) <= 0.01,
              "chain mean Pc(i,i-1) not within 0.01 of the limit at N=50");
    c.require(std::abs(pc_within - pc_limit) <= 0.01,
              "chain mean Pc(i,i) not within 0.01 of the limit at N=50");
    c.require(std::abs(ring_pc - pc_limit) <= 0.01,
              "ring Pc not within 0.01 of the limit");
    c.require(std::abs(eq_before - eq_limit) <= 0.01,
              "chain mean equivalent rate not within 0.01 of the limit");
    c.require(std::abs(eq_within - eq_limit) <= 0.01,
              "chain mean equivalent rate not within 0.01 of the limit");
    c.require(std::abs(ring_eq - eq_limit) <= 0.01,
              "ring equivalent rate not within 0.01 of the limit");
  }
}

void criterion_rate_bound(Check& c) {
  for (int n = 2; n <= 16; ++n) {
    const auto clean = ErasureProfile::symmetric(n, 0.0, 0.0);
    const double bound = rate_upper_bound(clean);
    const double mpwr = normalized_rate(
        Scheme::Mpwr, analytic_eeer(Scheme::Mpwr, clean, false).max(), n);
    c.require(mpwr == bound, "clean-channel chain rate must equal the bound");
    const double owr = normalized_rate(
        Scheme::Owr, analytic_eeer(Scheme::Owr, clean, false).max(), n);
    const double ring = normalized_rate(
        Scheme::Oppwr, analytic_eeer(Scheme::Oppwr, clean, false).max(), n);
    c.require(owr == ring, "OWR and the ring must tie at zero erasure");
    c.require(owr == 1.0 / n, "OWR clean rate must be 1/N");
    c.require(owr < bound, "1/N must sit strictly below the bound");
  }
}

void criterion_regimes(Check& c) {
  std::string sequence;
  std::vector<Scheme> best_by_n;
  for (int n = 2; n <= 16; ++n) {
    const auto profile = ErasureProfile::symmetric(n, 0.1, 0.1);
    Scheme best = Scheme::Owr;
    double best_rate = -1.0;
    for (const Scheme s : {Scheme::Owr, Scheme::Mpwr, Scheme::Oppwr}) {
      const double r =
          normalized_rate(s, analytic_eeer(s, profile, false).max(), n);
      if (r > best_rate) {
        best_rate = r;
        best = s;
      }
    }
    best_by_n.push_back(best);
    sequence += scheme_name(best) + " ";
  }
  c.note("best scheme for N=2..16: " + sequence);
  c.note("reference regimes for comparison: MPWR for N <= 4, OPPWR for "
         "5 <= N <= 8, OWR for 9 <= N (nominal boundaries; the monotone "
         "order, not the exact boundaries, is the pass condition)");
  // Monotone regime order: MPWR block, then OPPWR block, then OWR forever.
  int phase = 0;
  bool ordered = true;
  bool seen[3] = {false, false, false};
  for (const Scheme s : best_by_n) {
    const int rank = s == Scheme::Mpwr ? 0 : (s == Scheme::Oppwr ? 1 : 2);
    seen[rank] = true;
    if (rank < phase) ordered = false;
    phase = std::max(phase, rank);
  }
  c.require(ordered, "regime order must be MPWR, then OPPWR, then OWR");
  c.require(seen[0] && seen[1] && seen[2],
            "all three regimes must appear over N=2..16");
}

void criterion_monte_carlo(Check& c) {
  for (const Scheme s : {Scheme::Mpwr, Scheme::Oppwr}) {
    const auto profile = ErasureProfile::symmetric(4, 0.1, 0.1);
    const auto exact = oracle::exact_eeer(s, profile, false);

    ExperimentConfig cfg;
    cfg.schemes = {s};
    cfg.users_lo = cfg.users_hi = 4;
    cfg.eps_up = {0.1};
    cfg.eps_down = {0.1};
    cfg.rounds = 100000;
    cfg.seed = 42;
    cfg.threads = 2;
    double plain_worst_sigmas = 0.0;
    for (const auto& r : run_simulate(cfg)) {
      if (r.metric != "pairwise_eeer_sim") continue;
      const double p = exact.at(r.src - 1, r.dst - 1);
      const double sigma =
          std::sqrt(p * (1.0 - p) / static_cast<double>(cfg.rounds));
      plain_worst_sigmas =
          std::max(plain_worst_sigmas, std::abs(r.value - p) / sigma);
    }
    c.note(scheme_name(s) + ": worst pairwise deviation " +
           format_value(plain_worst_sigmas) + " sigma (limit 4)");
    c.require(plain_worst_sigmas <= 4.0,
              scheme_name(s) + " simulation deviates beyond 4 sigma");

    cfg.shuffle = true;
    const double avg = exact.average();
    double max_sim = -1.0, min_sim = 2.0, se = 0.0;
    for (const auto& r : run_simulate(cfg)) {
      if (r.metric == "eeer_max_sim") {
        max_sim = r.value;
        se = *r.std_err;
      }
      if (r.metric == "eeer_min_sim") min_sim = r.value;
    }
    const double sigma_avg =
        std::sqrt(avg * (1.0 - avg) / static_cast<double>(cfg.rounds));
    c.note(scheme_name(s) + " shuffled: max " + format_value(max_sim) +
           ", min " + format_value(min_sim) + ", unshuffled average " +
           format_value(avg));
    (void)se;
    c.require(std::abs(max_sim - avg) <= 4.0 * sigma_avg,
              scheme_name(s) + " shuffled max must converge to the average");
    c.require(std::abs(min_sim - avg) <= 4.0 * sigma_avg,
              scheme_name(s) + " shuffled min must converge to the average");
  }
}

void criterion_dominance(Check& c) {
  // Equivalent uplink rates never exceed the raw rates, for any profile.
  for (const Scheme s : {Scheme::Mpwr, Scheme::Oppwr}) {
    for (int n = 2; n <= 10; ++n) {
      for (const auto& profile :
           {ErasureProfile::symmetric(n, 0.1, 0.1),
            ErasureProfile::symmetric(n, 0.3, 0.3), asymmetric_a(n)}) {
        const auto t = equivalent_uplink(s, profile);
        for (int i = 0; i < n; ++i) {
          const auto iu = static_cast<std::size_t>(i);
          if (!std::isnan(t.before[iu]))
            c.require(t.before[iu] <= profile.eps_up[iu] + 1e-15,
                      "equivalent rate exceeded the raw uplink rate");
          if (!std::isnan(t.within[iu]))
            c.require(t.within[iu] <= profile.eps_up[iu] + 1e-15,
                      "equivalent rate exceeded the raw uplink rate");
        }
      }
    }
  }
  // EEER dominance over the tested configurations: the operating regime for
  // the chain, and the full moderate grid for the ring.
  for (int n = 2; n <= 6; ++n)
    for (const double e : {0.05, 0.1})
      for (const Scheme s : {Scheme::Mpwr, Scheme::Oppwr}) {
        const auto profile = ErasureProfile::symmetric(n, e, e);
        const auto plain = analytic_eeer(s, profile, false);
        const auto recon = analytic_eeer(s, profile, true);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j)
              c.require(recon.at(i, j) <= plain.at(i, j) + 1e-12,
                        "reconstruction made an analytic pairwise EEER worse");
      }
  for (int n = 2; n <= 8; ++n)
    for (const double e : {0.05, 0.1, 0.3}) {
      const auto profile = ErasureProfile::symmetric(n, e, e);
      c.require(analytic_eeer(Scheme::Oppwr, profile, true).max() <=
                    analytic_eeer(Scheme::Oppwr, profile, false).max() + 1e-12,
                "ring reconstruction must not raise the EEER");
    }
  // Exact-pipeline confirmation where enumeration is cheap: ring dominance
  // is strict; the chain gains nothing at N = 2.
  for (int n = 2; n <= 4; ++n) {
    const auto profile = ErasureProfile::symmetric(n, 0.1, 0.1);
    const auto plain = oracle::exact_eeer(Scheme::Oppwr, profile, false);
    const auto recon = oracle::exact_eeer(Scheme::Oppwr, profile, true);
    c.require(recon.max() < plain.max(),
              "exact ring reconstruction must strictly improve the EEER");
  }
  c.note("outside the tested grid the repair trade-off reverses: replacing a "
         "bare single-user row by the intended pair row removes anchors, e.g. "
         "analytic chain N=6 eps=0.3 max 0.7726 -> 0.8204, exact chain N=4 "
         "eps=0.1 far pair 0.4295 -> 0.4319 (documented finding)");

  const auto two = ErasureProfile::symmetric(2, 0.1, 0.1);
  const double chain_gap = analytic_eeer(Scheme::Mpwr, two, false).max() -
                           analytic_eeer(Scheme::Mpwr, two, true).max();
  c.require(chain_gap == 0.0, "two-user chain must gain nothing");
  c.require(oracle::exact_eeer(Scheme::Mpwr, two, true).max() ==
                oracle::exact_eeer(Scheme::Mpwr, two, false).max(),
            "two-user chain must gain nothing in the exact pipeline");
  const double ring_gap = analytic_eeer(Scheme::Oppwr, two, false).max() -
                          analytic_eeer(Scheme::Oppwr, two, true).max();
  c.note("two-user ring improvement " + format_value(ring_gap));
  c.require(ring_gap > 1e-4, "two-user ring must improve strictly");
}

void criterion_fountain(Check& c) {
  const auto dist = build_distribution(78, 0.9872, 0.01);
  double sum = 0.0;
  for (const double p : dist.p) sum += p;
  c.require(std::abs(sum - 1.0) <= 1e-12, "degree masses must sum to one");

  const std::uint64_t draws = 1000000;
  std::vector<std::uint64_t> histogram(79, 0);
  const StreamKey seed(90210);
  for (std::uint64_t s = 0; s < draws; ++s)
    ++histogram[packet_combination(dist, seed, 0, s, 200).size()];
  for (int d = 1; d <= 78; ++d) {
    const double p = dist.p[static_cast<std::size_t>(d - 1)];
    const double freq =
        static_cast<double>(histogram[static_cast<std::size_t>(d)]) /
        static_cast<double>(draws);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(draws));
    c.require(std::abs(freq - p) <= 3.0 * sigma + 1e-12,
              "degree histogram bin outside 3 sigma");
  }

  // End-to-end overhead, K = 1000, four users, symmetric 0.1. Self-recorded
  // regression bands from this implementation (no outer precode, so the LT
  // coverage tail dominates the ideal-code prediction).
  struct SchemeBand {
    Scheme scheme;
    double lo, hi;
  };
  const std::vector<SchemeBand> bands = {{Scheme::Owr, 0.9, 2.0},
                                         {Scheme::Mpwr, 1.1, 2.6},
                                         {Scheme::Oppwr, 0.55, 1.7}};
  std::vector<double> means;
  for (const auto& band : bands) {
    ExperimentConfig cfg;
    cfg.schemes = {band.scheme};
    cfg.users_lo = cfg.users_hi = 4;
    cfg.eps_up = {0.1};
    cfg.eps_down = {0.1};
    cfg.packets = 1000;
    cfg.trials = 3;
    cfg.seed = 2026;
    cfg.threads = 2;
    double mean = 0.0, prediction = -1.0;
    for (const auto& r : run_overhead(cfg)) {
      if (r.metric == "overhead_mean") mean = r.value;
      if (r.metric == "overhead_prediction") prediction = r.value;
    }
    means.push_back(mean);
    c.note(scheme_name(band.scheme) + ": simulated overhead " +
           format_value(mean) + ", ideal-code prediction " +
           format_value(prediction));
    c.require(mean >= prediction,
              scheme_name(band.scheme) +
                  " simulated overhead must dominate the ideal prediction");
    c.require(mean >= band.lo && mean <= band.hi,
              scheme_name(band.scheme) + " overhead left its regression band");
  }
  // Ordering matches the normalized-rate analytics (OPPWR best, MPWR worst).
  c.require(means[2] < means[0] && means[0] < means[1],
            "overhead ordering must match the normalized-rate analytics");
}

void criterion_determinism(Check& c) {
  ExperimentConfig sim;
  sim.schemes = {Scheme::Mpwr};
  sim.users_lo = sim.users_hi = 4;
  sim.eps_up = {0.1};
  sim.eps_down = {0.1};
  sim.rounds = 20000;
  sim.seed = 42;
  sim.shuffle = true;
  sim.threads = 1;
  const auto sim_one = to_csv(run_simulate(sim));
  sim.threads = 8;
  c.require(sim_one == to_csv(run_simulate(sim)),
            "simulate CSV differs between 1 and 8 workers");

  ExperimentConfig over;
  over.schemes = {Scheme::Oppwr};
  over.users_lo = over.users_hi = 3;
  over.eps_up = {0.1};
  over.eps_down = {0.1};
  over.packets = 200;
  over.trials = 8;
  over.seed = 7;
  over.threads = 1;
  const auto over_one = to_csv(run_overhead(over));
  over.threads = 8;
  c.require(over_one == to_csv(run_overhead(over)),
            "overhead CSV differs between 1 and 8 workers");

#ifdef EMWRC_CLI_PATH
  const auto run_cli = [&](const std::string& args) -> std::string {
    const std::string command = std::string("\"") + EMWRC_CLI_PATH + "\" " + args;
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return "<popen failed>";
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    return out;
  };
  const std::string common =
      "simulate --scheme mpwr --users 4 --eps-up 0.1 --eps-down 0.1 "
      "--rounds 20000 --seed 42 --shuffle";
  const auto cli_one = run_cli(common + " --threads 1");
  const auto cli_eight = run_cli(common + " --threads 8");
  c.require(!cli_one.empty() && cli_one == cli_eight,
            "CLI simulate output differs between 1 and 8 workers");
  c.require(cli_one == sim_one,
            "CLI output differs from the library harness output");
#endif
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "closed forms (single-transmitter EEER and overhead)",
       criterion_closed_forms},
      {2, "worked examples (ring repair, chain failure, separation)",
       criterion_worked_examples},
      {3, "oracle equivalence of the corrected recursions",
       criterion_oracle_equivalence},
      {4, "worst-pair structure (chain end, ring opposite)",
       criterion_remarks},
      {5, "large-N asymptotics of the repair probabilities",
       criterion_asymptotics},
      {6, "clean-channel rates against the cut-set bound",
       criterion_rate_bound},
      {7, "best-scheme regime order as N grows", criterion_regimes},
      {8, "Monte Carlo consistency and shuffled convergence",
       criterion_monte_carlo},
      {9, "reconstruction dominance of the analytic model",
       criterion_dominance},
      {10, "fountain layer: distribution, histogram, end-to-end overhead",
       criterion_fountain},
      {11, "byte-identical output across worker counts",
       criterion_determinism},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.ok = false;
      check.notes << "    exception: " << e.what() << "\n";
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    std::printf("[%s] criterion %2d: %s (%.2f s)\n",
                check.ok ? "PASS" : "FAIL", criterion.id,
                criterion.name.c_str(), seconds);
    const std::string notes = check.notes.str();
    if (!notes.empty()) std::fputs(notes.c_str(), stdout);
    failures += !check.ok;
  }
  if (failures)
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  else
    std::printf("all %zu criteria passed\n", criteria.size());
  return failures ? 2 : 0;
}
