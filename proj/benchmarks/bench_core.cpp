#include <benchmark/benchmark.h>

#include "emwrc/fountain.hpp"
#include "emwrc/harness.hpp"
#include "emwrc/oracle.hpp"

namespace {

using namespace emwrc;

void BM_SolveUnique(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const StreamKey key(11);
  gf2::LinearSystem sys;
  sys.n_vars = n;
  for (std::size_t r = 0; r < n + 2; ++r) {
    gf2::BinaryRow row{BitVector(n), gf2::Symbol{key.child(r).bits(99) & 1}};
    for (std::size_t c = 0; c < n; ++c)
      if (key.child(r).bernoulli(0.5, c)) row.coefficients.set(c);
    sys.rows.push_back(std::move(row));
  }
  for (auto _ : state) {
    try {
      benchmark::DoNotOptimize(gf2::solve_unique(sys, {}));
    } catch (const InconsistentSystem&) {
    }
  }
}
BENCHMARK(BM_SolveUnique)->Arg(8)->Arg(32)->Arg(128);

void BM_ExactEeer(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto profile = ErasureProfile::symmetric(n, 0.1, 0.1);
  for (auto _ : state)
    benchmark::DoNotOptimize(oracle::exact_eeer(Scheme::Oppwr, profile, true));
}
BENCHMARK(BM_ExactEeer)->Arg(3)->Arg(4)->Arg(5);

void BM_SimulateRound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto profile = ErasureProfile::symmetric(n, 0.1, 0.1);
  const auto base = build_matrix(Scheme::Mpwr, n);
  const StreamKey trial_key(1234);
  const std::vector<gf2::Symbol> x(static_cast<std::size_t>(n), 1);
  std::uint64_t round = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        run_round(base, profile, true, true, trial_key, round++, x));
}
BENCHMARK(BM_SimulateRound)->Arg(4)->Arg(8)->Arg(16);

void BM_LtDecode(benchmark::State& state) {
  const auto k = static_cast<std::uint32_t>(state.range(0));
  const auto dist = build_distribution(78, 0.9872, 0.01);
  const StreamKey seed(7);
  std::vector<gf2::Symbol> source(k);
  for (std::uint32_t i = 0; i < k; ++i) source[i] = seed.bits(i) & 1;
  for (auto _ : state) {
    LtDecoder dec(k);
    std::uint64_t seq = 0;
    while (!dec.complete()) {
      const auto pkt = encode_next(dist, seed, 0, seq++, source);
      dec.add(pkt.combination, pkt.payload);
    }
    benchmark::DoNotOptimize(dec.packets());
  }
}
BENCHMARK(BM_LtDecode)->Arg(200)->Arg(1000);

}  // namespace

BENCHMARK_MAIN();
