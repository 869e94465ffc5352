#pragma once

#include <cstdint>

namespace emwrc {

// SplitMix64 finalizer. Bijective on 64-bit words; chained with key material
// it behaves as a keyed hash, which is all the simulator needs.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based random stream. A key is built by chaining child() calls
// (master seed, trial, round, stage, user, ...); every leaf key yields an
// independent reproducible draw sequence. No state is shared, so draws are
// identical regardless of evaluation order or worker count.
class StreamKey {
 public:
  constexpr explicit StreamKey(std::uint64_t seed) : state_(mix64(seed)) {}

  constexpr StreamKey child(std::uint64_t tag) const {
    return StreamKey(Raw{}, mix64(state_ ^ (tag + 0xd1b54a32d192ed03ULL)));
  }

  constexpr std::uint64_t bits(std::uint64_t index) const {
    return mix64(state_ ^ (index * 0x2545f4914f6cdd1dULL + 1));
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double unit(std::uint64_t index) const {
    return static_cast<double>(bits(index) >> 11) * 0x1.0p-53;
  }

  constexpr bool bernoulli(double p, std::uint64_t index = 0) const {
    return unit(index) < p;
  }

  // Unbiased uniform integer in [0, n) by rejection.
  std::uint64_t uniform_below(std::uint64_t n, std::uint64_t index = 0) const {
    const std::uint64_t limit = n ? (~std::uint64_t{0} - ~std::uint64_t{0} % n) : 0;
    std::uint64_t sub = 0;
    for (;;) {
      const std::uint64_t v = bits(index ^ (sub << 56) ^ mix64(sub));
      if (v < limit) return v % n;
      ++sub;
    }
  }

  constexpr std::uint64_t raw() const { return state_; }

 private:
  struct Raw {};
  constexpr StreamKey(Raw, std::uint64_t st) : state_(st) {}
  std::uint64_t state_;
};

// Stage tags keep draw streams for different pipeline steps disjoint.
enum class Stage : std::uint64_t {
  Uplink = 1,
  Downlink = 2,
  Schedule = 3,
  FountainDegree = 4,
  FountainIndex = 5,
  SourceData = 6,
  SweepCell = 7,
  Trial = 8,
};

inline constexpr StreamKey stage_key(StreamKey k, Stage s) {
  return k.child(static_cast<std::uint64_t>(s));
}

}  // namespace emwrc
