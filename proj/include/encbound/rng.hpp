// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>

namespace encbound {

__extension__ using uint128 = unsigned __int128;

/// SplitMix64 finalizer; a bijective 64-bit mixer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of the generator for one trial: hash-mix of master seed and index.
constexpr std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t trial) {
  return splitmix64(splitmix64(master_seed) ^ splitmix64(trial + 0x632be59bd9b4e019ULL));
}

/// Per-trial generator. The engine is std::mt19937_64, whose output sequence
/// is fixed by the standard; the range reductions below are done here rather
/// than through std distributions, whose algorithms vary between libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  static Rng stream(std::uint64_t master_seed, std::uint64_t trial) { return Rng(stream_seed(master_seed, trial)); }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound), bound >= 1. Lemire's multiply-and-reject.
  std::uint64_t below(std::uint64_t bound) {
    uint128 m = static_cast<uint128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (low < threshold) {
        m = static_cast<uint128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform01() < p; }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace encbound
