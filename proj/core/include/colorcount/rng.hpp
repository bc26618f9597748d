#pragma once

#include <cstdint>

namespace colorcount {

// splitmix64 (Steele/Lea/Flood mixer). Small, seedable, and good enough for
// Monte Carlo label deletion; we avoid std::mt19937 so streams are cheap to
// derive per trial.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from [0, bound); rejection sampling, bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - ~0ULL % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }
};

// Counter-based per-trial seed: trial i of a run seeded with s always uses
// splitmix(s XOR (i+1)*phi64), independent of execution order. This is the
// documented derivation for every seeded suite in the project.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mix(seed ^ ((index + 1) * 0x9E3779B97F4A7C15ULL));
  return mix.next();
}

}  // namespace colorcount
