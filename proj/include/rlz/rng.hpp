#pragma once

#include <cstdint>

namespace rlz {

// splitmix64: tiny, platform-stable generator. Identical seeds must produce
// bit-identical instances on every platform, which rules out the standard
// library distributions.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, n)
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }
};

}  // namespace rlz
