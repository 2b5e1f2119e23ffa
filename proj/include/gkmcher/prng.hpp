#pragma once

#include <cstdint>

namespace gkmcher {

// splitmix64: deterministic across platforms, one stream per (seed, index).
struct Prng {
  std::uint64_t state;

  explicit Prng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

  static Prng for_sample(std::uint64_t seed, std::uint64_t index) {
    Prng p(seed ^ (0xd1b54a32d192ed03ull * (index + 1)));
    p.next();
    return p;
  }
};

}  // namespace gkmcher
