#pragma once

#include <cstdint>

namespace graphcolor {

// splitmix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ull;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebull;
  x ^= x >> 31;
  return x;
}

// Stateless counter-based generator: draw i of a stream is a pure function
// of (seed, i), so independent counter ranges can be consumed from any
// thread in any order with identical results.
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t word(std::uint64_t counter) const {
    return mix64(seed + (counter + 1) * 0x9e3779b97f4a7c15ull);
  }

  // Uniform in [0, 1), 53 significant bits.
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(word(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, bound); bound > 0. Multiply-shift reduction.
  std::uint64_t bounded(std::uint64_t counter, std::uint64_t bound) const {
    using u128 = unsigned __int128;
    return static_cast<std::uint64_t>(
        (static_cast<u128>(word(counter)) * bound) >> 64);
  }
};

}  // namespace graphcolor
