#pragma once

#include <cstdint>
#include <random>

namespace polyjoin {

/// Uniform integer in [0, bound) from a 64-bit engine. Unlike the standard
/// distributions its output is identical across standard libraries, which
/// keeps seeded runs byte-for-byte reproducible. Requires bound > 0.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  // Lemire-style rejection on the top of the range.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline bool coin(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

}  // namespace polyjoin
