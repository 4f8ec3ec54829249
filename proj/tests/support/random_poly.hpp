#pragma once

#include "polyjoin/poly.hpp"
#include "polyjoin/random.hpp"

#include <random>

namespace testing_support {

// Degree <= max_degree, coefficients in [-bound, bound].
inline polyjoin::Poly random_poly(std::mt19937_64& rng, std::size_t max_degree, long bound) {
  const std::size_t deg = polyjoin::uniform_below(rng, max_degree + 1);
  std::vector<polyjoin::BigInt> c(deg + 1);
  for (auto& x : c) {
    x = static_cast<long>(polyjoin::uniform_below(rng, 2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
  }
  return polyjoin::Poly(std::move(c));
}

inline polyjoin::Poly random_big_poly(std::mt19937_64& rng, std::size_t degree, unsigned bits) {
  std::vector<polyjoin::BigInt> c(degree + 1);
  for (auto& x : c) {
    x = 0;
    for (unsigned b = 0; b < bits; b += 64) {
      x <<= 64;
      x += static_cast<unsigned long>(rng());
    }
    if (polyjoin::coin(rng)) x = -x;
  }
  c.back() = 1;
  return polyjoin::Poly(std::move(c));
}

}  // namespace testing_support
