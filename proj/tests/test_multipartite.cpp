#include "polyjoin/fixtures.hpp"
#include "polyjoin/multipartite.hpp"
#include "polyjoin/oracles.hpp"
#include "polyjoin/random.hpp"
#include "support/brute.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace polyjoin;
namespace fx = polyjoin::fixtures;

namespace {

// B_{k,m}(x) as a sum over set partitions of {1..k} into m blocks.
BigInt bell_by_partitions(std::size_t k, std::size_t m, const std::vector<BigInt>& xs) {
  BigInt total = 0;
  brute::for_each_partition(k, [&](const auto& parts) {
    if (parts.size() != m) return;
    BigInt w = 1;
    for (const auto& b : parts) w *= b.size() <= xs.size() ? xs[b.size() - 1] : BigInt(0);
    total += w;
  });
  return total;
}

BigInt oracle_paths(const PartSizes& parts) {
  return count_directed_ham_paths(fx::complete_multipartite(parts));
}

BigInt oracle_cycles(const PartSizes& parts) {
  return count_directed_ham_cycles(fx::complete_multipartite(parts));
}

}  // namespace

TEST_CASE("bell_partial examples") {
  const std::vector<BigInt> xs{3, 5, 7, 11};
  for (unsigned long m = 1; m <= 4; ++m) {
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), xs[0].get_mpz_t(), m);
    CHECK(bell_partial(m, m, xs) == p);
  }
  CHECK(bell_partial(1, 2, xs) == 0);
  const std::vector<BigInt> ones{1, 1};
  CHECK(bell_partial(3, 2, ones) == 3);
  CHECK(bell_partial(0, 0, ones) == 1);
}

TEST_CASE("bell_partial argument checks") {
  const std::vector<BigInt> two{1, 1};
  CHECK_THROWS_AS(bell_partial(5, 2, two), std::invalid_argument);
}

TEST_CASE("bell_partial matches the set-partition sum") {
  std::mt19937_64 rng(71);
  for (std::size_t k = 1; k <= 8; ++k) {
    std::vector<BigInt> xs(k);
    for (auto& x : xs) x = static_cast<long>(uniform_below(rng, 21)) - 10;
    for (std::size_t m = 1; m <= k; ++m) {
      REQUIRE(bell_partial(k, m, xs) == bell_by_partitions(k, m, xs));
    }
  }
  // all-ones arguments give Stirling numbers of the second kind
  const std::vector<BigInt> ones(10, 1);
  CHECK(bell_partial(10, 3, ones) == 9330);
}

TEST_CASE("bell_partial_row agrees with single entries") {
  const std::vector<BigInt> xs{2, -1, 4};
  for (unsigned long m = 1; m <= 4; ++m) {
    const auto row = bell_partial_row(m, xs);
    for (unsigned long k = m; k < row.size(); ++k) {
      std::vector<BigInt> padded = xs;
      padded.resize(std::max<std::size_t>(xs.size(), k - m + 1), 0);
      REQUIRE(row[k] == bell_partial(k, m, padded));
    }
  }
}

TEST_CASE("hp examples") {
  CHECK(hp_multipartite(PartSizes{1, 1}) == 2);
  CHECK(hp_multipartite(PartSizes{2, 2}) == 8);
  CHECK(hp_multipartite(PartSizes{1, 1, 1}) == 6);
  CHECK(hp_balanced(1, 2) == 2);
  CHECK(hp_balanced(2, 2) == 8);
  CHECK(hp_balanced(1, 3) == 6);
  CHECK(brute::ham_paths(fx::cycle(4)) == 8);
  CHECK(hp_multipartite(PartSizes{3}) == 0);
  CHECK(hp_multipartite(PartSizes{1}) == 1);
}

TEST_CASE("hc examples") {
  CHECK(hc_multipartite(PartSizes{2, 2}) == 2);
  CHECK(hc_multipartite(PartSizes{1, 1, 1}) == 2);
  CHECK(hc_multipartite(PartSizes{2, 2, 2}) == oracle_cycles({2, 2, 2}));
  CHECK(hc_multipartite(PartSizes{2, 2, 2}) ==
        static_cast<unsigned long>(brute::ham_cycles(fx::complete_multipartite(PartSizes{2, 2, 2}))));
  CHECK(hc_balanced(1, 2) == 2);
  CHECK(hc_balanced(2, 1) == 2);
  CHECK(hc_balanced(2, 2) == hc_multipartite(PartSizes{2, 2, 2}));
  CHECK(hc_balanced_fast(1, 2) == 2);
  CHECK(hc_balanced_fast(3, 3) == hc_balanced(3, 3));
  CHECK(hc_balanced_fast(3, 3) == hc_multipartite(PartSizes{3, 3, 3, 3}));
  CHECK(hc_balanced_fast(3, 3) == oracle_cycles({3, 3, 3, 3}));
  CHECK_THROWS_AS(hc_multipartite(PartSizes{3}), std::invalid_argument);
  CHECK_THROWS_AS(hc_multipartite(PartSizes{2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(hp_multipartite(PartSizes{}), std::invalid_argument);
  CHECK_THROWS_AS(hc_balanced(0, 2), std::invalid_argument);
}

TEST_CASE("four-way agreement on balanced cases") {
  for (unsigned long n = 1; n <= 4; ++n) {
    for (unsigned long m = 1; m <= 3; ++m) {
      if (n * m + n > 16) continue;
      const PartSizes parts(m + 1, n);
      const BigInt oracle = oracle_cycles(parts);
      CHECK(hc_balanced(n, m) == oracle);
      CHECK(hc_balanced_fast(n, m) == oracle);
      CHECK(hc_multipartite(parts) == oracle);
    }
  }
}

TEST_CASE("balanced path counts agree with the oracle up to 14 vertices") {
  for (unsigned long n = 1; n <= 7; ++n) {
    for (unsigned long m = 1; n * m <= 14; ++m) {
      const PartSizes parts(m, n);
      const BigInt oracle = oracle_paths(parts);
      CHECK(hp_multipartite(parts) == oracle);
      CHECK(hp_balanced(n, m) == oracle);
      CHECK(hp_balanced_fast(n, m) == oracle);
    }
  }
}

TEST_CASE("unbalanced parts agree with the oracle") {
  std::mt19937_64 rng(72);
  for (int i = 0; i < 60; ++i) {
    PartSizes parts;
    std::size_t total = 0;
    const std::size_t count = 2 + uniform_below(rng, 4);
    for (std::size_t j = 0; j < count; ++j) {
      parts.push_back(1 + uniform_below(rng, 4));
      total += parts.back();
    }
    if (total > 14) continue;
    CHECK(hp_multipartite(parts) == oracle_paths(parts));
    CHECK(hc_multipartite(parts) == oracle_cycles(parts));
    CHECK(laguerre_expectation_forms(parts, WalkKind::HamPath) == oracle_paths(parts));
    CHECK(laguerre_expectation_forms(parts, WalkKind::HamCycle) == oracle_cycles(parts));
  }
}

TEST_CASE("hc_multipartite is invariant under reordering parts") {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 40; ++i) {
    PartSizes parts;
    const std::size_t count = 2 + uniform_below(rng, 4);
    for (std::size_t j = 0; j < count; ++j) parts.push_back(1 + uniform_below(rng, 6));
    const BigInt base = hc_multipartite(parts);
    for (int r = 0; r < 5; ++r) {
      std::shuffle(parts.begin(), parts.end(), rng);
      CHECK(hc_multipartite(parts) == base);
    }
  }
}

TEST_CASE("closed form and fast method agree on large balanced cases") {
  for (unsigned long n : {5ul, 9ul, 17ul, 30ul}) {
    for (unsigned long m : {2ul, 7ul, 30ul}) {
      CHECK(hc_balanced(n, m) == hc_balanced_fast(n, m));
      CHECK(hp_balanced(n, m) == hp_balanced_fast(n, m));
    }
  }
  CHECK(hc_balanced(6, 4) == hc_multipartite(PartSizes(5, 6)));
  CHECK(hp_balanced(6, 4) == hp_multipartite(PartSizes(4, 6)));
}

TEST_CASE("moment forms") {
  CHECK(laguerre_expectation_forms(PartSizes{1, 1}, WalkKind::HamPath) == 2);
  CHECK(laguerre_expectation_forms(PartSizes{2, 2}, WalkKind::HamCycle) == 2);
  CHECK(laguerre_expectation_forms(PartSizes{1, 1, 1}, WalkKind::HamCycle) == 2);
}
