#include "polyjoin/simd_kernels.hpp"
#include "polyjoin/random.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace polyjoin;

namespace {

struct IsaGuard {
  simd::Isa saved = simd::active_isa();
  ~IsaGuard() { simd::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("masked_sum variants agree") {
  std::mt19937_64 rng(21);
  const bool avx2 = simd::detected_isa() == simd::Isa::Avx2;
  for (std::size_t n = 0; n <= 64; ++n) {
    std::vector<std::uint64_t> row(n);
    for (auto& x : row) x = rng();
    for (int rep = 0; rep < 20; ++rep) {
      const std::uint64_t mask = rng();
      std::uint64_t expect = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1) expect += row[i];
      }
      CHECK(simd::masked_sum_scalar(row.data(), mask, n) == expect);
      if (avx2) CHECK(simd::masked_sum_avx2(row.data(), mask, n) == expect);
      CHECK(simd::masked_sum(row.data(), mask, n) == expect);
    }
  }
}

TEST_CASE("axpy variants agree") {
  std::mt19937_64 rng(22);
  const bool avx2 = simd::detected_isa() == simd::Isa::Avx2;
  for (std::size_t n = 0; n <= 37; ++n) {
    std::vector<std::uint64_t> src(n), acc(n);
    for (auto& x : src) x = rng();
    for (auto& x : acc) x = rng();
    const std::uint64_t factor = rng();
    std::vector<std::uint64_t> expect = acc;
    for (std::size_t i = 0; i < n; ++i) expect[i] += src[i] * factor;

    auto a = acc;
    simd::axpy_u64_scalar(a.data(), src.data(), factor, n);
    CHECK(a == expect);
    if (avx2) {
      auto b = acc;
      simd::axpy_u64_avx2(b.data(), src.data(), factor, n);
      CHECK(b == expect);
    }
    auto c = acc;
    simd::axpy_u64(c.data(), src.data(), factor, n);
    CHECK(c == expect);
  }
}

TEST_CASE("dispatch can be pinned") {
  IsaGuard guard;
  simd::set_active_isa(simd::Isa::Scalar);
  CHECK(simd::active_isa() == simd::Isa::Scalar);
  simd::set_active_isa(simd::Isa::Avx2);
  CHECK(simd::active_isa() == simd::detected_isa());
  CHECK(simd::isa_name(simd::Isa::Scalar) == "scalar");
}
