#include "polyjoin/simd_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define POLYJOIN_X86 1
#endif

namespace polyjoin::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "unknown";
}

Isa detected_isa() {
#ifdef POLYJOIN_X86
  if (__builtin_cpu_supports("avx2")) return Isa::Avx2;
#endif
  return Isa::Scalar;
}

namespace {

Isa initial_isa() {
  const char* env = std::getenv("POLYJOIN_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return detected_isa();
}

std::atomic<Isa>& active() {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (isa == Isa::Avx2 && detected_isa() != Isa::Avx2) isa = Isa::Scalar;
  active().store(isa, std::memory_order_relaxed);
}

std::uint64_t masked_sum_scalar(const std::uint64_t* row, std::uint64_t mask, std::size_t n) {
  if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
  std::uint64_t sum = 0;
  while (mask != 0) {
    sum += row[__builtin_ctzll(mask)];
    mask &= mask - 1;
  }
  return sum;
}

void axpy_u64_scalar(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t factor,
                     std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += src[i] * factor;
}

#ifdef POLYJOIN_X86

namespace {

// Lane masks for the 16 possible 4-bit patterns.
alignas(32) const std::uint64_t kLaneMask[16][4] = {
    {0, 0, 0, 0},          {~0ULL, 0, 0, 0},          {0, ~0ULL, 0, 0},
    {~0ULL, ~0ULL, 0, 0},  {0, 0, ~0ULL, 0},          {~0ULL, 0, ~0ULL, 0},
    {0, ~0ULL, ~0ULL, 0},  {~0ULL, ~0ULL, ~0ULL, 0},  {0, 0, 0, ~0ULL},
    {~0ULL, 0, 0, ~0ULL},  {0, ~0ULL, 0, ~0ULL},      {~0ULL, ~0ULL, 0, ~0ULL},
    {0, 0, ~0ULL, ~0ULL},  {~0ULL, 0, ~0ULL, ~0ULL},  {0, ~0ULL, ~0ULL, ~0ULL},
    {~0ULL, ~0ULL, ~0ULL, ~0ULL},
};

__attribute__((target("avx2"))) inline __m256i mullo_epi64(__m256i a, __m256i b) {
  // (ah*2^32 + al) * (bh*2^32 + bl) mod 2^64 = al*bl + ((ah*bl + al*bh) << 32)
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i ah = _mm256_srli_epi64(a, 32);
  const __m256i bh = _mm256_srli_epi64(b, 32);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(ah, b), _mm256_mul_epu32(a, bh));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

__attribute__((target("avx2"))) inline std::uint64_t hsum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

}  // namespace

__attribute__((target("avx2"))) std::uint64_t masked_sum_avx2(const std::uint64_t* row,
                                                               std::uint64_t mask, std::size_t n) {
  if (n < 64) mask &= (std::uint64_t{1} << n) - 1;
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const unsigned bits = static_cast<unsigned>((mask >> i) & 0xF);
    if (bits == 0) continue;
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
    const __m256i m = _mm256_load_si256(reinterpret_cast<const __m256i*>(kLaneMask[bits]));
    acc = _mm256_add_epi64(acc, _mm256_and_si256(v, m));
  }
  std::uint64_t sum = hsum(acc);
  for (; i < n; ++i) {
    if ((mask >> i) & 1) sum += row[i];
  }
  return sum;
}

__attribute__((target("avx2"))) void axpy_u64_avx2(std::uint64_t* acc, const std::uint64_t* src,
                                                    std::uint64_t factor, std::size_t n) {
  const __m256i f = _mm256_set1_epi64x(static_cast<long long>(factor));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    a = _mm256_add_epi64(a, mullo_epi64(s, f));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), a);
  }
  for (; i < n; ++i) acc[i] += src[i] * factor;
}

#else

std::uint64_t masked_sum_avx2(const std::uint64_t* row, std::uint64_t mask, std::size_t n) {
  return masked_sum_scalar(row, mask, n);
}

void axpy_u64_avx2(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t factor,
                   std::size_t n) {
  axpy_u64_scalar(acc, src, factor, n);
}

#endif

std::uint64_t masked_sum(const std::uint64_t* row, std::uint64_t mask, std::size_t n) {
  return active_isa() == Isa::Avx2 ? masked_sum_avx2(row, mask, n)
                                   : masked_sum_scalar(row, mask, n);
}

void axpy_u64(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t factor, std::size_t n) {
  if (active_isa() == Isa::Avx2) {
    axpy_u64_avx2(acc, src, factor, n);
  } else {
    axpy_u64_scalar(acc, src, factor, n);
  }
}

}  // namespace polyjoin::simd
