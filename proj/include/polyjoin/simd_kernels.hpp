#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

// Data-parallel inner loops of the bitmask oracles. Each kernel has a scalar
// reference and, where the target supports it, a vector variant; the variant
// is picked once at startup from CPUID and can be pinned with
// POLYJOIN_SIMD=scalar.

namespace polyjoin::simd {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best instruction set the running CPU supports (ignores the env override).
Isa detected_isa();

/// Instruction set the dispatching kernels currently use.
Isa active_isa();

/// Pins the dispatch. Requesting an ISA the CPU lacks falls back to Scalar.
void set_active_isa(Isa isa);

/// Sum of row[i] over the set bits i of mask (bits >= n are ignored). Wraps mod 2^64.
std::uint64_t masked_sum(const std::uint64_t* row, std::uint64_t mask, std::size_t n);
std::uint64_t masked_sum_scalar(const std::uint64_t* row, std::uint64_t mask, std::size_t n);
std::uint64_t masked_sum_avx2(const std::uint64_t* row, std::uint64_t mask, std::size_t n);

/// acc[i] += src[i] * factor for i < n (mod 2^64).
void axpy_u64(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t factor, std::size_t n);
void axpy_u64_scalar(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t factor, std::size_t n);
void axpy_u64_avx2(std::uint64_t* acc, const std::uint64_t* src, std::uint64_t factor, std::size_t n);

}  // namespace polyjoin::simd
