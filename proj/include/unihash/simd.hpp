// SPDX-License-Identifier: Apache-2.0
//
// Inner-loop kernels with a portable scalar version and ISA-specific
// variants. The best available table is chosen once, on first use, from
// the CPU's feature flags. Setting UNIHASH_FORCE_SCALAR=1 in the
// environment pins every table to its portable version.
//
// Kernels do no validation: callers guarantee the sizes stated per entry.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace unihash::simd {

enum class Isa { scalar, avx2, pclmul };

std::string_view isa_name(Isa isa);

struct CpuFeatures {
  bool avx2 = false;
  bool pclmul = false;
};

const CpuFeatures& cpu_features();

/// Integer (ring Z/2^K) kernels.
struct ArithKernels {
  Isa isa;
  // m_1 + sum m_{i+1} s_i mod 2^64; keys.size() >= s.size() + 1.
  std::uint64_t (*ml64x32)(std::span<const std::uint64_t> keys, std::span<const std::uint32_t> s);
  std::uint64_t (*ml64x32_2by2)(std::span<const std::uint64_t> keys,
                                std::span<const std::uint32_t> s);
  // m_1 + sum (m_{2i} + s_{2i-1})(m_{2i+1} + s_{2i}) mod 2^64; s.size() even.
  std::uint64_t (*hm64x32)(std::span<const std::uint64_t> keys, std::span<const std::uint32_t> s);
  // Same three with K = 32 and 16-bit characters.
  std::uint32_t (*ml32x16)(std::span<const std::uint32_t> keys, std::span<const std::uint16_t> s);
  std::uint32_t (*ml32x16_2by2)(std::span<const std::uint32_t> keys,
                                std::span<const std::uint16_t> s);
  std::uint32_t (*hm32x16)(std::span<const std::uint32_t> keys, std::span<const std::uint16_t> s);
  // NH: sum (m_{2i-1} + s_{2i-1} mod 2^32)(m_{2i} + s_{2i} mod 2^32) mod 2^64;
  // s.size() even, keys.size() >= s.size().
  std::uint64_t (*nh64)(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s);
  // NH with 16-bit halves and a 32-bit accumulator.
  std::uint32_t (*nh32)(std::span<const std::uint16_t> keys, std::span<const std::uint16_t> s);
};

/// Carry-less (GF(2)[x]) kernels on operands of at most 32 bits.
struct ClmulKernels {
  Isa isa;
  // Full 64 x 64 -> 128-bit carry-less product.
  void (*clmul64)(std::uint64_t a, std::uint64_t b, std::uint64_t* lo, std::uint64_t* hi);
  // m_1 xor (xor_i m_{i+1} * s_i); keys.size() >= s.size() + 1.
  std::uint64_t (*gf_ml)(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s);
  // m_1 xor (xor_i (m_{2i} ^ s_{2i-1}) * (m_{2i+1} ^ s_{2i})); s.size() even.
  std::uint64_t (*gf_hm)(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s);
};

const ArithKernels& arith_kernels();
const ClmulKernels& clmul_kernels();

/// Every table compiled in and supported by this CPU, scalar first.
std::vector<const ArithKernels*> available_arith_kernels();
std::vector<const ClmulKernels*> available_clmul_kernels();

// Per-ISA tables. The non-scalar ones are null when not compiled in.
extern const ArithKernels kScalarArith;
extern const ClmulKernels kPortableClmul;
const ArithKernels* avx2_arith_table();
const ClmulKernels* pclmul_clmul_table();

}  // namespace unihash::simd
