// SPDX-License-Identifier: Apache-2.0
//
// AVX2 arithmetic kernels. Four 64-bit (or eight 32-bit) lanes accumulate
// independent partial sums that are folded at the end; modular addition
// makes the result bit-identical to the scalar loop.
#include <immintrin.h>

#include "unihash/simd.hpp"

namespace unihash::simd {

namespace {

inline std::uint64_t hsum_epi64(__m256i v) {
  const __m128i s = _mm_add_epi64(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(s)) +
         static_cast<std::uint64_t>(_mm_extract_epi64(s, 1));
}

inline std::uint32_t hsum_epi32(__m256i v) {
  __m128i s = _mm_add_epi32(_mm256_castsi256_si128(v), _mm256_extracti128_si256(v, 1));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(1, 0, 3, 2)));
  s = _mm_add_epi32(s, _mm_shuffle_epi32(s, _MM_SHUFFLE(2, 3, 0, 1)));
  return static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
}

// Low 64 bits of a 64 x 32 product per lane (b holds zero-extended 32-bit values).
inline __m256i mul64x32(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  return _mm256_add_epi64(lo, _mm256_slli_epi64(hi, 32));
}

// Low 64 bits of a 64 x 64 product per lane.
inline __m256i mul64x64(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i cross = _mm256_add_epi64(_mm256_mul_epu32(_mm256_srli_epi64(a, 32), b),
                                         _mm256_mul_epu32(a, _mm256_srli_epi64(b, 32)));
  return _mm256_add_epi64(lo, _mm256_slli_epi64(cross, 32));
}

std::uint64_t ml64x32(std::span<const std::uint64_t> keys, std::span<const std::uint32_t> s) {
  const std::uint64_t* m = keys.data() + 1;
  const std::uint32_t* p = s.data();
  const std::size_t n = s.size();
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i m0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i m1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i + 4));
    const __m256i c0 =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i)));
    const __m256i c1 =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i + 4)));
    acc0 = _mm256_add_epi64(acc0, mul64x32(m0, c0));
    acc1 = _mm256_add_epi64(acc1, mul64x32(m1, c1));
  }
  std::uint64_t sum = keys[0] + hsum_epi64(_mm256_add_epi64(acc0, acc1));
  for (; i < n; ++i) sum += m[i] * p[i];
  return sum;
}

std::uint64_t hm64x32(std::span<const std::uint64_t> keys, std::span<const std::uint32_t> s) {
  const std::uint64_t* m = keys.data() + 1;
  const std::uint32_t* p = s.data();
  const std::size_t n = s.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  // Eight characters per step. unpacklo/hi split (m_{2j}, m_{2j+1}) pairs into
  // two vectors; the characters are split the same way so lanes line up.
  for (; i + 8 <= n; i += 8) {
    const __m256i k0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i k1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i + 4));
    const __m256i c0 =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i)));
    const __m256i c1 =
        _mm256_cvtepu32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i + 4)));
    const __m256i a = _mm256_add_epi64(_mm256_unpacklo_epi64(k0, k1), _mm256_unpacklo_epi64(c0, c1));
    const __m256i b = _mm256_add_epi64(_mm256_unpackhi_epi64(k0, k1), _mm256_unpackhi_epi64(c0, c1));
    acc = _mm256_add_epi64(acc, mul64x64(a, b));
  }
  std::uint64_t sum = keys[0] + hsum_epi64(acc);
  for (; i + 2 <= n; i += 2) sum += (m[i] + p[i]) * (m[i + 1] + p[i + 1]);
  return sum;
}

std::uint32_t ml32x16(std::span<const std::uint32_t> keys, std::span<const std::uint16_t> s) {
  const std::uint32_t* m = keys.data() + 1;
  const std::uint16_t* p = s.data();
  const std::size_t n = s.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i c =
        _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i)));
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(k, c));
  }
  std::uint32_t sum = keys[0] + hsum_epi32(acc);
  for (; i < n; ++i) sum += m[i] * std::uint32_t{p[i]};
  return sum;
}

std::uint32_t hm32x16(std::span<const std::uint32_t> keys, std::span<const std::uint16_t> s) {
  const std::uint32_t* m = keys.data() + 1;
  const std::uint16_t* p = s.data();
  const std::size_t n = s.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  // Each 64-bit lane holds one (a, b) pair after the 32-bit adds; mul_epu32
  // of the lane with its own upper half gives a * b. Only the low 32 bits of
  // the 64-bit lane sums are kept.
  for (; i + 8 <= n; i += 8) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i c =
        _mm256_cvtepu16_epi32(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p + i)));
    const __m256i ab = _mm256_add_epi32(k, c);
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(ab, _mm256_srli_epi64(ab, 32)));
  }
  std::uint32_t sum = keys[0] + static_cast<std::uint32_t>(hsum_epi64(acc));
  for (; i + 2 <= n; i += 2) {
    sum += (m[i] + std::uint32_t{p[i]}) * (m[i + 1] + std::uint32_t{p[i + 1]});
  }
  return sum;
}

std::uint64_t nh64(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  const std::uint32_t* m = keys.data();
  const std::uint32_t* p = s.data();
  const std::size_t n = s.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i ab = _mm256_add_epi32(k, c);
    acc = _mm256_add_epi64(acc, _mm256_mul_epu32(ab, _mm256_srli_epi64(ab, 32)));
  }
  std::uint64_t sum = hsum_epi64(acc);
  for (; i + 2 <= n; i += 2) {
    const std::uint32_t a = m[i] + p[i];
    const std::uint32_t b = m[i + 1] + p[i + 1];
    sum += std::uint64_t{a} * b;
  }
  return sum;
}

std::uint32_t nh32(std::span<const std::uint16_t> keys, std::span<const std::uint16_t> s) {
  const std::uint16_t* m = keys.data();
  const std::uint16_t* p = s.data();
  const std::size_t n = s.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  // 16 characters per step. Each 32-bit lane holds one (a, b) pair of
  // 16-bit sums; a * b < 2^32 so mullo is exact.
  const __m256i lo16 = _mm256_set1_epi32(0xffff);
  for (; i + 16 <= n; i += 16) {
    const __m256i k = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + i));
    const __m256i c = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i));
    const __m256i ab = _mm256_add_epi16(k, c);
    const __m256i a = _mm256_and_si256(ab, lo16);
    const __m256i b = _mm256_srli_epi32(ab, 16);
    acc = _mm256_add_epi32(acc, _mm256_mullo_epi32(a, b));
  }
  std::uint32_t sum = hsum_epi32(acc);
  for (; i + 2 <= n; i += 2) {
    const auto a = static_cast<std::uint16_t>(m[i] + p[i]);
    const auto b = static_cast<std::uint16_t>(m[i + 1] + p[i + 1]);
    sum += std::uint32_t{a} * b;
  }
  return sum;
}

}  // namespace

// The 2-by-2 variant is defined by its scalar unrolling; it stays scalar.
extern const ArithKernels kAvx2Arith;
const ArithKernels kAvx2Arith = {
    Isa::avx2,
    ml64x32,
    kScalarArith.ml64x32_2by2,
    hm64x32,
    ml32x16,
    kScalarArith.ml32x16_2by2,
    hm32x16,
    nh64,
    nh32,
};

}  // namespace unihash::simd
