// SPDX-License-Identifier: Apache-2.0
#include <immintrin.h>
#include <wmmintrin.h>

#include "unihash/simd.hpp"

namespace unihash::simd {

namespace {

void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t* lo, std::uint64_t* hi) {
  const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0x00);
  *lo = static_cast<std::uint64_t>(_mm_cvtsi128_si64(r));
  *hi = static_cast<std::uint64_t>(_mm_extract_epi64(r, 1));
}

std::uint64_t gf_ml(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  const std::uint32_t* m = keys.data() + 1;
  const std::uint32_t* p = s.data();
  const std::size_t n = s.size();
  __m128i sum0 = _mm_cvtsi32_si128(static_cast<int>(keys[0]));
  __m128i sum1 = _mm_setzero_si128();
  std::size_t i = 0;
  // Two independent products per step: the high qword of each operand holds
  // the second pair, selected with imm 0x11.
  for (; i + 2 <= n; i += 2) {
    const __m128i k = _mm_set_epi64x(m[i + 1], m[i]);
    const __m128i c = _mm_set_epi64x(p[i + 1], p[i]);
    sum0 = _mm_xor_si128(sum0, _mm_clmulepi64_si128(k, c, 0x00));
    sum1 = _mm_xor_si128(sum1, _mm_clmulepi64_si128(k, c, 0x11));
  }
  if (i < n) {
    const __m128i t = _mm_set_epi64x(m[i], p[i]);
    sum0 = _mm_xor_si128(sum0, _mm_clmulepi64_si128(t, t, 0x10));
  }
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_xor_si128(sum0, sum1)));
}

std::uint64_t gf_hm(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  const std::uint32_t* m = keys.data() + 1;
  const std::uint32_t* p = s.data();
  __m128i sum = _mm_cvtsi32_si128(static_cast<int>(keys[0]));
  for (std::size_t i = 0; i + 2 <= s.size(); i += 2) {
    const __m128i t = _mm_set_epi64x(m[i] ^ p[i], m[i + 1] ^ p[i + 1]);
    sum = _mm_xor_si128(sum, _mm_clmulepi64_si128(t, t, 0x10));
  }
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(sum));
}

}  // namespace

extern const ClmulKernels kPclmulClmul;
const ClmulKernels kPclmulClmul = {Isa::pclmul, clmul64, gf_ml, gf_hm};

}  // namespace unihash::simd
