// SPDX-License-Identifier: Apache-2.0
#include "unihash/simd.hpp"

namespace unihash::simd {

namespace {

std::uint64_t ml64x32(std::span<const std::uint64_t> keys, std::span<const std::uint32_t> s) {
  const std::uint64_t* m = keys.data();
  std::uint64_t sum = *m++;
  for (std::uint32_t c : s) sum += *m++ * c;
  return sum;
}

std::uint64_t ml64x32_2by2(std::span<const std::uint64_t> keys,
                           std::span<const std::uint32_t> s) {
  const std::uint64_t* m = keys.data() + 1;
  const std::uint32_t* p = s.data();
  const std::size_t n = s.size();
  std::uint64_t sum = keys[0];
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) sum += (m[i] * p[i]) + (m[i + 1] * p[i + 1]);
  if (i < n) sum += m[i] * p[i];
  return sum;
}

std::uint64_t hm64x32(std::span<const std::uint64_t> keys, std::span<const std::uint32_t> s) {
  const std::uint64_t* m = keys.data() + 1;
  const std::uint32_t* p = s.data();
  std::uint64_t sum = keys[0];
  for (std::size_t i = 0; i + 2 <= s.size(); i += 2) sum += (m[i] + p[i]) * (m[i + 1] + p[i + 1]);
  return sum;
}

std::uint32_t ml32x16(std::span<const std::uint32_t> keys, std::span<const std::uint16_t> s) {
  const std::uint32_t* m = keys.data();
  std::uint32_t sum = *m++;
  for (std::uint16_t c : s) sum += *m++ * std::uint32_t{c};
  return sum;
}

std::uint32_t ml32x16_2by2(std::span<const std::uint32_t> keys,
                           std::span<const std::uint16_t> s) {
  const std::uint32_t* m = keys.data() + 1;
  const std::uint16_t* p = s.data();
  const std::size_t n = s.size();
  std::uint32_t sum = keys[0];
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    sum += (m[i] * std::uint32_t{p[i]}) + (m[i + 1] * std::uint32_t{p[i + 1]});
  }
  if (i < n) sum += m[i] * std::uint32_t{p[i]};
  return sum;
}

std::uint32_t hm32x16(std::span<const std::uint32_t> keys, std::span<const std::uint16_t> s) {
  const std::uint32_t* m = keys.data() + 1;
  const std::uint16_t* p = s.data();
  std::uint32_t sum = keys[0];
  for (std::size_t i = 0; i + 2 <= s.size(); i += 2) {
    sum += (m[i] + std::uint32_t{p[i]}) * (m[i + 1] + std::uint32_t{p[i + 1]});
  }
  return sum;
}

std::uint64_t nh64(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i + 2 <= s.size(); i += 2) {
    const std::uint32_t a = keys[i] + s[i];
    const std::uint32_t b = keys[i + 1] + s[i + 1];
    sum += std::uint64_t{a} * b;
  }
  return sum;
}

std::uint32_t nh32(std::span<const std::uint16_t> keys, std::span<const std::uint16_t> s) {
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i + 2 <= s.size(); i += 2) {
    const auto a = static_cast<std::uint16_t>(keys[i] + s[i]);
    const auto b = static_cast<std::uint16_t>(keys[i + 1] + s[i + 1]);
    sum += std::uint32_t{a} * b;
  }
  return sum;
}

// Shift-and-xor over the bits of b.
void clmul64(std::uint64_t a, std::uint64_t b, std::uint64_t* lo, std::uint64_t* hi) {
  std::uint64_t l = 0, h = 0;
  for (unsigned i = 0; i < 64; ++i) {
    const std::uint64_t take = 0 - ((b >> i) & 1);
    l ^= (a << i) & take;
    if (i != 0) h ^= (a >> (64 - i)) & take;
  }
  *lo = l;
  *hi = h;
}

inline std::uint64_t clmul32(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  const std::uint64_t wide = a;
  for (unsigned i = 0; i < 32; ++i) r ^= (wide << i) & (0 - std::uint64_t{(b >> i) & 1u});
  return r;
}

std::uint64_t gf_ml(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  std::uint64_t sum = keys[0];
  for (std::size_t i = 0; i < s.size(); ++i) sum ^= clmul32(keys[i + 1], s[i]);
  return sum;
}

std::uint64_t gf_hm(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  std::uint64_t sum = keys[0];
  for (std::size_t i = 0; i + 2 <= s.size(); i += 2) {
    sum ^= clmul32(keys[i + 1] ^ s[i], keys[i + 2] ^ s[i + 1]);
  }
  return sum;
}

}  // namespace

const ArithKernels kScalarArith = {
    Isa::scalar, ml64x32, ml64x32_2by2, hm64x32, ml32x16, ml32x16_2by2, hm32x16, nh64, nh32,
};

const ClmulKernels kPortableClmul = {Isa::scalar, clmul64, gf_ml, gf_hm};

}  // namespace unihash::simd
