// SPDX-License-Identifier: Apache-2.0
#include "unihash/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "unihash/simd.hpp"

namespace unihash {

namespace {

void check_gf_inputs(std::span<const std::uint64_t> keys, std::size_t needed,
                     std::span<const std::uint64_t> s, unsigned char_bits) {
  if (keys.size() < needed) {
    throw std::invalid_argument("insufficient key words: need " + std::to_string(needed) +
                                ", have " + std::to_string(keys.size()));
  }
  const std::uint64_t mask = low_mask(char_bits);
  for (std::size_t i = 0; i < needed; ++i) {
    if ((keys[i] & ~mask) != 0) throw std::invalid_argument("key word exceeds 2^L");
  }
  for (std::uint64_t c : s) {
    if ((c & ~mask) != 0) throw std::invalid_argument("character exceeds 2^L");
  }
}

}  // namespace

Clmul128 clmul_portable(std::uint64_t a, std::uint64_t b) {
  Clmul128 r;
  simd::kPortableClmul.clmul64(a, b, &r.lo, &r.hi);
  return r;
}

Clmul128 clmul_dispatched(std::uint64_t a, std::uint64_t b) {
  Clmul128 r;
  simd::clmul_kernels().clmul64(a, b, &r.lo, &r.hi);
  return r;
}

std::uint64_t clmul(std::uint32_t a, std::uint32_t b) {
  std::uint64_t r = 0;
  const std::uint64_t wide = a;
  for (unsigned i = 0; i < 32; ++i) r ^= (wide << i) & (0 - std::uint64_t{(b >> i) & 1u});
  return r;
}

int poly_degree(std::uint64_t q) { return q == 0 ? -1 : 63 - std::countl_zero(q); }

IrreduciblePoly::IrreduciblePoly(std::uint64_t bits, unsigned char_bits)
    : bits_(bits), char_bits_(char_bits) {
  if (char_bits < 1 || char_bits > 32) throw std::invalid_argument("L must be in 1..=32");
  if (poly_degree(bits) != static_cast<int>(char_bits)) {
    throw std::invalid_argument("polynomial must be monic of degree L");
  }
  const std::uint64_t tail = bits ^ (std::uint64_t{1} << char_bits);
  if (poly_degree(tail) > static_cast<int>(char_bits / 2)) {
    throw std::invalid_argument("polynomial tail degree exceeds L/2; Barrett would be inexact");
  }
}

IrreduciblePoly default_poly(unsigned char_bits) {
  switch (char_bits) {
    case 2: return {0b111, 2};
    case 3: return {0b1011, 3};
    case 8: return {0x11b, 8};
    case 16: return {0x1002b, 16};
    case 32: return {(std::uint64_t{1} << 32) | (1u << 7) | (1u << 6) | (1u << 2) | 1u, 32};
    default:
      throw std::invalid_argument("no embedded irreducible polynomial for L = " +
                                  std::to_string(char_bits));
  }
}

std::uint64_t barrett_reduce(std::uint64_t q, const IrreduciblePoly& p) {
  const unsigned L = p.degree();
  const auto& k = simd::clmul_kernels();
  // Operands stay below 2^33, so every product fits in the low 64 bits.
  std::uint64_t hi = 0;
  const std::uint64_t q1 = q >> L;
  std::uint64_t q2 = 0;
  k.clmul64(q1, p.bits(), &q2, &hi);
  const std::uint64_t q3 = q2 >> L;
  std::uint64_t q4 = 0;
  k.clmul64(q3, p.bits(), &q4, &hi);
  return (q4 ^ q) & low_mask(L);
}

std::uint64_t poly_mod_reference(std::uint64_t q, const IrreduciblePoly& p) {
  const int L = static_cast<int>(p.degree());
  for (int d = poly_degree(q); d >= L; d = poly_degree(q)) q ^= p.bits() << (d - L);
  return q;
}

std::size_t gf_multilinear_keys_needed(std::size_t n) { return n + 1; }
std::size_t gf_multilinear_hm_keys_needed(std::size_t n) { return n + (n & 1) + 1; }

std::uint64_t gf_multilinear_key_bits(std::size_t n, unsigned char_bits) {
  return static_cast<std::uint64_t>(gf_multilinear_keys_needed(n)) * char_bits;
}

std::uint64_t gf_multilinear(std::span<const std::uint64_t> keys,
                             std::span<const std::uint64_t> s, const IrreduciblePoly& p) {
  check_gf_inputs(keys, gf_multilinear_keys_needed(s.size()), s, p.degree());
  std::uint64_t q = keys[0];
  for (std::size_t i = 0; i < s.size(); ++i) {
    q ^= clmul(static_cast<std::uint32_t>(keys[i + 1]), static_cast<std::uint32_t>(s[i]));
  }
  return barrett_reduce(q, p);
}

std::uint64_t gf_multilinear_hm(std::span<const std::uint64_t> keys,
                                std::span<const std::uint64_t> s, const IrreduciblePoly& p) {
  check_gf_inputs(keys, gf_multilinear_hm_keys_needed(s.size()), s, p.degree());
  const std::size_t n = s.size();
  std::uint64_t q = keys[0];
  for (std::size_t i = 0; i < n; i += 2) {
    const std::uint64_t second = i + 1 < n ? s[i + 1] : 0;
    q ^= clmul(static_cast<std::uint32_t>(keys[i + 1] ^ s[i]),
               static_cast<std::uint32_t>(keys[i + 2] ^ second));
  }
  return barrett_reduce(q, p);
}

std::uint32_t gf_multilinear32(std::span<const std::uint32_t> keys,
                               std::span<const std::uint32_t> s, const IrreduciblePoly& p) {
  if (keys.size() < s.size() + 1) throw std::invalid_argument("insufficient key words");
  return static_cast<std::uint32_t>(barrett_reduce(simd::clmul_kernels().gf_ml(keys, s), p));
}

std::uint32_t gf_multilinear32_hm(std::span<const std::uint32_t> keys,
                                  std::span<const std::uint32_t> s, const IrreduciblePoly& p) {
  const std::size_t n = s.size();
  if (keys.size() < gf_multilinear_hm_keys_needed(n)) {
    throw std::invalid_argument("insufficient key words");
  }
  std::uint64_t q = simd::clmul_kernels().gf_hm(keys, s.first(n & ~std::size_t{1}));
  if (n & 1) q ^= clmul(keys[n] ^ s[n - 1], keys[n + 1]);
  return static_cast<std::uint32_t>(barrett_reduce(q, p));
}

}  // namespace unihash
