// SPDX-License-Identifier: Apache-2.0
//
// Carry-less arithmetic in GF(2)[x] and Multilinear hashing over GF(2^L).
//
// Polynomials are bit vectors: bit i is the coefficient of x^i. The hash
// families accumulate unreduced carry-less products and reduce once, at the
// end, modulo an irreducible p(x) = x^L + t(x) with deg t <= L/2. That tail
// bound is what lets the two-multiplication Barrett reduction be exact.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "unihash/keymaterial.hpp"

namespace unihash {

struct Clmul128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  friend bool operator==(const Clmul128&, const Clmul128&) = default;
};

/// Portable shift-xor product, valid for any 64-bit operands.
Clmul128 clmul_portable(std::uint64_t a, std::uint64_t b);
/// Product through the dispatched kernel (PCLMULQDQ when available).
Clmul128 clmul_dispatched(std::uint64_t a, std::uint64_t b);

/// Carry-less product of operands below 2^32; the result has at most 63 bits.
std::uint64_t clmul(std::uint32_t a, std::uint32_t b);

/// Degree of a nonzero polynomial; -1 for zero.
int poly_degree(std::uint64_t q);

class IrreduciblePoly {
 public:
  /// Throws std::invalid_argument unless `bits` is monic of degree
  /// `char_bits` (1..=32) with no terms strictly between x^(L/2) and x^L.
  /// Irreducibility itself is not checked here.
  IrreduciblePoly(std::uint64_t bits, unsigned char_bits);

  std::uint64_t bits() const { return bits_; }
  unsigned degree() const { return char_bits_; }

  friend bool operator==(const IrreduciblePoly&, const IrreduciblePoly&) = default;

 private:
  std::uint64_t bits_;
  unsigned char_bits_;
};

/// Embedded table of low-tail irreducible polynomials, L in {2, 3, 8, 16, 32}:
///   x^2+x+1, x^3+x+1, x^8+x^4+x^3+x+1, x^16+x^5+x^3+x+1, x^32+x^7+x^6+x^2+1.
IrreduciblePoly default_poly(unsigned char_bits);

/// q mod p for q < 2^(2L-1), via
///   ((((q >> L) * p) >> L) * p xor q) mod 2^L     (* carry-less).
std::uint64_t barrett_reduce(std::uint64_t q, const IrreduciblePoly& p);

/// Classical long division remainder; any q.
std::uint64_t poly_mod_reference(std::uint64_t q, const IrreduciblePoly& p);

std::size_t gf_multilinear_keys_needed(std::size_t n);
std::size_t gf_multilinear_hm_keys_needed(std::size_t n);

// Generic evaluators, key words and characters below 2^L. Throw
// std::invalid_argument on too few keys or out-of-range values.

/// barrett_reduce(m_1 xor (xor_i m_{i+1} * s_i), p)
std::uint64_t gf_multilinear(std::span<const std::uint64_t> keys,
                             std::span<const std::uint64_t> s, const IrreduciblePoly& p);
/// barrett_reduce(m_1 xor (xor_i (m_{2i} xor s_{2i-1}) * (m_{2i+1} xor s_{2i})), p).
/// Field addition inside the blocks is xor. Odd n is zero-padded.
std::uint64_t gf_multilinear_hm(std::span<const std::uint64_t> keys,
                                std::span<const std::uint64_t> s, const IrreduciblePoly& p);

/// Random key bits consumed by GF Multilinear for n characters: (n + 1) L.
std::uint64_t gf_multilinear_key_bits(std::size_t n, unsigned char_bits);

// Production evaluators on 32-bit storage (values must be below 2^L);
// dispatched to the best carry-less kernel.
std::uint32_t gf_multilinear32(std::span<const std::uint32_t> keys,
                               std::span<const std::uint32_t> s, const IrreduciblePoly& p);
std::uint32_t gf_multilinear32_hm(std::span<const std::uint32_t> keys,
                                  std::span<const std::uint32_t> s, const IrreduciblePoly& p);

}  // namespace unihash
