// SPDX-License-Identifier: Apache-2.0
//
// Comparison hashes: two keyless 32-bit string hashes (Rabin-Karp, SAX),
// the almost-universal NH family, and a paired-product xor family that is
// sometimes presented as universal but is not. The last two exist so the
// verifier can reproduce their failures.
#pragma once

#include <cstdint>
#include <span>

namespace unihash {

inline constexpr std::uint32_t kRabinKarpMultiplier = 31;

/// h = B h + s_i (mod 2^32), h_0 = 0.
template <class Char>
std::uint32_t rabin_karp(std::span<const Char> s, std::uint32_t multiplier = kRabinKarpMultiplier) {
  std::uint32_t h = 0;
  for (Char c : s) h = multiplier * h + static_cast<std::uint32_t>(c);
  return h;
}

/// Shift-add-xor: h = h xor ((h << 5) + (h >> 2) + s_i) (mod 2^32), h_0 = 0.
template <class Char>
std::uint32_t sax(std::span<const Char> s) {
  std::uint32_t h = 0;
  for (Char c : s) h ^= (h << 5) + (h >> 2) + static_cast<std::uint32_t>(c);
  return h;
}

/// Key words NH needs for n characters (n rounded up to even).
std::size_t nh_keys_needed(std::size_t n);

/// NH with L-bit output, L even in 2..=64:
///   sum_i ((m_{2i-1} + s_{2i-1}) mod 2^(L/2)) ((m_{2i} + s_{2i}) mod 2^(L/2))  mod 2^L
/// Key words and characters are below 2^(L/2). Odd n is zero-padded.
std::uint64_t nh(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> s,
                 unsigned out_bits);

/// Production NH: 32-bit halves, 64-bit output (dispatched kernel).
std::uint64_t nh64(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s);
/// 16-bit halves, 32-bit output.
std::uint32_t nh32(std::span<const std::uint16_t> keys, std::span<const std::uint16_t> s);

/// (xor_i ((m_{2i-1} + s_{2i-1})(m_{2i} + s_{2i}) mod 2^K)) >> L, a (K - L)-bit value.
/// Blocks pair consecutive characters with consecutive key words. Odd n is
/// zero-padded; n key words are used.
std::uint64_t folklore_xor(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> s,
                           unsigned word_bits, unsigned char_bits);

// Same family at K = 64, L = 32 and K = 32, L = 16 on native storage.
std::uint32_t folklore_xor64x32(std::span<const std::uint64_t> keys,
                                std::span<const std::uint32_t> s);
std::uint16_t folklore_xor32x16(std::span<const std::uint32_t> keys,
                                std::span<const std::uint16_t> s);

}  // namespace unihash
