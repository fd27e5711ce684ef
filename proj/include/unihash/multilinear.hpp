// SPDX-License-Identifier: Apache-2.0
//
// Multilinear string hashing over the ring Z/2^K Z.
//
//   Multilinear:     h(s) = ((m_1 + sum_i m_{i+1} s_i) mod 2^K) >> shift
//   2-by-2:          same value, terms accumulated two at a time
//   Multilinear-HM:  h(s) = ((m_1 + sum_i (m_{2i} + s_{2i-1})(m_{2i+1} + s_{2i})) mod 2^K) >> shift
//
// With shift = L - 1 the output has K - L + 1 pairwise independent bits.
// The production configuration (K = 64, L = 32, shift = 32) keeps the top 32
// bits, a subset of those bits.
#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "unihash/keymaterial.hpp"

namespace unihash {

struct HashParams {
  unsigned word_bits = 64;  // K
  unsigned char_bits = 32;  // L
  unsigned shift = 32;      // L - 1 or L

  unsigned output_bits() const { return word_bits - shift; }

  /// Throws std::invalid_argument unless 1 <= L <= K + 1, K <= 64,
  /// shift in {L - 1, L} and at least one output bit remains.
  void validate() const;

  /// shift = L - 1: the exact independence width.
  static HashParams theorem(unsigned word_bits, unsigned char_bits) {
    return {word_bits, char_bits, char_bits - 1};
  }
  /// shift = L: drops one more low bit, as the 64/32 production path does.
  static HashParams truncated(unsigned word_bits, unsigned char_bits) {
    return {word_bits, char_bits, char_bits};
  }

  friend bool operator==(const HashParams&, const HashParams&) = default;
};

inline constexpr HashParams kProduction64{64, 32, 32};
inline constexpr HashParams kProduction32{32, 16, 16};

/// A string of L-bit characters. Characters are stored widened to 64 bits;
/// their range is checked against L when a hash is evaluated.
class CharString {
 public:
  CharString() = default;
  explicit CharString(std::vector<std::uint64_t> chars) : chars_(std::move(chars)) {}
  CharString(std::initializer_list<std::uint64_t> chars) : chars_(chars) {}

  /// Reinterprets raw bytes as little-endian `char_bits`-bit characters
  /// (char_bits in {8, 16, 32, 64}). A trailing partial character is
  /// completed with zero high-order bytes.
  static CharString from_bytes(std::span<const std::byte> bytes, unsigned char_bits);

  std::span<const std::uint64_t> chars() const { return chars_; }
  std::size_t size() const { return chars_.size(); }
  bool empty() const { return chars_.empty(); }
  std::uint64_t operator[](std::size_t i) const { return chars_[i]; }

  friend bool operator==(const CharString&, const CharString&) = default;

 private:
  std::vector<std::uint64_t> chars_;
};

/// Key words consumed by each family for a string of n characters.
std::size_t multilinear_keys_needed(std::size_t n);
std::size_t multilinear_hm_keys_needed(std::size_t n);  // n rounded up to even, plus one

// Generic evaluators, any valid HashParams. Arithmetic wraps modulo 2^K.
// Throw std::invalid_argument on too few key words, a key word >= 2^K or a
// character >= 2^L.
std::uint64_t multilinear(std::span<const std::uint64_t> keys,
                          std::span<const std::uint64_t> s, const HashParams& p);
std::uint64_t multilinear_2by2(std::span<const std::uint64_t> keys,
                               std::span<const std::uint64_t> s, const HashParams& p);
/// Odd-length input is padded with a zero character.
std::uint64_t multilinear_hm(std::span<const std::uint64_t> keys,
                             std::span<const std::uint64_t> s, const HashParams& p);

inline std::uint64_t multilinear(const KeyBuffer& key, const CharString& s, const HashParams& p) {
  return multilinear(key.words(), s.chars(), p);
}
inline std::uint64_t multilinear_2by2(const KeyBuffer& key, const CharString& s,
                                      const HashParams& p) {
  return multilinear_2by2(key.words(), s.chars(), p);
}
inline std::uint64_t multilinear_hm(const KeyBuffer& key, const CharString& s,
                                    const HashParams& p) {
  return multilinear_hm(key.words(), s.chars(), p);
}

/// Appends the terminator character 1, then a 0 if `pad_to_even` and the
/// length is odd. Makes variable-length strings safe to hash.
CharString encode_variable(const CharString& s, bool pad_to_even);

/// Small-word evaluator that reduces modulo 2^K after every step, so K need
/// not be a machine width. Requires K <= 32.
std::uint64_t reference_multilinear(std::span<const std::uint64_t> keys,
                                    std::span<const std::uint64_t> s, unsigned word_bits,
                                    unsigned char_bits, unsigned shift);

// Production evaluators. Dispatch to the best kernel for this CPU.
// K = 64, L = 32, 32-bit output.
std::uint32_t multilinear64x32(std::span<const std::uint64_t> keys,
                               std::span<const std::uint32_t> s);
std::uint32_t multilinear64x32_2by2(std::span<const std::uint64_t> keys,
                                    std::span<const std::uint32_t> s);
std::uint32_t multilinear64x32_hm(std::span<const std::uint64_t> keys,
                                  std::span<const std::uint32_t> s);
// K = 32, L = 16, 16-bit output.
std::uint16_t multilinear32x16(std::span<const std::uint32_t> keys,
                               std::span<const std::uint16_t> s);
std::uint16_t multilinear32x16_2by2(std::span<const std::uint32_t> keys,
                                    std::span<const std::uint16_t> s);
std::uint16_t multilinear32x16_hm(std::span<const std::uint32_t> keys,
                                  std::span<const std::uint16_t> s);

}  // namespace unihash
