// SPDX-License-Identifier: Apache-2.0
#include "unihash/multilinear.hpp"

#include <stdexcept>
#include <string>

#include "unihash/simd.hpp"

namespace unihash {

namespace {

void check_inputs(std::span<const std::uint64_t> keys, std::size_t keys_needed,
                  std::span<const std::uint64_t> s, const HashParams& p) {
  p.validate();
  if (keys.size() < keys_needed) {
    throw std::invalid_argument("insufficient key words: need " + std::to_string(keys_needed) +
                                ", have " + std::to_string(keys.size()));
  }
  const std::uint64_t key_mask = low_mask(p.word_bits);
  for (std::size_t i = 0; i < keys_needed; ++i) {
    if ((keys[i] & ~key_mask) != 0) throw std::invalid_argument("key word exceeds 2^K");
  }
  const std::uint64_t char_mask = low_mask(p.char_bits);
  for (std::uint64_t c : s) {
    if ((c & ~char_mask) != 0) throw std::invalid_argument("character exceeds 2^L");
  }
}

inline std::uint64_t finish(std::uint64_t acc, const HashParams& p) {
  return (acc & low_mask(p.word_bits)) >> p.shift;
}

template <class Key>
void check_production(std::span<const Key> keys, std::size_t needed) {
  if (keys.size() < needed) {
    throw std::invalid_argument("insufficient key words: need " + std::to_string(needed) +
                                ", have " + std::to_string(keys.size()));
  }
}

}  // namespace

void HashParams::validate() const {
  if (word_bits < 1 || word_bits > 64) throw std::invalid_argument("K must be in 1..=64");
  if (char_bits < 1 || char_bits - 1 > word_bits) {
    throw std::invalid_argument("need K >= L - 1 >= 0");
  }
  if (shift != char_bits - 1 && shift != char_bits) {
    throw std::invalid_argument("shift must be L - 1 or L");
  }
  if (shift >= word_bits) throw std::invalid_argument("no output bits remain (shift >= K)");
}

CharString CharString::from_bytes(std::span<const std::byte> bytes, unsigned char_bits) {
  if (char_bits != 8 && char_bits != 16 && char_bits != 32 && char_bits != 64) {
    throw std::invalid_argument("byte reinterpretation needs char_bits in {8,16,32,64}");
  }
  const std::size_t width = char_bits / 8;
  std::vector<std::uint64_t> chars((bytes.size() + width - 1) / width, 0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    chars[i / width] |= std::uint64_t{std::to_integer<std::uint8_t>(bytes[i])} << (8 * (i % width));
  }
  return CharString(std::move(chars));
}

std::size_t multilinear_keys_needed(std::size_t n) { return n + 1; }
std::size_t multilinear_hm_keys_needed(std::size_t n) { return n + (n & 1) + 1; }

std::uint64_t multilinear(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> s,
                          const HashParams& p) {
  check_inputs(keys, multilinear_keys_needed(s.size()), s, p);
  std::uint64_t sum = keys[0];
  for (std::size_t i = 0; i < s.size(); ++i) sum += keys[i + 1] * s[i];
  return finish(sum, p);
}

std::uint64_t multilinear_2by2(std::span<const std::uint64_t> keys,
                               std::span<const std::uint64_t> s, const HashParams& p) {
  check_inputs(keys, multilinear_keys_needed(s.size()), s, p);
  const std::size_t n = s.size();
  std::uint64_t sum = keys[0];
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) sum += keys[i + 1] * s[i] + s[i + 1] * keys[i + 2];
  if (i < n) sum += keys[i + 1] * s[i];  // zero-padded partner contributes nothing
  return finish(sum, p);
}

std::uint64_t multilinear_hm(std::span<const std::uint64_t> keys,
                             std::span<const std::uint64_t> s, const HashParams& p) {
  check_inputs(keys, multilinear_hm_keys_needed(s.size()), s, p);
  const std::size_t n = s.size();
  std::uint64_t sum = keys[0];
  for (std::size_t i = 0; i < n; i += 2) {
    const std::uint64_t second = i + 1 < n ? s[i + 1] : 0;
    sum += (keys[i + 1] + s[i]) * (keys[i + 2] + second);
  }
  return finish(sum, p);
}

CharString encode_variable(const CharString& s, bool pad_to_even) {
  std::vector<std::uint64_t> out(s.chars().begin(), s.chars().end());
  out.push_back(1);
  if (pad_to_even && out.size() % 2 == 1) out.push_back(0);
  return CharString(std::move(out));
}

std::uint64_t reference_multilinear(std::span<const std::uint64_t> keys,
                                    std::span<const std::uint64_t> s, unsigned word_bits,
                                    unsigned char_bits, unsigned shift) {
  if (word_bits > 32) throw std::invalid_argument("reference_multilinear requires K <= 32");
  const HashParams p{word_bits, char_bits, shift};
  check_inputs(keys, multilinear_keys_needed(s.size()), s, p);
  const std::uint64_t modulus = std::uint64_t{1} << word_bits;
  std::uint64_t acc = keys[0] % modulus;
  for (std::size_t i = 0; i < s.size(); ++i) {
    acc = (acc + (keys[i + 1] * (s[i] % modulus)) % modulus) % modulus;
  }
  return acc >> shift;
}

std::uint32_t multilinear64x32(std::span<const std::uint64_t> keys,
                               std::span<const std::uint32_t> s) {
  check_production(keys, s.size() + 1);
  return static_cast<std::uint32_t>(simd::arith_kernels().ml64x32(keys, s) >> 32);
}

std::uint32_t multilinear64x32_2by2(std::span<const std::uint64_t> keys,
                                    std::span<const std::uint32_t> s) {
  check_production(keys, s.size() + 1);
  return static_cast<std::uint32_t>(simd::arith_kernels().ml64x32_2by2(keys, s) >> 32);
}

std::uint32_t multilinear64x32_hm(std::span<const std::uint64_t> keys,
                                  std::span<const std::uint32_t> s) {
  const std::size_t n = s.size();
  check_production(keys, multilinear_hm_keys_needed(n));
  std::uint64_t sum = simd::arith_kernels().hm64x32(keys, s.first(n & ~std::size_t{1}));
  if (n & 1) sum += (keys[n] + s[n - 1]) * keys[n + 1];
  return static_cast<std::uint32_t>(sum >> 32);
}

std::uint16_t multilinear32x16(std::span<const std::uint32_t> keys,
                               std::span<const std::uint16_t> s) {
  check_production(keys, s.size() + 1);
  return static_cast<std::uint16_t>(simd::arith_kernels().ml32x16(keys, s) >> 16);
}

std::uint16_t multilinear32x16_2by2(std::span<const std::uint32_t> keys,
                                    std::span<const std::uint16_t> s) {
  check_production(keys, s.size() + 1);
  return static_cast<std::uint16_t>(simd::arith_kernels().ml32x16_2by2(keys, s) >> 16);
}

std::uint16_t multilinear32x16_hm(std::span<const std::uint32_t> keys,
                                  std::span<const std::uint16_t> s) {
  const std::size_t n = s.size();
  check_production(keys, multilinear_hm_keys_needed(n));
  std::uint32_t sum = simd::arith_kernels().hm32x16(keys, s.first(n & ~std::size_t{1}));
  if (n & 1) sum += (keys[n] + std::uint32_t{s[n - 1]}) * keys[n + 1];
  return static_cast<std::uint16_t>(sum >> 16);
}

}  // namespace unihash
