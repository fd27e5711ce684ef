// SPDX-License-Identifier: Apache-2.0
#include "unihash/baselines.hpp"

#include <stdexcept>
#include <string>

#include "unihash/keymaterial.hpp"
#include "unihash/simd.hpp"

namespace unihash {

namespace {

void check_keys(std::size_t have, std::size_t need) {
  if (have < need) {
    throw std::invalid_argument("insufficient key words: need " + std::to_string(need) +
                                ", have " + std::to_string(have));
  }
}

void check_range(std::span<const std::uint64_t> values, std::size_t count, unsigned bits,
                 const char* what) {
  const std::uint64_t mask = low_mask(bits);
  for (std::size_t i = 0; i < count && i < values.size(); ++i) {
    if ((values[i] & ~mask) != 0) throw std::invalid_argument(std::string(what) + " out of range");
  }
}

}  // namespace

std::size_t nh_keys_needed(std::size_t n) { return n + (n & 1); }

std::uint64_t nh(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> s,
                 unsigned out_bits) {
  if (out_bits < 2 || out_bits > 64 || out_bits % 2 != 0) {
    throw std::invalid_argument("NH output width must be even, 2..=64");
  }
  const std::size_t n = s.size();
  check_keys(keys.size(), nh_keys_needed(n));
  const unsigned half = out_bits / 2;
  check_range(keys, nh_keys_needed(n), half, "NH key word");
  check_range(s, n, half, "NH character");
  const std::uint64_t half_mask = low_mask(half);
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < n; i += 2) {
    const std::uint64_t second = i + 1 < n ? s[i + 1] : 0;
    sum += ((keys[i] + s[i]) & half_mask) * ((keys[i + 1] + second) & half_mask);
  }
  return sum & low_mask(out_bits);
}

std::uint64_t nh64(std::span<const std::uint32_t> keys, std::span<const std::uint32_t> s) {
  const std::size_t n = s.size();
  check_keys(keys.size(), nh_keys_needed(n));
  std::uint64_t sum = simd::arith_kernels().nh64(keys, s.first(n & ~std::size_t{1}));
  if (n & 1) sum += std::uint64_t{keys[n - 1] + s[n - 1]} * keys[n];
  return sum;
}

std::uint32_t nh32(std::span<const std::uint16_t> keys, std::span<const std::uint16_t> s) {
  const std::size_t n = s.size();
  check_keys(keys.size(), nh_keys_needed(n));
  std::uint32_t sum = simd::arith_kernels().nh32(keys, s.first(n & ~std::size_t{1}));
  if (n & 1) sum += std::uint32_t{static_cast<std::uint16_t>(keys[n - 1] + s[n - 1])} * keys[n];
  return sum;
}

std::uint64_t folklore_xor(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> s,
                           unsigned word_bits, unsigned char_bits) {
  if (word_bits < 1 || word_bits > 64 || char_bits >= word_bits) {
    throw std::invalid_argument("folklore_xor needs 1 <= L < K <= 64");
  }
  const std::size_t n = s.size();
  const std::size_t need = n + (n & 1);
  check_keys(keys.size(), need);
  check_range(keys, need, word_bits, "key word");
  check_range(s, n, char_bits, "character");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; i += 2) {
    const std::uint64_t second = i + 1 < n ? s[i + 1] : 0;
    acc ^= (keys[i] + s[i]) * (keys[i + 1] + second);
  }
  return (acc & low_mask(word_bits)) >> char_bits;
}

std::uint32_t folklore_xor64x32(std::span<const std::uint64_t> keys,
                                std::span<const std::uint32_t> s) {
  const std::size_t n = s.size();
  check_keys(keys.size(), n + (n & 1));
  std::uint64_t acc = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc ^= (keys[i] + s[i]) * (keys[i + 1] + s[i + 1]);
  if (i < n) acc ^= (keys[i] + s[i]) * keys[i + 1];
  return static_cast<std::uint32_t>(acc >> 32);
}

std::uint16_t folklore_xor32x16(std::span<const std::uint32_t> keys,
                                std::span<const std::uint16_t> s) {
  const std::size_t n = s.size();
  check_keys(keys.size(), n + (n & 1));
  std::uint32_t acc = 0;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc ^= (keys[i] + std::uint32_t{s[i]}) * (keys[i + 1] + std::uint32_t{s[i + 1]});
  }
  if (i < n) acc ^= (keys[i] + std::uint32_t{s[i]}) * keys[i + 1];
  return static_cast<std::uint16_t>(acc >> 16);
}

}  // namespace unihash
