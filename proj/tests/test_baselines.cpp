// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "unihash/baselines.hpp"
#include "unihash/keymaterial.hpp"

using namespace unihash;

namespace {

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, unsigned bits) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) w = rng() & low_mask(bits);
  return v;
}

template <class T>
std::vector<T> narrow(const std::vector<std::uint64_t>& v) {
  return std::vector<T>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("Rabin-Karp") {
  CHECK(rabin_karp<std::uint32_t>(std::vector<std::uint32_t>{}) == 0);
  CHECK(rabin_karp<std::uint32_t>(std::vector<std::uint32_t>{1}) == 1);
  CHECK(rabin_karp<std::uint32_t>(std::vector<std::uint32_t>{1, 2}) == 33);
  CHECK(rabin_karp<std::uint16_t>(std::vector<std::uint16_t>{1, 2, 3}) == 31 * 33 + 3);
  // Wraps modulo 2^32.
  const std::vector<std::uint32_t> big{0xffffffffu, 0xffffffffu};
  CHECK(rabin_karp<std::uint32_t>(big) == static_cast<std::uint32_t>((0xffffffffULL * 31 + 0xffffffffULL) & 0xffffffffULL));
}

TEST_CASE("SAX") {
  CHECK(sax<std::uint32_t>(std::vector<std::uint32_t>{}) == 0);
  CHECK(sax<std::uint32_t>(std::vector<std::uint32_t>{1}) == 1);
  CHECK(sax<std::uint32_t>(std::vector<std::uint32_t>{1, 2}) == 35);
}

TEST_CASE("NH") {
  const std::uint64_t a = 0xfedcba9876543210ULL, b = 0x0123456789abcdefULL;
  CHECK(nh(std::vector<std::uint64_t>{0, 0}, std::vector<std::uint64_t>{a >> 32, b >> 32}, 64) ==
        (a >> 32) * (b >> 32));
  CHECK(nh_keys_needed(3) == 4);
  CHECK(nh_keys_needed(4) == 4);
  CHECK_THROWS_AS(nh(std::vector<std::uint64_t>{0, 0}, std::vector<std::uint64_t>{1, 1}, 5), std::invalid_argument);
  CHECK_THROWS_AS(nh(std::vector<std::uint64_t>{0, 8}, std::vector<std::uint64_t>{1, 1}, 6), std::invalid_argument);
  CHECK_THROWS_AS(nh(std::vector<std::uint64_t>{0, 0}, std::vector<std::uint64_t>{1, 1, 1}, 6), std::invalid_argument);

  std::mt19937_64 rng(31);
  for (int t = 0; t < 2000; ++t) {
    const unsigned out = 2 * (1 + rng() % 32);
    const std::size_t n = rng() % 30;
    const auto s = random_words(rng, n, out / 2);
    const auto keys = random_words(rng, nh_keys_needed(n), out / 2);
    CHECK(nh(keys, s, out) == oracle::nh(keys, s, out));
  }
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = rng() % 70;
    const auto s = random_words(rng, n, 32);
    const auto keys = random_words(rng, nh_keys_needed(n), 32);
    CHECK(nh64(narrow<std::uint32_t>(keys), narrow<std::uint32_t>(s)) == oracle::nh(keys, s, 64));
    const auto s16 = random_words(rng, n, 16);
    const auto k16 = random_words(rng, nh_keys_needed(n), 16);
    CHECK(nh32(narrow<std::uint16_t>(k16), narrow<std::uint16_t>(s16)) == oracle::nh(k16, s16, 32));
  }
}

TEST_CASE("folklore xor") {
  for (std::uint64_t m1 = 0; m1 < 64; ++m1) {
    for (std::uint64_t m2 = 0; m2 < 64; ++m2) {
      CHECK(folklore_xor(std::vector<std::uint64_t>{m1, m2}, std::vector<std::uint64_t>{0, 0}, 6, 3) ==
            ((m1 * m2) % 64) / 8);
    }
  }
  CHECK(folklore_xor(std::vector<std::uint64_t>{0, 0}, std::vector<std::uint64_t>{5, 7}, 6, 3) == (35 % 64) / 8);
  CHECK_THROWS_AS(folklore_xor(std::vector<std::uint64_t>{0, 0}, std::vector<std::uint64_t>{1, 1}, 3, 3),
                  std::invalid_argument);

  std::mt19937_64 rng(32);
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = rng() % 40;
    const auto s = random_words(rng, n, 32);
    const auto keys = random_words(rng, n + (n & 1), 64);
    CHECK(folklore_xor(keys, s, 64, 32) == oracle::folklore(keys, s, 64, 32));
    CHECK(folklore_xor64x32(keys, narrow<std::uint32_t>(s)) == oracle::folklore(keys, s, 64, 32));
    const auto s16 = random_words(rng, n, 16);
    const auto k32 = random_words(rng, n + (n & 1), 32);
    CHECK(folklore_xor32x16(narrow<std::uint32_t>(k32), narrow<std::uint16_t>(s16)) ==
          oracle::folklore(k32, s16, 32, 16));
  }
}
