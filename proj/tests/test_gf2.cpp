// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "unihash/bench.hpp"
#include "unihash/gf2.hpp"
#include "unihash/keymaterial.hpp"

using namespace unihash;

namespace {

constexpr std::uint64_t kP32 = (std::uint64_t{1} << 32) | (1u << 7) | (1u << 6) | (1u << 2) | 1u;

std::vector<std::uint64_t> random_words(std::mt19937_64& rng, std::size_t n, unsigned bits) {
  std::vector<std::uint64_t> v(n);
  for (auto& w : v) w = rng() & low_mask(bits);
  return v;
}

}  // namespace

TEST_CASE("carry-less products") {
  CHECK(clmul(0xdeadbeef, 0) == 0);
  CHECK(clmul(0xdeadbeef, 1) == 0xdeadbeef);
  CHECK(clmul(0b111, 0b11) == 0b1001);
  CHECK(clmul(0xffffffff, 0xffffffff) == oracle::clmul(0xffffffff, 0xffffffff).first);
  std::mt19937_64 rng(21);
  for (int t = 0; t < 2000; ++t) {
    const std::uint64_t a = rng(), b = rng();
    const auto [lo, hi] = oracle::clmul(a, b);
    CHECK(clmul_portable(a, b) == Clmul128{lo, hi});
    CHECK(clmul_dispatched(a, b) == Clmul128{lo, hi});
  }
}

TEST_CASE("polynomial degree") {
  CHECK(poly_degree(1) == 0);
  CHECK(poly_degree(0b1011) == 3);
  CHECK(poly_degree(kP32) == 32);
}

TEST_CASE("default polynomials are irreducible with short tails") {
  CHECK(default_poly(32).bits() == kP32);
  CHECK(default_poly(3).bits() == 0b1011);
  CHECK(default_poly(2).bits() == 0b111);
  CHECK(default_poly(8).bits() == 0x11b);
  CHECK(default_poly(16).bits() == 0x1002b);
  for (unsigned L : {2u, 3u, 8u, 16u, 32u}) {
    const IrreduciblePoly p = default_poly(L);
    CHECK(p.degree() == L);
    CHECK(oracle::irreducible(p.bits()));
    const std::uint64_t tail = p.bits() ^ (std::uint64_t{1} << L);
    CHECK((tail == 0 || poly_degree(tail) <= static_cast<int>(L / 2)));
  }
  CHECK_FALSE(oracle::irreducible(0b101));
  CHECK_THROWS_AS(default_poly(5), std::invalid_argument);
}

TEST_CASE("polynomial validation") {
  CHECK_THROWS_AS(IrreduciblePoly(0b1011, 4), std::invalid_argument);
  CHECK_THROWS_AS(IrreduciblePoly(0b1011, 0), std::invalid_argument);
  CHECK_THROWS_AS(IrreduciblePoly((std::uint64_t{1} << 8) | 0x80 | 1, 8), std::invalid_argument);
  CHECK_NOTHROW(IrreduciblePoly(0x11b, 8));
}

TEST_CASE("reduction small cases") {
  const IrreduciblePoly p3 = default_poly(3);
  for (auto reduce : {barrett_reduce, poly_mod_reference}) {
    CHECK(reduce(0, p3) == 0);
    CHECK(reduce(p3.bits(), p3) == 0);
    CHECK(reduce(0b11011, p3) == 0b110);
    CHECK(reduce(0b101, p3) == 0b101);
  }
}

TEST_CASE("reduction agrees with long division") {
  for (unsigned L : {2u, 3u, 8u}) {
    const IrreduciblePoly p = default_poly(L);
    for (std::uint64_t q = 0; q < (std::uint64_t{1} << (2 * L - 1)); ++q) {
      CHECK(poly_mod_reference(q, p) == oracle::poly_mod(q, p.bits()));
      CHECK(barrett_reduce(q, p) == oracle::poly_mod(q, p.bits()));
    }
  }
  const IrreduciblePoly p16 = default_poly(16);
  const IrreduciblePoly p32 = default_poly(32);
  std::mt19937_64 rng(22);
  for (int t = 0; t < 3000; ++t) {
    const std::uint64_t q = rng() >> 1;
    CHECK(barrett_reduce(q, p32) == oracle::poly_mod(q, kP32));
    CHECK(poly_mod_reference(q, p32) == oracle::poly_mod(q, kP32));
    const std::uint64_t q16 = rng() & low_mask(31);
    CHECK(barrett_reduce(q16, p16) == oracle::poly_mod(q16, p16.bits()));
  }
}

TEST_CASE("GF multilinear small cases") {
  const IrreduciblePoly p3 = default_poly(3);
  CHECK(gf_multilinear(std::vector<std::uint64_t>{0, 1}, std::vector<std::uint64_t>{5}, p3) == 5);
  CHECK(gf_multilinear_hm(std::vector<std::uint64_t>{0, 0, 0}, std::vector<std::uint64_t>{0b111, 0b11}, p3) ==
        0b010);
  CHECK(gf_multilinear(std::vector<std::uint64_t>{6, 3, 3}, std::vector<std::uint64_t>{0, 0}, p3) == 6);
  const std::uint64_t a = 0x12345678, b = 0x9abcdef0;
  CHECK(gf_multilinear_hm(std::vector<std::uint64_t>{0, 0, 0}, std::vector<std::uint64_t>{a, b}, default_poly(32)) ==
        barrett_reduce(clmul(a, b), default_poly(32)));
  CHECK(gf_multilinear_keys_needed(4) == 5);
  CHECK(gf_multilinear_hm_keys_needed(3) == 5);
  CHECK(gf_multilinear_key_bits(1024, 32) == 1025 * 32);
  CHECK_THROWS_AS(gf_multilinear(std::vector<std::uint64_t>{0, 8}, std::vector<std::uint64_t>{5}, p3),
                  std::invalid_argument);
  CHECK_THROWS_AS(gf_multilinear(std::vector<std::uint64_t>{0, 1}, std::vector<std::uint64_t>{8}, p3),
                  std::invalid_argument);
  CHECK_THROWS_AS(gf_multilinear(std::vector<std::uint64_t>{0}, std::vector<std::uint64_t>{1}, p3),
                  std::invalid_argument);
}

TEST_CASE("GF golden values") {
  const KeyBuffer keys = generate_keys(42, 1025, 32);
  const CharString s = generate_input(7, 1024, 32);
  const IrreduciblePoly p = default_poly(32);
  CHECK(oracle::gf_multilinear(keys.words(), s.chars(), kP32, false) == 0xa26bc0b6);
  CHECK(oracle::gf_multilinear(keys.words(), s.chars(), kP32, true) == 0xe5d53e7d);
  CHECK(gf_multilinear(keys.words(), s.chars(), p) == 0xa26bc0b6);
  CHECK(gf_multilinear_hm(keys.words(), s.chars(), p) == 0xe5d53e7d);
  const std::vector<std::uint32_t> k32(keys.words().begin(), keys.words().end());
  const std::vector<std::uint32_t> s32(s.chars().begin(), s.chars().end());
  CHECK(gf_multilinear32(k32, s32, p) == 0xa26bc0b6);
  CHECK(gf_multilinear32_hm(k32, s32, p) == 0xe5d53e7d);
}

TEST_CASE("GF evaluators match the composed oracle") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 400; ++t) {
    const unsigned L = std::array{2u, 3u, 8u, 16u, 32u}[rng() % 5];
    const IrreduciblePoly p = default_poly(L);
    const std::size_t n = rng() % 20;
    const auto s = random_words(rng, n, L);
    const auto keys = random_words(rng, gf_multilinear_hm_keys_needed(n), L);
    CHECK(gf_multilinear(keys, s, p) == oracle::gf_multilinear(keys, s, p.bits(), false));
    CHECK(gf_multilinear_hm(keys, s, p) == oracle::gf_multilinear(keys, s, p.bits(), true));
    const std::vector<std::uint32_t> k32(keys.begin(), keys.end());
    const std::vector<std::uint32_t> s32(s.begin(), s.end());
    CHECK(gf_multilinear32(k32, s32, p) == oracle::gf_multilinear(keys, s, p.bits(), false));
    CHECK(gf_multilinear32_hm(k32, s32, p) == oracle::gf_multilinear(keys, s, p.bits(), true));
  }
}
