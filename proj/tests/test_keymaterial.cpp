// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "unihash/keymaterial.hpp"

using namespace unihash;

TEST_CASE("generate_keys is deterministic and masked") {
  CHECK(generate_keys(42, 8, 64) == generate_keys(42, 8, 64));
  const KeyBuffer small = generate_keys(42, 8, 4);
  CHECK(small.size() == 8);
  for (auto w : small.words()) CHECK(w < 16);
  CHECK(generate_keys(42, 8, 64) != generate_keys(43, 8, 64));
}

TEST_CASE("counter generator matches a sequential SplitMix64 stream") {
  for (std::uint64_t seed : {0ULL, 1ULL, 7ULL, 0xdeadbeefULL}) {
    for (std::uint64_t i = 0; i < 200; ++i) CHECK(counter_word(seed, i) == oracle::splitmix_at(seed, i));
  }
}

TEST_CASE("golden first key word") {
  CHECK(generate_keys(7, 3, 64)[0] == 0x63cbe1e459320dd7ULL);
}

TEST_CASE("extension is prefix stable") {
  const KeyBuffer base = generate_keys(1, 4, 64);
  CHECK(extend_keys(base, 4) == base);
  const KeyBuffer ext = extend_keys(base, 9);
  REQUIRE(ext.size() == 9);
  for (std::size_t i = 0; i < 4; ++i) CHECK(ext[i] == base[i]);
  CHECK(ext == generate_keys(1, 9, 64));
  CHECK_THROWS_AS(extend_keys(ext, 3), std::invalid_argument);
  for (std::uint64_t a = 1; a < 20; ++a) {
    const KeyBuffer shorter = generate_keys(5, a, 17);
    const KeyBuffer longer = generate_keys(5, a + 13, 17);
    for (std::size_t i = 0; i < a; ++i) CHECK(shorter[i] == longer[i]);
  }
}

TEST_CASE("invalid generator arguments") {
  CHECK_THROWS_AS(generate_keys(1, 0, 64), std::invalid_argument);
  CHECK_THROWS_AS(generate_keys(1, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate_keys(1, 4, 65), std::invalid_argument);
}

TEST_CASE("key file round trip and size") {
  const KeyBuffer k = generate_keys(3, 5, 64);
  std::stringstream ss;
  save_keys(k, ss);
  CHECK(ss.str().size() == kKeyFileHeaderBytes + 40);
  CHECK(ss.str().size() == 64);
  CHECK(ss.str().substr(0, 4) == "MLHK");
  CHECK(load_keys(ss) == k);

  const KeyBuffer k13 = generate_keys(11, 7, 13);
  std::stringstream s2;
  save_keys(k13, s2);
  CHECK(load_keys(s2) == k13);
}

namespace {

std::string saved(const KeyBuffer& k) {
  std::stringstream ss;
  save_keys(k, ss);
  return ss.str();
}

KeyBuffer load_string(const std::string& bytes) {
  std::stringstream ss(bytes);
  return load_keys(ss);
}

}  // namespace

TEST_CASE("key file rejects malformed input") {
  const std::string good = saved(generate_keys(3, 5, 16));
  CHECK(load_string(good) == generate_keys(3, 5, 16));

  std::string bad = good;
  bad[0] = 'X';
  CHECK_THROWS_AS(load_string(bad), FormatError);

  bad = good;
  bad[4] = 2;
  CHECK_THROWS_AS(load_string(bad), FormatError);

  bad = good;
  bad[5] = 0;
  CHECK_THROWS_AS(load_string(bad), FormatError);
  bad[5] = 65;
  CHECK_THROWS_AS(load_string(bad), FormatError);

  bad = good;
  bad[6] = 1;
  CHECK_THROWS_AS(load_string(bad), FormatError);

  CHECK_THROWS_AS(load_string(good.substr(0, good.size() - 1)), FormatError);
  CHECK_THROWS_AS(load_string(good.substr(0, 10)), FormatError);
  CHECK_THROWS_AS(load_string(""), FormatError);

  // A payload word above 2^K.
  bad = good;
  bad[kKeyFileHeaderBytes + 2] = 1;
  CHECK_THROWS_AS(load_string(bad), FormatError);
}
