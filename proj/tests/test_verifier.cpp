// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "unihash/baselines.hpp"
#include "unihash/verifier.hpp"

using namespace unihash;

TEST_CASE("fractions compare by value") {
  CHECK(Fraction{1, 2} == Fraction{32, 64});
  CHECK(Fraction{1, 8} < Fraction{576, 4096});
  CHECK(Fraction{576, 4096}.str() == "576/4096");
}

TEST_CASE("trailing zeros") {
  CHECK(trailing_zeros(6) == 1);
  CHECK(trailing_zeros(1) == 0);
  for (unsigned j = 0; j <= 10; ++j) CHECK(trailing_zeros(std::uint64_t{1} << j) == j);
  CHECK_THROWS_AS(trailing_zeros(0), std::invalid_argument);
}

TEST_CASE("solution counts") {
  const Prop1Result r = count_prop1_solutions(6, 5, 10, 6, 3);
  CHECK(r.count == 4);
  CHECK(r.solutions == std::vector<std::uint64_t>{2, 23, 34, 55});
  CHECK(count_prop1_solutions(1, 0, 0, 1, 1).count == 1);
  for (std::uint64_t a = 1; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      for (std::uint64_t c = 0; c < 64; ++c) {
        std::uint64_t brute = 0;
        for (std::uint64_t x = 0; x < 64; ++x) brute += ((a * x + c) % 64) / 4 == b;
        const Prop1Result res = count_prop1_solutions(a, b, c, 6, 3);
        CHECK(res.count == brute);
        CHECK(res.count == 4);
        CHECK(res.solutions.size() == res.count);
      }
    }
  }
  CHECK_THROWS_AS(count_prop1_solutions(0, 0, 0, 6, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_prop1_solutions(8, 0, 0, 6, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_prop1_solutions(1, 16, 0, 6, 3), std::invalid_argument);
  CHECK_THROWS_AS(count_prop1_solutions(1, 0, 64, 6, 3), std::invalid_argument);
}

TEST_CASE("joint table of multilinear at K=4, L=2") {
  const FamilyUnderTest f = multilinear_family(HashParams::theorem(4, 2));
  CHECK(f.output_bits == 3);
  CHECK(keyspace_size(f, 2) == 4096);
  const JointTable t = joint_distribution(f, CharString{1, 2}, CharString{2, 1});
  CHECK(t.keyspace == 4096);
  REQUIRE(t.counts.size() == 64);
  for (auto c : t.counts) CHECK(c == 64);
  CHECK(t.diagonal() == 512);
  CHECK_THROWS_AS(joint_distribution(f, CharString{1, 2}, CharString{1, 2}), std::invalid_argument);

  const auto dist = output_distribution(f, CharString{1, 2});
  for (auto c : dist) CHECK(c == 512);
}

TEST_CASE("collision probabilities") {
  const FamilyUnderTest f = multilinear_family(HashParams::theorem(4, 2));
  CHECK(collision_probability(f, CharString{1, 2}, CharString{1, 2}) == Fraction{1, 1});
  CHECK(collision_probability(f, CharString{1, 2}, CharString{3, 0}) == Fraction{1, 8});
  const FamilyUnderTest folk = folklore_family(6, 3);
  CHECK(collision_probability(folk, CharString{0, 0}, CharString{2, 6}).num == 576);
  CHECK(collision_probability(folk, CharString{0, 0}, CharString{2, 6}).den == 4096);
}

TEST_CASE("GF joint table at L=2") {
  const FamilyUnderTest f = gf_multilinear_family(default_poly(2));
  const JointTable t = joint_distribution(f, CharString{0, 1}, CharString{3, 2});
  CHECK(t.keyspace == 64);
  for (auto c : t.counts) CHECK(c == 4);
}

TEST_CASE("certification reports") {
  const UniversalityReport ml = check_strong_universality(multilinear_family(HashParams::theorem(4, 2)), 2);
  CHECK(ml.strongly_universal);
  CHECK(ml.universal);
  CHECK(ml.uniform);
  CHECK(ml.pairs == 120);
  CHECK(ml.expected_cell == 64);
  CHECK(ml.max_joint_deviation == Fraction{0, 1});
  CHECK(ml.max_collision_probability == Fraction{1, 8});

  const UniversalityReport full = check_strong_universality(multilinear_family(HashParams::truncated(6, 3)), 2);
  CHECK(full.output_bits == 3);
  CHECK(full.strongly_universal);

  const UniversalityReport folk = check_strong_universality(folklore_family(6, 3), 2);
  CHECK_FALSE(folk.strongly_universal);
  CHECK(folk.max_collision_probability >= Fraction{576, 4096});

  const UniversalityReport sub = check_strong_universality(
      multilinear_hm_family(HashParams::theorem(4, 2)), 2,
      std::vector<CharString>{CharString{0, 0}, CharString{1, 3}, CharString{2, 2}});
  CHECK(sub.strings == 3);
  CHECK(sub.pairs == 3);
  CHECK(sub.strongly_universal);

  std::ostringstream csv;
  write_report_csv_header(csv);
  write_report_csv_row(csv, ml);
  CHECK(csv.str().rfind("family,params,n,output_bits,", 0) == 0);
  CHECK(format_report(ml).find("strongly_universal=yes") != std::string::npos);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(keyspace_size(multilinear_family(HashParams::theorem(8, 3)), 3), std::length_error);
  CHECK_THROWS_AS(check_strong_universality(multilinear_family(HashParams::theorem(8, 3)), 3), std::length_error);
}
