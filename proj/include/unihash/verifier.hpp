// SPDX-License-Identifier: Apache-2.0
//
// Exhaustive certification of hash families at small word sizes.
//
// Every check enumerates the full key space, so probabilities come out as
// exact integer ratios. A family is strongly universal when, for every pair
// of distinct strings s != s', each cell (y, y') of the joint output table
// holds exactly keyspace / 2^(2 * output_bits) keys.
#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unihash/gf2.hpp"
#include "unihash/multilinear.hpp"

namespace unihash {

/// Exact probability num/den. Compared by value, printed unreduced so counts
/// such as 576/4096 stay recognisable.
struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return static_cast<unsigned __int128>(a.num) * b.den ==
           static_cast<unsigned __int128>(b.num) * a.den;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    return static_cast<unsigned __int128>(a.num) * b.den <=>
           static_cast<unsigned __int128>(b.num) * a.den;
  }
};

struct FamilyUnderTest {
  std::string id;
  std::string params;  // human-readable parameter label, e.g. "K=4 L=2 shift=1"
  unsigned key_word_bits = 0;
  unsigned char_bits = 0;
  unsigned output_bits = 0;
  std::function<std::size_t(std::size_t n)> key_words_needed;
  std::function<std::uint64_t(std::span<const std::uint64_t> keys,
                              std::span<const std::uint64_t> s)>
      evaluate;
};

FamilyUnderTest multilinear_family(const HashParams& p);
FamilyUnderTest multilinear_2by2_family(const HashParams& p);
FamilyUnderTest multilinear_hm_family(const HashParams& p);
FamilyUnderTest gf_multilinear_family(const IrreduciblePoly& p);
FamilyUnderTest gf_multilinear_hm_family(const IrreduciblePoly& p);
/// NH with `out_bits` output; if `low_bits` is set only that many low
/// output bits are kept.
FamilyUnderTest nh_family(unsigned out_bits, std::optional<unsigned> low_bits = std::nullopt);
FamilyUnderTest folklore_family(unsigned word_bits, unsigned char_bits);

// Enumeration limits.
inline constexpr unsigned kMaxKeySpaceBits = 24;
inline constexpr std::uint64_t kMaxKeyPairEvaluations = std::uint64_t{1} << 32;

/// Largest tau with 2^tau | a. Throws std::invalid_argument for a = 0.
unsigned trailing_zeros(std::uint64_t a);

struct Prop1Result {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> solutions;  // ascending
};

/// All x in [0, 2^K) with ((a x + c) mod 2^K) >> (L - 1) == b.
/// Requires K >= L - 1 >= 0, K <= 24, a in [1, 2^L), b < 2^(K-L+1), c < 2^K.
Prop1Result count_prop1_solutions(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                  unsigned word_bits, unsigned char_bits);

/// Counts over the key space, indexed [y * 2^out + y'].
struct JointTable {
  unsigned output_bits = 0;
  std::uint64_t keyspace = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(std::uint64_t y, std::uint64_t y2) const {
    return counts[(y << output_bits) | y2];
  }
  std::uint64_t diagonal() const;
};

/// Number of keys for strings of length n; throws std::length_error past
/// 2^kMaxKeySpaceBits.
std::uint64_t keyspace_size(const FamilyUnderTest& f, std::size_t n);

JointTable joint_distribution(const FamilyUnderTest& f, const CharString& s,
                              const CharString& s2);

/// Per-output counts for a single string.
std::vector<std::uint64_t> output_distribution(const FamilyUnderTest& f, const CharString& s);

/// P(h(s) = h(s')) over the key space. 1 when s == s'.
Fraction collision_probability(const FamilyUnderTest& f, const CharString& s,
                               const CharString& s2);

struct UniversalityReport {
  std::string family;
  std::string params;
  std::size_t length = 0;
  unsigned output_bits = 0;
  std::uint64_t keyspace = 0;
  std::uint64_t strings = 0;
  std::uint64_t pairs = 0;
  std::uint64_t expected_cell = 0;    // keyspace / 2^(2 out), 0 if not integral
  Fraction max_joint_deviation;       // max |cell - expected| / keyspace
  Fraction max_collision_probability;
  std::uint64_t certain_collision_pairs = 0;  // pairs colliding under every key
  std::pair<CharString, CharString> worst_pair;
  bool uniform = false;
  bool universal = false;
  bool strongly_universal = false;
};

/// Exhausts all strings of length n over [0, 2^L), or only `subset`.
/// Throws std::length_error when the enumeration would exceed the limits.
UniversalityReport check_strong_universality(
    const FamilyUnderTest& f, std::size_t n,
    const std::optional<std::vector<CharString>>& subset = std::nullopt);

std::string format_report(const UniversalityReport& r);
void write_report_csv_header(std::ostream& out);
void write_report_csv_row(std::ostream& out, const UniversalityReport& r);

}  // namespace unihash
