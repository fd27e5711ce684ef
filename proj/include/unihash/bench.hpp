// SPDX-License-Identifier: Apache-2.0
//
// Throughput harness. Every configuration is checked against a reference
// evaluator before it is timed; the timed loop folds each hash into a
// checksum so the work cannot be optimised away.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "unihash/multilinear.hpp"

namespace unihash {

enum class Family {
  multilinear,
  multilinear_2x2,
  multilinear_hm,
  gf_multilinear,
  gf_multilinear_hm,
  rabin_karp,
  sax,
  nh,
  folklore,
};

std::span<const Family> all_families();
std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

enum class TimerMode { wall_clock, cycle_counter };

struct BenchConfig {
  Family family = Family::multilinear;
  unsigned char_bits = 32;  // 16 or 32
  std::size_t length = 1024;
  std::size_t trials = 1000;
  std::size_t repetitions = 3;
  std::uint64_t seed = 1;
  TimerMode timer = TimerMode::wall_clock;
  std::optional<double> clock_ghz;  // converts ns to cycles when set

  void validate() const;
};

/// Raised when a family's output disagrees with its reference evaluator.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic benchmark input; characters below 2^char_bits.
CharString generate_input(std::uint64_t seed, std::size_t n, unsigned char_bits);

/// Production output and reference output of one family on the benchmark
/// key material for `config`, hashing `input`.
struct OracleCheck {
  std::uint64_t production = 0;
  std::uint64_t reference = 0;
  bool ok() const { return production == reference; }
};
OracleCheck check_against_oracle(const BenchConfig& config, const CharString& input);

struct BenchRow {
  std::string family;
  unsigned char_bits = 0;
  std::size_t length = 0;
  std::size_t repetition = 0;
  std::uint64_t bytes_hashed = 0;
  double ns_per_byte = 0;
  std::optional<double> cycles_per_byte;
  std::uint64_t checksum = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<std::string> warnings;
};

/// Throws OracleMismatch before timing if the production path is wrong.
BenchReport run_bench(const BenchConfig& config);

void write_bench_csv_header(std::ostream& out);
void write_bench_csv_rows(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace unihash
