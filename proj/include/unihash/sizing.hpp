// SPDX-License-Identifier: Apache-2.0
//
// Random-bit and cost economics of Multilinear hashing.
//
// Hashing M input bits to z pairwise independent bits needs at least
// log2(1 + 2^M (2^z - 1)) random bits (the Stinson bound). Multilinear with
// L-bit characters uses K (n + 1) = (z + L - 1)(ceil(M / L) + 1) bits.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace unihash {

/// Inputs with M + z at or below this use the exact big-integer route.
inline constexpr std::uint64_t kStinsonExactLimit = 1024;

/// Exact route: evaluates 1 + 2^M (2^z - 1) as an integer, then takes log2.
double stinson_min_bits_exact(std::uint64_t input_bits, std::uint64_t hash_bits);
/// Closed form M + log2(2^z - 1); absolute error below 2^(1 - M).
double stinson_min_bits_approx(std::uint64_t input_bits, std::uint64_t hash_bits);
/// Exact when M + z <= kStinsonExactLimit, closed form otherwise.
double stinson_min_bits(std::uint64_t input_bits, std::uint64_t hash_bits);

/// (z + L - 1)(ceil(M / L) + 1)
std::uint64_t family_bits(std::uint64_t input_bits, std::uint64_t char_bits,
                          std::uint64_t hash_bits);

/// sqrt((z - 1) M / 2): minimizes the upper bound (z + L - 1)(M / L + 2).
double optimal_L_randbits(std::uint64_t input_bits, std::uint64_t hash_bits);

/// (z - 1) / (alpha - 1): minimizes (z + L - 1)^alpha / L. Requires alpha > 1.
double optimal_L_cost(std::uint64_t hash_bits, double alpha);

/// (z + L - 1)^alpha / L
double cost_per_bit(std::uint64_t hash_bits, double alpha, std::uint64_t char_bits);

struct StinsonRow {
  std::uint64_t input_bits = 0;
  std::uint64_t best_L = 0;
  std::uint64_t family_bits = 0;
  double stinson_bits = 0;
  double ratio = 0;
};

struct StinsonCurve {
  std::vector<StinsonRow> rows;
  std::vector<std::string> notes;  // e.g. word sizes skipped because L <= 0
};

/// For each M, the character width minimizing family_bits. With
/// `word_sizes` each allowed K maps to L = K - z + 1; without, L is scanned
/// around the closed-form optimum. Throws std::invalid_argument when no
/// allowed word size yields L >= 1.
StinsonCurve stinson_ratio_curve(std::span<const std::uint64_t> input_bits,
                                 std::uint64_t hash_bits,
                                 const std::optional<std::vector<std::uint64_t>>& word_sizes);

struct CostRow {
  std::uint64_t char_bits = 0;
  double cost_per_bit = 0;
};

std::vector<CostRow> cost_curve(std::uint64_t hash_bits, double alpha,
                                std::span<const std::uint64_t> char_bits);

// CSV with a header row, '.' decimal point and 6 significant digits.
void write_stinson_csv(std::ostream& out, const StinsonCurve& curve);
void write_cost_csv(std::ostream& out, std::span<const CostRow> rows);

}  // namespace unihash
