// SPDX-License-Identifier: Apache-2.0
#include "unihash/sizing.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <charconv>
#include <ostream>
#include <stdexcept>

namespace unihash {

namespace {

void check_bits(std::uint64_t input_bits, std::uint64_t hash_bits) {
  if (input_bits < 1 || hash_bits < 1) throw std::invalid_argument("M and z must be >= 1");
}

// Six significant digits, independent of the global locale.
std::string fmt6(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return a / b + (a % b != 0); }

}  // namespace

double stinson_min_bits_exact(std::uint64_t input_bits, std::uint64_t hash_bits) {
  check_bits(input_bits, hash_bits);
  if (input_bits + hash_bits > 16000) {
    throw std::invalid_argument("exact Stinson route exceeds long double range");
  }
  using boost::multiprecision::cpp_int;
  const cpp_int one = 1;
  const cpp_int functions = one + (one << input_bits) * ((one << hash_bits) - 1);
  // log2(N) = M + log2(N / 2^M); the quotient is rounded to long double once.
  const cpp_int whole = functions >> input_bits;
  const cpp_int frac = functions - (whole << input_bits);
  const long double q = whole.convert_to<long double>() +
                        std::ldexp(frac.convert_to<long double>(),
                                   -static_cast<int>(input_bits));
  return static_cast<double>(static_cast<long double>(input_bits) + std::log2(q));
}

double stinson_min_bits_approx(std::uint64_t input_bits, std::uint64_t hash_bits) {
  check_bits(input_bits, hash_bits);
  // log2(2^z - 1) = z + log2(1 - 2^-z)
  const long double z = static_cast<long double>(hash_bits);
  const int e = static_cast<int>(std::min<std::uint64_t>(hash_bits, 20000));
  const long double tail = std::log1p(-std::ldexp(1.0L, -e));
  return static_cast<double>(static_cast<long double>(input_bits) + z + tail / std::log(2.0L));
}

double stinson_min_bits(std::uint64_t input_bits, std::uint64_t hash_bits) {
  return input_bits + hash_bits <= kStinsonExactLimit
             ? stinson_min_bits_exact(input_bits, hash_bits)
             : stinson_min_bits_approx(input_bits, hash_bits);
}

std::uint64_t family_bits(std::uint64_t input_bits, std::uint64_t char_bits,
                          std::uint64_t hash_bits) {
  if (char_bits < 1) throw std::invalid_argument("L must be >= 1");
  return (hash_bits + char_bits - 1) * (ceil_div(input_bits, char_bits) + 1);
}

double optimal_L_randbits(std::uint64_t input_bits, std::uint64_t hash_bits) {
  if (input_bits < 1 || hash_bits < 2) throw std::invalid_argument("need M >= 1 and z >= 2");
  return std::sqrt(static_cast<double>(hash_bits - 1) * static_cast<double>(input_bits) / 2.0);
}

double optimal_L_cost(std::uint64_t hash_bits, double alpha) {
  if (!(alpha > 1.0)) throw std::invalid_argument("cost exponent must be > 1");
  return static_cast<double>(hash_bits - 1) / (alpha - 1.0);
}

double cost_per_bit(std::uint64_t hash_bits, double alpha, std::uint64_t char_bits) {
  if (char_bits < 1) throw std::invalid_argument("L must be >= 1");
  return std::pow(static_cast<double>(hash_bits + char_bits - 1), alpha) /
         static_cast<double>(char_bits);
}

StinsonCurve stinson_ratio_curve(std::span<const std::uint64_t> input_bits,
                                 std::uint64_t hash_bits,
                                 const std::optional<std::vector<std::uint64_t>>& word_sizes) {
  if (input_bits.empty()) throw std::invalid_argument("need at least one M value");
  if (hash_bits < 1) throw std::invalid_argument("z must be >= 1");
  StinsonCurve curve;

  std::vector<std::uint64_t> candidates;
  if (word_sizes) {
    for (std::uint64_t K : *word_sizes) {
      if (K + 1 <= hash_bits) {
        curve.notes.push_back("K=" + std::to_string(K) + " skipped: L = K - z + 1 <= 0");
      } else {
        candidates.push_back(K - hash_bits + 1);
      }
    }
    if (candidates.empty()) {
      throw std::invalid_argument("no allowed word size yields a positive character width");
    }
  }

  for (std::uint64_t M : input_bits) {
    if (M < 1) throw std::invalid_argument("M must be >= 1");
    std::vector<std::uint64_t> scan = candidates;
    if (!word_sizes) {
      // Window around sqrt((z - 1) M / 2); L beyond M only adds bits.
      const double centre = hash_bits >= 2 ? optimal_L_randbits(M, hash_bits) : 1.0;
      const auto lo = static_cast<std::uint64_t>(std::max(1.0, std::floor(centre / 4)));
      const auto hi = std::min<std::uint64_t>(M, static_cast<std::uint64_t>(4 * centre) + 64);
      for (std::uint64_t L = std::min(lo, hi); L <= hi; ++L) scan.push_back(L);
    }
    StinsonRow row;
    row.input_bits = M;
    row.family_bits = UINT64_MAX;
    for (std::uint64_t L : scan) {
      const std::uint64_t bits = family_bits(M, L, hash_bits);
      if (bits < row.family_bits || (bits == row.family_bits && L < row.best_L)) {
        row.family_bits = bits;
        row.best_L = L;
      }
    }
    row.stinson_bits = stinson_min_bits(M, hash_bits);
    row.ratio = static_cast<double>(row.family_bits) / row.stinson_bits;
    curve.rows.push_back(row);
  }
  return curve;
}

std::vector<CostRow> cost_curve(std::uint64_t hash_bits, double alpha,
                                std::span<const std::uint64_t> char_bits) {
  if (!(alpha > 1.0)) throw std::invalid_argument("cost exponent must be > 1");
  std::vector<CostRow> rows;
  rows.reserve(char_bits.size());
  for (std::uint64_t L : char_bits) rows.push_back({L, cost_per_bit(hash_bits, alpha, L)});
  return rows;
}

void write_stinson_csv(std::ostream& out, const StinsonCurve& curve) {
  out << "M,best_L,family_bits,stinson_bits,ratio\n";
  for (const auto& r : curve.rows) {
    out << r.input_bits << ',' << r.best_L << ',' << r.family_bits << ','
        << fmt6(r.stinson_bits) << ',' << fmt6(r.ratio) << '\n';
  }
}

void write_cost_csv(std::ostream& out, std::span<const CostRow> rows) {
  out << "L,cost_per_bit\n";
  for (const auto& r : rows) out << r.char_bits << ',' << fmt6(r.cost_per_bit) << '\n';
}

}  // namespace unihash
