// SPDX-License-Identifier: Apache-2.0
#include "unihash/bench.hpp"

#include <array>
#include <charconv>
#include <chrono>
#include <functional>
#include <memory>
#include <ostream>

#if defined(__x86_64__) || defined(__i386__)
#include <x86intrin.h>
#define UNIHASH_HAVE_TSC 1
#endif

#include "unihash/baselines.hpp"
#include "unihash/gf2.hpp"
#include "unihash/keymaterial.hpp"

namespace unihash {

namespace {

constexpr std::array<Family, 9> kFamilies = {
    Family::multilinear, Family::multilinear_2x2,   Family::multilinear_hm,
    Family::gf_multilinear, Family::gf_multilinear_hm, Family::rabin_karp,
    Family::sax,         Family::nh,                Family::folklore,
};

// Separates the input stream from the key stream for the same seed.
constexpr std::uint64_t kInputStream = 0x6a09e667f3bcc909ULL;

template <class T>
std::vector<T> narrow(std::span<const std::uint64_t> v) {
  return std::vector<T>(v.begin(), v.end());
}

// Reference for the carry-less families: bitwise products, xor fold, and
// long division, with no kernel or Barrett step involved.
std::uint64_t gf_reference(std::span<const std::uint64_t> keys, std::span<const std::uint64_t> s,
                           const IrreduciblePoly& p, bool half_multiplications) {
  auto product = [](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    for (unsigned i = 0; i < 32; ++i) {
      if ((b >> i) & 1) r ^= a << i;
    }
    return r;
  };
  std::uint64_t q = keys[0];
  if (half_multiplications) {
    for (std::size_t i = 0; i < s.size(); i += 2) {
      const std::uint64_t second = i + 1 < s.size() ? s[i + 1] : 0;
      q ^= product(keys[i + 1] ^ s[i], keys[i + 2] ^ second);
    }
  } else {
    for (std::size_t i = 0; i < s.size(); ++i) q ^= product(keys[i + 1], s[i]);
  }
  return poly_mod_reference(q, p);
}

struct Workload {
  std::function<std::uint64_t()> production;
  std::function<std::uint64_t()> reference;
};

// Key material and native-width copies are captured by value so the timed
// closure owns everything it touches.
Workload make_workload(const BenchConfig& c, const CharString& input) {
  const std::size_t n = input.size();
  const bool wide = c.char_bits == 32;
  auto chars = std::make_shared<const CharString>(input);
  auto in32 = std::make_shared<const std::vector<std::uint32_t>>(narrow<std::uint32_t>(input.chars()));
  auto in16 = std::make_shared<const std::vector<std::uint16_t>>(narrow<std::uint16_t>(input.chars()));

  switch (c.family) {
    case Family::multilinear:
    case Family::multilinear_2x2:
    case Family::multilinear_hm: {
      const bool hm = c.family == Family::multilinear_hm;
      const HashParams params = wide ? kProduction64 : kProduction32;
      auto keys = std::make_shared<const KeyBuffer>(generate_keys(
          c.seed, hm ? multilinear_hm_keys_needed(n) : multilinear_keys_needed(n),
          params.word_bits));
      Workload w;
      w.reference = [=] {
        return hm ? multilinear_hm(keys->words(), chars->chars(), params)
                  : multilinear(keys->words(), chars->chars(), params);
      };
      if (wide) {
        auto k = keys;
        const Family f = c.family;
        w.production = [=]() -> std::uint64_t {
          switch (f) {
            case Family::multilinear: return multilinear64x32(k->words(), *in32);
            case Family::multilinear_2x2: return multilinear64x32_2by2(k->words(), *in32);
            default: return multilinear64x32_hm(k->words(), *in32);
          }
        };
      } else {
        auto k32 = std::make_shared<const std::vector<std::uint32_t>>(
            narrow<std::uint32_t>(keys->words()));
        const Family f = c.family;
        w.production = [=]() -> std::uint64_t {
          switch (f) {
            case Family::multilinear: return multilinear32x16(*k32, *in16);
            case Family::multilinear_2x2: return multilinear32x16_2by2(*k32, *in16);
            default: return multilinear32x16_hm(*k32, *in16);
          }
        };
      }
      return w;
    }
    case Family::gf_multilinear:
    case Family::gf_multilinear_hm: {
      const bool hm = c.family == Family::gf_multilinear_hm;
      const IrreduciblePoly poly = default_poly(c.char_bits);
      auto keys = std::make_shared<const KeyBuffer>(generate_keys(
          c.seed, hm ? gf_multilinear_hm_keys_needed(n) : gf_multilinear_keys_needed(n),
          c.char_bits));
      auto k32 = std::make_shared<const std::vector<std::uint32_t>>(
          narrow<std::uint32_t>(keys->words()));
      Workload w;
      w.reference = [=] { return gf_reference(keys->words(), chars->chars(), poly, hm); };
      w.production = [=]() -> std::uint64_t {
        return hm ? gf_multilinear32_hm(*k32, *in32, poly) : gf_multilinear32(*k32, *in32, poly);
      };
      return w;
    }
    case Family::rabin_karp:
    case Family::sax: {
      const bool rk = c.family == Family::rabin_karp;
      Workload w;
      // Plain 64-bit fold reduced to 32 bits at every step.
      w.reference = [=] {
        std::uint64_t h = 0;
        for (std::uint64_t ch : chars->chars()) {
          h = rk ? (kRabinKarpMultiplier * h + ch) & 0xffffffffULL
                 : (h ^ (((h << 5) & 0xffffffffULL) + (h >> 2) + ch)) & 0xffffffffULL;
        }
        return h;
      };
      if (wide) {
        w.production = [=]() -> std::uint64_t {
          return rk ? rabin_karp<std::uint32_t>(*in32) : sax<std::uint32_t>(*in32);
        };
      } else {
        w.production = [=]() -> std::uint64_t {
          return rk ? rabin_karp<std::uint16_t>(*in16) : sax<std::uint16_t>(*in16);
        };
      }
      return w;
    }
    case Family::nh: {
      auto keys = std::make_shared<const KeyBuffer>(
          generate_keys(c.seed, nh_keys_needed(n), c.char_bits));
      const unsigned out = 2 * c.char_bits;
      Workload w;
      w.reference = [=] { return nh(keys->words(), chars->chars(), out); };
      if (wide) {
        auto k32 = std::make_shared<const std::vector<std::uint32_t>>(
            narrow<std::uint32_t>(keys->words()));
        w.production = [=]() -> std::uint64_t { return nh64(*k32, *in32); };
      } else {
        auto k16 = std::make_shared<const std::vector<std::uint16_t>>(
            narrow<std::uint16_t>(keys->words()));
        w.production = [=]() -> std::uint64_t { return nh32(*k16, *in16); };
      }
      return w;
    }
    case Family::folklore: {
      const unsigned K = 2 * c.char_bits;
      auto keys = std::make_shared<const KeyBuffer>(generate_keys(c.seed, n + (n & 1), K));
      Workload w;
      w.reference = [=] { return folklore_xor(keys->words(), chars->chars(), K, K / 2); };
      if (wide) {
        w.production = [=]() -> std::uint64_t { return folklore_xor64x32(keys->words(), *in32); };
      } else {
        auto k32 = std::make_shared<const std::vector<std::uint32_t>>(
            narrow<std::uint32_t>(keys->words()));
        w.production = [=]() -> std::uint64_t { return folklore_xor32x16(*k32, *in16); };
      }
      return w;
    }
  }
  throw std::invalid_argument("unknown family");
}

inline std::uint64_t fold(std::uint64_t checksum, std::uint64_t h) {
  return (checksum ^ h) * 0x100000001b3ULL;
}

std::string fmt6(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, res.ptr);
}

}  // namespace

std::span<const Family> all_families() { return kFamilies; }

std::string_view family_name(Family f) {
  switch (f) {
    case Family::multilinear: return "multilinear";
    case Family::multilinear_2x2: return "multilinear-2x2";
    case Family::multilinear_hm: return "multilinear-hm";
    case Family::gf_multilinear: return "gf-multilinear";
    case Family::gf_multilinear_hm: return "gf-multilinear-hm";
    case Family::rabin_karp: return "rabin-karp";
    case Family::sax: return "sax";
    case Family::nh: return "nh";
    case Family::folklore: return "folklore";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

void BenchConfig::validate() const {
  if (char_bits != 16 && char_bits != 32) throw std::invalid_argument("char_bits must be 16 or 32");
  if (length < 1) throw std::invalid_argument("length must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (repetitions < 1) throw std::invalid_argument("repetitions must be >= 1");
  if (clock_ghz && !(*clock_ghz > 0)) throw std::invalid_argument("clock rate must be positive");
}

CharString generate_input(std::uint64_t seed, std::size_t n, unsigned char_bits) {
  if (char_bits < 1 || char_bits > 64) throw std::invalid_argument("char_bits must be in 1..=64");
  const std::uint64_t mask = low_mask(char_bits);
  std::vector<std::uint64_t> chars(n);
  for (std::size_t i = 0; i < n; ++i) chars[i] = counter_word(seed ^ kInputStream, i) & mask;
  return CharString(std::move(chars));
}

OracleCheck check_against_oracle(const BenchConfig& config, const CharString& input) {
  config.validate();
  const Workload w = make_workload(config, input);
  return {w.production(), w.reference()};
}

BenchReport run_bench(const BenchConfig& config) {
  config.validate();
  BenchReport report;
  const CharString input = generate_input(config.seed, config.length, config.char_bits);
  const Workload w = make_workload(config, input);

  const OracleCheck check{w.production(), w.reference()};
  if (!check.ok()) {
    throw OracleMismatch(std::string(family_name(config.family)) +
                         ": production output disagrees with reference evaluator");
  }

  bool use_tsc = false;
  if (config.timer == TimerMode::cycle_counter) {
#if defined(UNIHASH_HAVE_TSC)
    use_tsc = true;
#else
    report.warnings.push_back("cycle counter unavailable on this platform; using wall-clock");
#endif
  }

  const std::uint64_t bytes_per_hash = config.length * (config.char_bits / 8);
  const std::uint64_t bytes = bytes_per_hash * config.trials;
  for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
    std::uint64_t checksum = 0xcbf29ce484222325ULL;
    const auto t0 = std::chrono::steady_clock::now();
#if defined(UNIHASH_HAVE_TSC)
    const std::uint64_t c0 = use_tsc ? __rdtsc() : 0;
#endif
    for (std::size_t t = 0; t < config.trials; ++t) {
      // Forces the input to be treated as changed, so no trial can be hoisted.
      asm volatile("" ::: "memory");
      checksum = fold(checksum, w.production());
    }
#if defined(UNIHASH_HAVE_TSC)
    const std::uint64_t c1 = use_tsc ? __rdtsc() : 0;
#endif
    const auto t1 = std::chrono::steady_clock::now();

    BenchRow row;
    row.family = std::string(family_name(config.family));
    row.char_bits = config.char_bits;
    row.length = config.length;
    row.repetition = rep;
    row.bytes_hashed = bytes;
    row.ns_per_byte =
        std::chrono::duration<double, std::nano>(t1 - t0).count() / static_cast<double>(bytes);
    if (config.clock_ghz) {
      row.cycles_per_byte = row.ns_per_byte * *config.clock_ghz;
    } else if (use_tsc) {
#if defined(UNIHASH_HAVE_TSC)
      row.cycles_per_byte = static_cast<double>(c1 - c0) / static_cast<double>(bytes);
#endif
    }
    row.checksum = checksum;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_bench_csv_header(std::ostream& out) {
  out << "family,char_bits,length,repetition,ns_per_byte,cycles_per_byte,checksum\n";
}

void write_bench_csv_rows(std::ostream& out, std::span<const BenchRow> rows) {
  for (const auto& r : rows) {
    char hex[17];
    const auto res = std::to_chars(hex, hex + sizeof hex, r.checksum, 16);
    out << r.family << ',' << r.char_bits << ',' << r.length << ',' << r.repetition << ','
        << fmt6(r.ns_per_byte) << ',' << (r.cycles_per_byte ? fmt6(*r.cycles_per_byte) : "")
        << ",0x" << std::string(hex, res.ptr) << '\n';
  }
}

}  // namespace unihash
