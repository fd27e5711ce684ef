// SPDX-License-Identifier: Apache-2.0
//
// unihash: benchmark, certify and size the hash families.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numeric>

#include "unihash/bench.hpp"
#include "unihash/gf2.hpp"
#include "unihash/keymaterial.hpp"
#include "unihash/simd.hpp"
#include "unihash/sizing.hpp"
#include "unihash/verifier.hpp"

namespace {

using namespace unihash;

struct Suite {
  FamilyUnderTest family;
  std::size_t length;
};

// Small-word instances that enumerate in seconds.
std::vector<Suite> verifier_suites() {
  std::vector<Suite> out;
  const HashParams k4 = HashParams::theorem(4, 2);
  for (std::size_t n = 1; n <= 3; ++n) {
    out.push_back({multilinear_family(k4), n});
    out.push_back({multilinear_2by2_family(k4), n});
    out.push_back({multilinear_hm_family(k4), n});
  }
  const HashParams k6 = HashParams::theorem(6, 3);
  out.push_back({multilinear_family(k6), 2});
  out.push_back({multilinear_2by2_family(k6), 2});
  out.push_back({multilinear_hm_family(k6), 2});
  out.push_back({multilinear_family(HashParams::truncated(4, 2)), 2});
  out.push_back({gf_multilinear_family(default_poly(2)), 2});
  out.push_back({gf_multilinear_hm_family(default_poly(2)), 2});
  out.push_back({gf_multilinear_family(default_poly(3)), 2});
  out.push_back({folklore_family(4, 2), 2});
  out.push_back({nh_family(6), 2});
  out.push_back({nh_family(6, 2), 2});
  return out;
}

std::ostream& open_or_stdout(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  return file;
}

int run_bench_cmd(const std::string& family, BenchConfig cfg, const std::string& csv,
                  bool cycles) {
  std::vector<Family> families;
  if (family == "all") {
    families.assign(all_families().begin(), all_families().end());
  } else if (auto f = parse_family(family)) {
    families.push_back(*f);
  } else {
    std::cerr << "unknown family: " << family << '\n';
    return 2;
  }
  cfg.timer = cycles ? TimerMode::cycle_counter : TimerMode::wall_clock;

  std::vector<BenchRow> rows;
  for (Family f : families) {
    cfg.family = f;
    BenchReport report = run_bench(cfg);
    for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
    rows.insert(rows.end(), report.rows.begin(), report.rows.end());
  }
  std::cerr << "kernels: arith=" << simd::isa_name(simd::arith_kernels().isa)
            << " clmul=" << simd::isa_name(simd::clmul_kernels().isa) << '\n';
  std::ofstream file;
  std::ostream& out = open_or_stdout(csv, file);
  write_bench_csv_header(out);
  write_bench_csv_rows(out, rows);
  return 0;
}

int run_verify_cmd(const std::string& filter, const std::string& csv) {
  std::ofstream file;
  std::ostream* csv_out = csv.empty() ? nullptr : &open_or_stdout(csv, file);
  if (csv_out) write_report_csv_header(*csv_out);
  for (const auto& suite : verifier_suites()) {
    if (!filter.empty() && suite.family.id != filter) continue;
    const UniversalityReport r = check_strong_universality(suite.family, suite.length);
    if (csv_out) write_report_csv_row(*csv_out, r);
    if (csv_out != &std::cout) std::cout << format_report(r) << '\n';
  }
  return 0;
}

int run_sizing_cmd(const std::string& curve, std::vector<std::uint64_t> ms, std::uint64_t z,
                   const std::vector<std::uint64_t>& words, double alpha,
                   std::vector<std::uint64_t> ls, const std::string& csv) {
  std::ofstream file;
  std::ostream& out = open_or_stdout(csv, file);
  if (curve == "stinson") {
    if (ms.empty()) throw std::invalid_argument("--M needs at least one value");
    std::optional<std::vector<std::uint64_t>> allowed;
    if (!words.empty()) allowed = words;
    const StinsonCurve c = stinson_ratio_curve(ms, z, allowed);
    for (const auto& note : c.notes) std::cerr << "note: " << note << '\n';
    write_stinson_csv(out, c);
  } else {
    if (ls.empty()) {
      ls.resize(128);
      std::iota(ls.begin(), ls.end(), std::uint64_t{1});
    }
    write_cost_csv(out, cost_curve(z, alpha, ls));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Strongly universal string hashing toolkit"};
  app.require_subcommand(1);

  BenchConfig cfg;
  std::string family = "multilinear";
  std::string bench_csv;
  bool cycles = false;
  double ghz = 0;
  auto* bench = app.add_subcommand("bench", "Time hash families on a random string");
  bench->add_option("--family", family, "Family name or 'all'");
  bench->add_option("--char-bits", cfg.char_bits, "Character width")->check(CLI::IsMember({16, 32}));
  bench->add_option("--length", cfg.length, "Characters per string")->check(CLI::PositiveNumber);
  bench->add_option("--trials", cfg.trials, "Hashes per repetition")->check(CLI::PositiveNumber);
  bench->add_option("--repetitions", cfg.repetitions, "Timed repetitions")->check(CLI::PositiveNumber);
  bench->add_option("--seed", cfg.seed, "Seed for keys and input");
  auto* ghz_opt = bench->add_option("--clock-ghz", ghz, "Convert ns to cycles at this clock rate")
                      ->check(CLI::PositiveNumber);
  bench->add_flag("--cycles", cycles, "Read the cycle counter where available");
  bench->add_option("--csv", bench_csv, "Write CSV here instead of stdout");

  std::string verify_family;
  std::string verify_csv;
  auto* verify = app.add_subcommand("verify", "Certify small instances by exhaustive enumeration");
  verify->add_option("--family", verify_family, "Only run suites for this family id");
  verify->add_option("--csv", verify_csv, "Also write a CSV summary ('-' for stdout)");

  std::string curve = "stinson";
  std::vector<std::uint64_t> ms;
  std::uint64_t z = 32;
  std::vector<std::uint64_t> words;
  double alpha = 1.5;
  std::vector<std::uint64_t> ls;
  std::string sizing_csv;
  auto* sizing = app.add_subcommand("sizing", "Random-bit and cost curves");
  sizing->add_option("--curve", curve, "stinson or cost")->check(CLI::IsMember({"stinson", "cost"}));
  sizing->add_option("--M", ms, "Input sizes in bits")->delimiter(',');
  sizing->add_option("--z", z, "Output bits")->check(CLI::PositiveNumber);
  sizing->add_option("--word-sizes", words, "Allowed K values; omit for unconstrained L")
      ->delimiter(',');
  sizing->add_option("--alpha", alpha, "Multiplication cost exponent");
  sizing->add_option("--L", ls, "Character widths for the cost curve (default 1..128)")
      ->delimiter(',');
  sizing->add_option("--csv", sizing_csv, "Write CSV here instead of stdout");

  std::uint64_t key_seed = 1;
  std::uint64_t key_count = 0;
  unsigned key_bits = 64;
  std::string key_path;
  auto* keygen = app.add_subcommand("keygen", "Write a key file");
  keygen->add_option("--seed", key_seed, "Generator seed");
  keygen->add_option("--count", key_count, "Number of key words")->required()
      ->check(CLI::PositiveNumber);
  keygen->add_option("--word-bits", key_bits, "K")->check(CLI::Range(1u, 64u));
  keygen->add_option("--out", key_path, "Output path")->required();

  std::string info_path;
  auto* keyinfo = app.add_subcommand("keyinfo", "Describe a key file");
  keyinfo->add_option("path", info_path, "Key file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bench) {
      if (*ghz_opt) cfg.clock_ghz = ghz;
      return run_bench_cmd(family, cfg, bench_csv, cycles);
    }
    if (*verify) return run_verify_cmd(verify_family, verify_csv);
    if (*sizing) return run_sizing_cmd(curve, ms, z, words, alpha, ls, sizing_csv);
    if (*keygen) {
      std::ofstream f(key_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + key_path);
      save_keys(generate_keys(key_seed, key_count, key_bits), f);
      return 0;
    }
    if (*keyinfo) {
      std::ifstream f(info_path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + info_path);
      const KeyBuffer k = load_keys(f);
      std::cout << "word_bits=" << k.word_bits() << " count=" << k.size()
                << " seed=" << k.spec().seed << '\n';
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
