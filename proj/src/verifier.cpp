// SPDX-License-Identifier: Apache-2.0
#include "unihash/verifier.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "unihash/baselines.hpp"

namespace unihash {

namespace {

// Upper bound on joint-table cells held in memory per worker.
constexpr std::uint64_t kMaxTableCells = std::uint64_t{1} << 26;

std::string multilinear_label(const HashParams& p) {
  return "K=" + std::to_string(p.word_bits) + " L=" + std::to_string(p.char_bits) +
         " shift=" + std::to_string(p.shift);
}

std::string poly_label(const IrreduciblePoly& p) {
  std::ostringstream os;
  os << "L=" << p.degree() << " p=0x" << std::hex << p.bits();
  return os.str();
}

// Fills `words` with key number `index` of the enumeration.
inline void decode_key(std::uint64_t index, unsigned bits, std::vector<std::uint64_t>& words) {
  const std::uint64_t mask = low_mask(bits);
  for (std::size_t w = 0; w < words.size(); ++w) {
    words[w] = (index >> (w * bits)) & mask;
  }
}

std::size_t words_for(const FamilyUnderTest& f, std::span<const CharString> strings) {
  std::size_t words = 0;
  for (const auto& s : strings) words = std::max(words, f.key_words_needed(s.size()));
  return words;
}

std::uint64_t keyspace_for_words(const FamilyUnderTest& f, std::size_t words) {
  const std::uint64_t bits = static_cast<std::uint64_t>(words) * f.key_word_bits;
  if (bits > kMaxKeySpaceBits) {
    throw std::length_error("key space of 2^" + std::to_string(bits) +
                            " exceeds the enumeration limit of 2^" +
                            std::to_string(kMaxKeySpaceBits));
  }
  return std::uint64_t{1} << bits;
}

std::vector<CharString> all_strings(unsigned char_bits, std::size_t n) {
  const std::uint64_t bits = static_cast<std::uint64_t>(char_bits) * n;
  if (bits > 16) throw std::length_error("string space too large; pass an explicit subset");
  const std::uint64_t count = std::uint64_t{1} << bits;
  const std::uint64_t mask = low_mask(char_bits);
  std::vector<CharString> out;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    std::vector<std::uint64_t> chars(n);
    for (std::size_t j = 0; j < n; ++j) chars[j] = (i >> (j * char_bits)) & mask;
    out.emplace_back(std::move(chars));
  }
  return out;
}

struct Tally {
  std::vector<std::uint32_t> joint;  // pairs x Y x Y
  std::vector<std::uint32_t> single; // strings x Y
};

void tally_range(const FamilyUnderTest& f, std::span<const CharString> strings,
                 std::size_t words, std::uint64_t first, std::uint64_t last, Tally& t) {
  // Outputs for a block of keys are stored string-major, then each pair's
  // table is filled from one block at a time so it stays in cache.
  constexpr std::uint64_t kBlock = 4096;
  const std::size_t count = strings.size();
  const unsigned out = f.output_bits;
  const std::size_t cells = std::size_t{1} << (2 * out);
  std::vector<std::uint64_t> key(words);
  std::vector<std::uint32_t> y(count * kBlock);
  for (std::uint64_t base = first; base < last; base += kBlock) {
    const std::size_t len = static_cast<std::size_t>(std::min(kBlock, last - base));
    for (std::size_t b = 0; b < len; ++b) {
      decode_key(base + b, f.key_word_bits, key);
      for (std::size_t i = 0; i < count; ++i) {
        const auto v = static_cast<std::uint32_t>(f.evaluate(key, strings[i].chars()));
        y[i * kBlock + b] = v;
        ++t.single[(i << out) | v];
      }
    }
    std::uint32_t* cell = t.joint.data();
    for (std::size_t i = 0; i + 1 < count; ++i) {
      const std::uint32_t* yi = y.data() + i * kBlock;
      for (std::size_t j = i + 1; j < count; ++j, cell += cells) {
        const std::uint32_t* yj = y.data() + j * kBlock;
        for (std::size_t b = 0; b < len; ++b) ++cell[(yi[b] << out) | yj[b]];
      }
    }
  }
}

}  // namespace

FamilyUnderTest multilinear_family(const HashParams& p) {
  p.validate();
  return {"multilinear", multilinear_label(p), p.word_bits, p.char_bits, p.output_bits(),
          multilinear_keys_needed,
          [p](std::span<const std::uint64_t> k, std::span<const std::uint64_t> s) {
            return multilinear(k, s, p);
          }};
}

FamilyUnderTest multilinear_2by2_family(const HashParams& p) {
  p.validate();
  return {"multilinear-2x2", multilinear_label(p), p.word_bits, p.char_bits, p.output_bits(),
          multilinear_keys_needed,
          [p](std::span<const std::uint64_t> k, std::span<const std::uint64_t> s) {
            return multilinear_2by2(k, s, p);
          }};
}

FamilyUnderTest multilinear_hm_family(const HashParams& p) {
  p.validate();
  return {"multilinear-hm", multilinear_label(p), p.word_bits, p.char_bits, p.output_bits(),
          multilinear_hm_keys_needed,
          [p](std::span<const std::uint64_t> k, std::span<const std::uint64_t> s) {
            return multilinear_hm(k, s, p);
          }};
}

FamilyUnderTest gf_multilinear_family(const IrreduciblePoly& p) {
  return {"gf-multilinear", poly_label(p), p.degree(), p.degree(), p.degree(),
          gf_multilinear_keys_needed,
          [p](std::span<const std::uint64_t> k, std::span<const std::uint64_t> s) {
            return gf_multilinear(k, s, p);
          }};
}

FamilyUnderTest gf_multilinear_hm_family(const IrreduciblePoly& p) {
  return {"gf-multilinear-hm", poly_label(p), p.degree(), p.degree(), p.degree(),
          gf_multilinear_hm_keys_needed,
          [p](std::span<const std::uint64_t> k, std::span<const std::uint64_t> s) {
            return gf_multilinear_hm(k, s, p);
          }};
}

FamilyUnderTest nh_family(unsigned out_bits, std::optional<unsigned> low_bits) {
  if (out_bits < 2 || out_bits > 64 || out_bits % 2 != 0) {
    throw std::invalid_argument("NH output width must be even, 2..=64");
  }
  const unsigned kept = low_bits.value_or(out_bits);
  if (kept < 1 || kept > out_bits) throw std::invalid_argument("bad NH low-bit count");
  std::string label = "L=" + std::to_string(out_bits);
  if (low_bits) label += " low_bits=" + std::to_string(kept);
  const std::uint64_t mask = low_mask(kept);
  return {"nh", label, out_bits / 2, out_bits / 2, kept, nh_keys_needed,
          [out_bits, mask](std::span<const std::uint64_t> k, std::span<const std::uint64_t> s) {
            return nh(k, s, out_bits) & mask;
          }};
}

FamilyUnderTest folklore_family(unsigned word_bits, unsigned char_bits) {
  if (char_bits >= word_bits) throw std::invalid_argument("folklore family needs L < K");
  return {"folklore",
          "K=" + std::to_string(word_bits) + " L=" + std::to_string(char_bits),
          word_bits,
          char_bits,
          word_bits - char_bits,
          [](std::size_t n) { return n + (n & 1); },
          [word_bits, char_bits](std::span<const std::uint64_t> k,
                                 std::span<const std::uint64_t> s) {
            return folklore_xor(k, s, word_bits, char_bits);
          }};
}

unsigned trailing_zeros(std::uint64_t a) {
  if (a == 0) throw std::invalid_argument("trailing_zeros is undefined for 0");
  return static_cast<unsigned>(std::countr_zero(a));
}

Prop1Result count_prop1_solutions(std::uint64_t a, std::uint64_t b, std::uint64_t c,
                                  unsigned word_bits, unsigned char_bits) {
  if (char_bits < 1 || char_bits - 1 > word_bits) throw std::invalid_argument("need K >= L-1 >= 0");
  if (word_bits > 24) throw std::invalid_argument("K too large to enumerate (max 24)");
  if (char_bits > 63) throw std::invalid_argument("L too large");
  const std::uint64_t modulus = std::uint64_t{1} << word_bits;
  if (a < 1 || a >= (std::uint64_t{1} << char_bits)) throw std::invalid_argument("a outside [1, 2^L)");
  if (b >= (std::uint64_t{1} << (word_bits - char_bits + 1))) {
    throw std::invalid_argument("b outside [0, 2^(K-L+1))");
  }
  if (c >= modulus) throw std::invalid_argument("c outside [0, 2^K)");
  Prop1Result r;
  for (std::uint64_t x = 0; x < modulus; ++x) {
    if (((a * x + c) & (modulus - 1)) >> (char_bits - 1) == b) r.solutions.push_back(x);
  }
  r.count = r.solutions.size();
  return r;
}

std::uint64_t JointTable::diagonal() const {
  std::uint64_t sum = 0;
  for (std::uint64_t y = 0; y < (std::uint64_t{1} << output_bits); ++y) sum += at(y, y);
  return sum;
}

std::uint64_t keyspace_size(const FamilyUnderTest& f, std::size_t n) {
  return keyspace_for_words(f, f.key_words_needed(n));
}

JointTable joint_distribution(const FamilyUnderTest& f, const CharString& s,
                              const CharString& s2) {
  if (s == s2) throw std::invalid_argument("joint_distribution needs distinct strings");
  const CharString both[] = {s, s2};
  const std::size_t words = words_for(f, both);
  JointTable t;
  t.output_bits = f.output_bits;
  t.keyspace = keyspace_for_words(f, words);
  t.counts.assign(std::size_t{1} << (2 * f.output_bits), 0);
  std::vector<std::uint64_t> key(words);
  for (std::uint64_t k = 0; k < t.keyspace; ++k) {
    decode_key(k, f.key_word_bits, key);
    const std::uint64_t y = f.evaluate(key, s.chars());
    const std::uint64_t y2 = f.evaluate(key, s2.chars());
    ++t.counts[(y << f.output_bits) | y2];
  }
  return t;
}

std::vector<std::uint64_t> output_distribution(const FamilyUnderTest& f, const CharString& s) {
  const std::size_t words = f.key_words_needed(s.size());
  const std::uint64_t keyspace = keyspace_for_words(f, words);
  std::vector<std::uint64_t> counts(std::size_t{1} << f.output_bits, 0);
  std::vector<std::uint64_t> key(words);
  for (std::uint64_t k = 0; k < keyspace; ++k) {
    decode_key(k, f.key_word_bits, key);
    ++counts[f.evaluate(key, s.chars())];
  }
  return counts;
}

Fraction collision_probability(const FamilyUnderTest& f, const CharString& s,
                               const CharString& s2) {
  if (s == s2) {
    const CharString one[] = {s};
    const std::uint64_t keyspace = keyspace_for_words(f, words_for(f, one));
    return {keyspace, keyspace};
  }
  const JointTable t = joint_distribution(f, s, s2);
  return {t.diagonal(), t.keyspace};
}

UniversalityReport check_strong_universality(const FamilyUnderTest& f, std::size_t n,
                                             const std::optional<std::vector<CharString>>& subset) {
  const std::vector<CharString> strings = subset ? *subset : all_strings(f.char_bits, n);
  if (strings.size() < 2) throw std::invalid_argument("need at least two strings");
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (strings[i] == strings[j]) throw std::invalid_argument("string subset has duplicates");
    }
  }
  const std::size_t words = words_for(f, strings);
  const std::uint64_t keyspace = keyspace_for_words(f, words);
  const std::uint64_t count = strings.size();
  const std::uint64_t pairs = count * (count - 1) / 2;
  const unsigned out = f.output_bits;
  const std::uint64_t cells = std::uint64_t{1} << (2 * out);
  if (keyspace * pairs > kMaxKeyPairEvaluations) {
    throw std::length_error("enumeration of " + std::to_string(keyspace) + " keys x " +
                            std::to_string(pairs) + " pairs exceeds the limit");
  }
  if (pairs * cells > kMaxTableCells) throw std::length_error("joint tables too large");

  // Split the key space across workers; counts are summed, so the result does
  // not depend on the split.
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(
      {hw, 8, keyspace, std::max<std::uint64_t>(1, kMaxTableCells / (pairs * cells))}));
  std::vector<Tally> tallies(workers);
  for (auto& t : tallies) {
    t.joint.assign(pairs * cells, 0);
    t.single.assign(count << out, 0);
  }
  {
    std::vector<std::thread> threads;
    for (unsigned w = 1; w < workers; ++w) {
      threads.emplace_back([&, w] {
        tally_range(f, strings, words, keyspace * w / workers, keyspace * (w + 1) / workers,
                    tallies[w]);
      });
    }
    tally_range(f, strings, words, 0, keyspace / workers, tallies[0]);
    for (auto& th : threads) th.join();
  }
  Tally& total = tallies[0];
  for (unsigned w = 1; w < workers; ++w) {
    for (std::size_t i = 0; i < total.joint.size(); ++i) total.joint[i] += tallies[w].joint[i];
    for (std::size_t i = 0; i < total.single.size(); ++i) total.single[i] += tallies[w].single[i];
  }

  UniversalityReport r;
  r.family = f.id;
  r.params = f.params;
  r.length = n;
  r.output_bits = out;
  r.keyspace = keyspace;
  r.strings = count;
  r.pairs = pairs;
  r.expected_cell = keyspace % cells == 0 ? keyspace / cells : 0;
  r.max_joint_deviation = {0, keyspace * cells};
  r.max_collision_probability = {0, keyspace};

  const std::uint64_t outputs = std::uint64_t{1} << out;
  r.uniform = true;
  for (std::uint32_t c : total.single) {
    if (std::uint64_t{c} * outputs != keyspace) r.uniform = false;
  }

  std::size_t p = 0;
  for (std::size_t i = 0; i + 1 < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j, ++p) {
      const std::uint32_t* table = total.joint.data() + p * cells;
      std::uint64_t diag = 0;
      for (std::uint64_t y = 0; y < outputs; ++y) diag += table[(y << out) | y];
      for (std::uint64_t c = 0; c < cells; ++c) {
        const std::uint64_t scaled = std::uint64_t{table[c]} * cells;
        const std::uint64_t dev = scaled > keyspace ? scaled - keyspace : keyspace - scaled;
        if (dev > r.max_joint_deviation.num) r.max_joint_deviation.num = dev;
      }
      if (diag == keyspace) ++r.certain_collision_pairs;
      if (p == 0 || diag > r.max_collision_probability.num) {
        r.max_collision_probability.num = diag;
        r.worst_pair = {strings[i], strings[j]};
      }
    }
  }
  r.universal = r.max_collision_probability <= Fraction{1, outputs};
  r.strongly_universal = r.max_joint_deviation.num == 0;
  return r;
}

namespace {

std::string join_chars(const CharString& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + ")";
}

}  // namespace

std::string format_report(const UniversalityReport& r) {
  std::ostringstream os;
  os << r.family << " [" << r.params << "] n=" << r.length << " out=" << r.output_bits
     << " bits\n"
     << "  keys=" << r.keyspace << " strings=" << r.strings << " pairs=" << r.pairs << '\n'
     << "  uniform=" << (r.uniform ? "yes" : "no")
     << " universal=" << (r.universal ? "yes" : "no")
     << " strongly_universal=" << (r.strongly_universal ? "yes" : "no") << '\n'
     << "  max collision probability " << r.max_collision_probability.str() << " at "
     << join_chars(r.worst_pair.first) << " vs " << join_chars(r.worst_pair.second) << '\n'
     << "  max joint deviation " << r.max_joint_deviation.str()
     << ", pairs colliding under every key: " << r.certain_collision_pairs << '\n';
  return os.str();
}

void write_report_csv_header(std::ostream& out) {
  out << "family,params,n,output_bits,keyspace,strings,pairs,uniform,universal,"
         "strongly_universal,max_collision_probability,max_joint_deviation,"
         "certain_collision_pairs\n";
}

void write_report_csv_row(std::ostream& out, const UniversalityReport& r) {
  out << r.family << ',' << r.params << ',' << r.length << ',' << r.output_bits << ','
      << r.keyspace << ',' << r.strings << ',' << r.pairs << ',' << (r.uniform ? 1 : 0) << ','
      << (r.universal ? 1 : 0) << ',' << (r.strongly_universal ? 1 : 0) << ','
      << r.max_collision_probability.str() << ',' << r.max_joint_deviation.str() << ','
      << r.certain_collision_pairs << '\n';
}

}  // namespace unihash
