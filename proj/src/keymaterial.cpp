// SPDX-License-Identifier: Apache-2.0
#include "unihash/keymaterial.hpp"

#include <algorithm>
#include <array>
#include <istream>
#include <ostream>
#include <string>

namespace unihash {

namespace {

constexpr std::array<char, 4> kMagic = {'M', 'L', 'H', 'K'};

void check_word_bits(unsigned word_bits) {
  if (word_bits < 1 || word_bits > 64) {
    throw std::invalid_argument("key word_bits must be in 1..=64, got " +
                                std::to_string(word_bits));
  }
}

void put_u64(std::ostream& out, std::uint64_t v) {
  std::array<char, 8> b{};
  for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  out.write(b.data(), b.size());
}

std::uint64_t get_u64(std::istream& in, const char* what) {
  std::array<unsigned char, 8> b{};
  if (!in.read(reinterpret_cast<char*>(b.data()), b.size())) {
    throw FormatError(std::string("key file truncated while reading ") + what);
  }
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[i];
  return v;
}

}  // namespace

std::uint64_t counter_word(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

KeyBuffer::KeyBuffer(KeySpec spec, std::vector<std::uint64_t> words)
    : spec_(spec), words_(std::move(words)) {
  check_word_bits(spec_.word_bits);
  if (spec_.word_count == 0) throw std::invalid_argument("key word_count must be >= 1");
  if (words_.size() != spec_.word_count) {
    throw std::invalid_argument("key buffer length does not match word_count");
  }
  const std::uint64_t mask = low_mask(spec_.word_bits);
  for (std::uint64_t w : words_) {
    if ((w & ~mask) != 0) throw std::invalid_argument("key word exceeds word_bits");
  }
}

KeyBuffer generate_keys(std::uint64_t seed, std::uint64_t count, unsigned word_bits) {
  check_word_bits(word_bits);
  if (count == 0) throw std::invalid_argument("key count must be >= 1");
  const std::uint64_t mask = low_mask(word_bits);
  std::vector<std::uint64_t> words(count);
  for (std::uint64_t i = 0; i < count; ++i) words[i] = counter_word(seed, i) & mask;
  return KeyBuffer({word_bits, count, seed}, std::move(words));
}

KeyBuffer extend_keys(const KeyBuffer& buffer, std::uint64_t new_count) {
  const KeySpec& spec = buffer.spec();
  if (new_count < spec.word_count) {
    throw std::invalid_argument("extend_keys cannot shrink a key buffer");
  }
  std::vector<std::uint64_t> words(buffer.words().begin(), buffer.words().end());
  words.reserve(new_count);
  const std::uint64_t mask = low_mask(spec.word_bits);
  for (std::uint64_t i = spec.word_count; i < new_count; ++i) {
    words.push_back(counter_word(spec.seed, i) & mask);
  }
  return KeyBuffer({spec.word_bits, new_count, spec.seed}, std::move(words));
}

void save_keys(const KeyBuffer& buffer, std::ostream& sink) {
  const KeySpec& spec = buffer.spec();
  sink.write(kMagic.data(), kMagic.size());
  const char fixed[4] = {static_cast<char>(kKeyFileVersion),
                         static_cast<char>(spec.word_bits), 0, 0};
  sink.write(fixed, sizeof fixed);
  put_u64(sink, spec.seed);
  put_u64(sink, spec.word_count);
  for (std::uint64_t w : buffer.words()) put_u64(sink, w);
  if (!sink) throw std::runtime_error("failed to write key file");
}

KeyBuffer load_keys(std::istream& source) {
  std::array<char, 8> head{};
  if (!source.read(head.data(), head.size())) throw FormatError("key file truncated in header");
  if (!std::equal(kMagic.begin(), kMagic.end(), head.begin())) {
    throw FormatError("bad key file magic");
  }
  const auto version = static_cast<std::uint8_t>(head[4]);
  if (version != kKeyFileVersion) {
    throw FormatError("unsupported key file version " + std::to_string(version));
  }
  const auto word_bits = static_cast<std::uint8_t>(head[5]);
  if (word_bits < 1 || word_bits > 64) {
    throw FormatError("key file word_bits out of range: " + std::to_string(word_bits));
  }
  if (head[6] != 0 || head[7] != 0) throw FormatError("key file reserved bytes are non-zero");

  KeySpec spec;
  spec.word_bits = word_bits;
  spec.seed = get_u64(source, "seed");
  spec.word_count = get_u64(source, "word_count");
  if (spec.word_count == 0) throw FormatError("key file has zero words");

  // Grow as we read so a corrupt count cannot trigger a huge allocation.
  std::vector<std::uint64_t> words;
  const std::uint64_t mask = low_mask(word_bits);
  for (std::uint64_t i = 0; i < spec.word_count; ++i) {
    const std::uint64_t w = get_u64(source, "payload");
    if ((w & ~mask) != 0) throw FormatError("key word exceeds declared word_bits");
    words.push_back(w);
  }
  return KeyBuffer(spec, std::move(words));
}

}  // namespace unihash
