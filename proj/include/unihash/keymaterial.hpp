// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace unihash {

/// Raised by load_keys() on a malformed key file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct KeySpec {
  unsigned word_bits = 64;      // K, 1..=64
  std::uint64_t word_count = 0; // >= 1
  std::uint64_t seed = 0;

  friend bool operator==(const KeySpec&, const KeySpec&) = default;
};

/// Mask selecting the low `bits` bits (bits in 0..=64).
constexpr std::uint64_t low_mask(unsigned bits) {
  return bits >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
}

/// Word `index` of the counter-based stream identified by `seed`.
///
/// This is the SplitMix64 output sequence evaluated directly at a position,
/// so any prefix of the stream can be regenerated without replaying it.
std::uint64_t counter_word(std::uint64_t seed, std::uint64_t index);

/// Immutable buffer of K-bit random key words m_1, m_2, ...
class KeyBuffer {
 public:
  /// Throws std::invalid_argument if the words do not match `spec`.
  KeyBuffer(KeySpec spec, std::vector<std::uint64_t> words);

  const KeySpec& spec() const { return spec_; }
  unsigned word_bits() const { return spec_.word_bits; }
  std::size_t size() const { return words_.size(); }
  std::span<const std::uint64_t> words() const { return words_; }
  std::uint64_t operator[](std::size_t i) const { return words_[i]; }

  friend bool operator==(const KeyBuffer&, const KeyBuffer&) = default;

 private:
  KeySpec spec_;
  std::vector<std::uint64_t> words_;
};

KeyBuffer generate_keys(std::uint64_t seed, std::uint64_t count, unsigned word_bits);

/// Grows `buffer` to `new_count` words; the existing words are kept as a prefix.
KeyBuffer extend_keys(const KeyBuffer& buffer, std::uint64_t new_count);

// Key file layout (little-endian):
//   "MLHK" | version u8 = 1 | word_bits u8 | reserved u16 = 0 | seed u64 |
//   word_count u64 | word_count x u64
inline constexpr std::size_t kKeyFileHeaderBytes = 24;
inline constexpr std::uint8_t kKeyFileVersion = 1;

void save_keys(const KeyBuffer& buffer, std::ostream& sink);
KeyBuffer load_keys(std::istream& source);

}  // namespace unihash
