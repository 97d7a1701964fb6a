// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace encbound {

/// Raised when a decoder runs out of input or meets a field it cannot accept.
class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Packed form of a BitString: most-significant bit first inside each byte,
/// final partial byte zero-padded. The true length travels alongside.
struct PackedBits {
  std::vector<std::uint8_t> bytes;
  std::size_t bit_length = 0;

  bool operator==(const PackedBits&) const = default;
};

/// Finite sequence of bits. Codewords, witnesses and raw outcomes all use it.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::size_t length, bool value = false) { append_run(length, value); }

  /// Parses a string over {'0','1'}; anything else throws std::invalid_argument.
  static BitString from_string(std::string_view text);
  static BitString from_packed(const PackedBits& packed);

  std::size_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  bool operator[](std::size_t i) const { return (words_[i / 64] >> (63 - i % 64)) & 1U; }
  void set(std::size_t i, bool value);

  void push_back(bool bit) { append_bits(bit ? 1 : 0, 1); }
  void append(const BitString& other);
  /// Appends the low `width` bits of value, most significant first.
  void append_bits(std::uint64_t value, unsigned width);
  /// Appends `count` copies of `value`.
  void append_run(std::size_t count, bool value);
  /// Length of the run of `value` starting at bit `from`.
  std::size_t run_length(std::size_t from, bool value) const noexcept;

  std::size_t count_ones() const noexcept;
  std::size_t count_zeros() const noexcept { return size() - count_ones(); }

  /// True when *this is a (not necessarily proper) prefix of other.
  bool is_prefix_of(const BitString& other) const noexcept;

  std::string to_string() const;
  PackedBits to_packed() const;

  bool operator==(const BitString&) const = default;
  /// Lexicographic order; a proper prefix sorts first.
  std::strong_ordering operator<=>(const BitString& other) const noexcept;

 private:
  // Bit i lives in words_[i / 64] at position 63 - i % 64; bits past
  // size_ are kept zero so equality can compare words.
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

/// Sequential cursor over a BitString used by all streaming decoders.
class BitReader {
 public:
  explicit BitReader(const BitString& bits) : bits_(&bits) {}

  bool read_bit();
  /// Reads `width` bits as an unsigned integer, most significant first.
  std::uint64_t read_bits(unsigned width);
  /// Consumes and counts the run of `value` at the cursor (possibly empty).
  std::size_t read_run(bool value);

  std::size_t position() const noexcept { return pos_; }
  std::size_t remaining() const noexcept { return bits_->size() - pos_; }
  bool at_end() const noexcept { return pos_ == bits_->size(); }

 private:
  const BitString* bits_;
  std::size_t pos_ = 0;
};

/// Smallest w with 2^w >= m (0 for m <= 1).
unsigned ceil_log2(std::uint64_t m) noexcept;
/// Number of binary digits of i (i >= 1).
unsigned bit_length(std::uint64_t i) noexcept;

}  // namespace encbound
