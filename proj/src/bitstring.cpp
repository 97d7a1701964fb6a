// SPDX-License-Identifier: Apache-2.0
#include "encbound/bitstring.hpp"

#include <algorithm>
#include <bit>

namespace encbound {

namespace {

constexpr std::uint64_t kAllOnes = ~std::uint64_t{0};

// Mask of the `count` most significant bits.
constexpr std::uint64_t high_mask(unsigned count) { return count == 0 ? 0 : kAllOnes << (64 - count); }

}  // namespace

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.words_.reserve((text.size() + 63) / 64);
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may only contain '0' and '1': " + std::string(text));
    }
    out.push_back(c == '1');
  }
  return out;
}

BitString BitString::from_packed(const PackedBits& packed) {
  if (packed.bytes.size() * 8 < packed.bit_length) {
    throw DecodeError("packed bit length exceeds payload");
  }
  BitString out;
  const std::size_t full = packed.bit_length / 8;
  for (std::size_t i = 0; i < full; ++i) out.append_bits(packed.bytes[i], 8);
  const unsigned rest = static_cast<unsigned>(packed.bit_length % 8);
  if (rest != 0) out.append_bits(static_cast<std::uint64_t>(packed.bytes[full]) >> (8 - rest), rest);
  return out;
}

void BitString::set(std::size_t i, bool value) {
  const std::uint64_t bit = std::uint64_t{1} << (63 - i % 64);
  if (value) {
    words_[i / 64] |= bit;
  } else {
    words_[i / 64] &= ~bit;
  }
}

void BitString::append(const BitString& other) {
  const std::size_t full = other.size_ / 64;
  for (std::size_t w = 0; w < full; ++w) append_bits(other.words_[w], 64);
  const unsigned rest = static_cast<unsigned>(other.size_ % 64);
  if (rest != 0) append_bits(other.words_[full] >> (64 - rest), rest);
}

void BitString::append_bits(std::uint64_t value, unsigned width) {
  if (width == 0) return;
  if (width > 64) {
    append_run(width - 64, false);
    width = 64;
  }
  if (width < 64) value &= (std::uint64_t{1} << width) - 1;
  const unsigned used = static_cast<unsigned>(size_ % 64);
  if (used == 0) {
    words_.push_back(value << (64 - width));
  } else {
    const unsigned free = 64 - used;
    if (width <= free) {
      words_.back() |= value << (free - width);
    } else {
      words_.back() |= value >> (width - free);
      words_.push_back(value << (64 - (width - free)));
    }
  }
  size_ += width;
}

void BitString::append_run(std::size_t count, bool value) {
  const unsigned used = static_cast<unsigned>(size_ % 64);
  if (used != 0) {
    const auto head = static_cast<unsigned>(std::min<std::size_t>(count, 64 - used));
    append_bits(value ? kAllOnes : 0, head);
    count -= head;
  }
  words_.insert(words_.end(), count / 64, value ? kAllOnes : 0);
  size_ += count / 64 * 64;
  if (count % 64 != 0) append_bits(value ? kAllOnes : 0, static_cast<unsigned>(count % 64));
}

std::size_t BitString::run_length(std::size_t from, bool value) const noexcept {
  std::size_t pos = from;
  while (pos < size_) {
    const unsigned offset = static_cast<unsigned>(pos % 64);
    std::uint64_t w = words_[pos / 64] << offset;
    if (!value) w = ~w;
    const auto run = static_cast<unsigned>(std::countl_one(w));
    const unsigned avail = 64 - offset;
    if (run < avail) {
      pos += run;
      break;
    }
    pos += avail;
  }
  return std::min(pos, size_) - from;
}

std::size_t BitString::count_ones() const noexcept {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitString::is_prefix_of(const BitString& other) const noexcept {
  if (size_ > other.size_) return false;
  const std::size_t full = size_ / 64;
  if (!std::equal(words_.begin(), words_.begin() + static_cast<std::ptrdiff_t>(full), other.words_.begin())) {
    return false;
  }
  const unsigned rest = static_cast<unsigned>(size_ % 64);
  return rest == 0 || (other.words_[full] & high_mask(rest)) == words_[full];
}

std::strong_ordering BitString::operator<=>(const BitString& other) const noexcept {
  const std::size_t common = std::min(size_, other.size_);
  const std::size_t full = common / 64;
  for (std::size_t w = 0; w < full; ++w) {
    if (words_[w] != other.words_[w]) return words_[w] <=> other.words_[w];
  }
  const unsigned rest = static_cast<unsigned>(common % 64);
  if (rest != 0) {
    const std::uint64_t a = words_[full] & high_mask(rest);
    const std::uint64_t b = other.words_[full] & high_mask(rest);
    if (a != b) return a <=> b;
  }
  return size_ <=> other.size_;
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(size());
  for (std::size_t i = 0; i < size_; ++i) s.push_back((*this)[i] ? '1' : '0');
  return s;
}

PackedBits BitString::to_packed() const {
  PackedBits packed;
  packed.bit_length = size_;
  packed.bytes.resize((size_ + 7) / 8);
  for (std::size_t i = 0; i < packed.bytes.size(); ++i) {
    packed.bytes[i] = static_cast<std::uint8_t>(words_[i / 8] >> (56 - 8 * (i % 8)));
  }
  return packed;
}

bool BitReader::read_bit() {
  if (at_end()) throw DecodeError("truncated input");
  return (*bits_)[pos_++];
}

std::uint64_t BitReader::read_bits(unsigned width) {
  if (width > 64) throw DecodeError("field wider than 64 bits");
  if (remaining() < width) throw DecodeError("truncated input");
  std::uint64_t v = 0;
  for (unsigned k = 0; k < width; ++k) v = (v << 1) | static_cast<std::uint64_t>((*bits_)[pos_++]);
  return v;
}

std::size_t BitReader::read_run(bool value) {
  const std::size_t run = bits_->run_length(pos_, value);
  pos_ += run;
  return run;
}

unsigned ceil_log2(std::uint64_t m) noexcept {
  if (m <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(m - 1));
}

unsigned bit_length(std::uint64_t i) noexcept { return static_cast<unsigned>(std::bit_width(i)); }

}  // namespace encbound
