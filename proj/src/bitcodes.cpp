// SPDX-License-Identifier: Apache-2.0
#include "encbound/bitcodes.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace encbound {

BigUint binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigUint r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

unsigned ceil_log2(const BigUint& value) {
  if (value <= 1) return 0;
  BigUint v = value - 1;
  return static_cast<unsigned>(boost::multiprecision::msb(v)) + 1;
}

void append_big(BitString& out, const BigUint& value, unsigned width) {
  for (unsigned k = width; k-- > 0;) out.push_back(boost::multiprecision::bit_test(value, k));
}

BigUint read_big(BitReader& in, unsigned width) {
  BigUint v = 0;
  for (unsigned k = 0; k < width; ++k) {
    v <<= 1;
    if (in.read_bit()) v |= 1;
  }
  return v;
}

namespace bitcodes {

void Unary::encode(std::uint64_t i, BitString& out) {
  out.append_run(i, true);
  out.push_back(false);
}

std::uint64_t Unary::decode(BitReader& in) {
  const std::uint64_t i = in.read_run(true);
  if (in.read_bit()) throw DecodeError("unreachable: run ended on a one");
  return i;
}

void EliasGamma::encode(std::uint64_t i, BitString& out) {
  if (i == 0) throw std::invalid_argument("Elias gamma is defined for i >= 1");
  unsigned b = bit_length(i);
  Unary::encode(b, out);
  out.append_bits(i, b - 1);
}

std::uint64_t EliasGamma::decode(BitReader& in) {
  std::uint64_t b = Unary::decode(in);
  if (b == 0 || b > 64) throw DecodeError("invalid Elias gamma length prefix");
  return (std::uint64_t{1} << (b - 1)) | in.read_bits(static_cast<unsigned>(b - 1));
}

std::uint64_t EliasGamma::length(std::uint64_t i) { return 2 * std::uint64_t{bit_length(i)}; }

void EliasDelta::encode(std::uint64_t i, BitString& out) {
  if (i == 0) throw std::invalid_argument("Elias delta is defined for i >= 1");
  unsigned b = bit_length(i);
  EliasGamma::encode(b, out);
  out.append_bits(i, b - 1);
}

std::uint64_t EliasDelta::decode(BitReader& in) {
  std::uint64_t b = EliasGamma::decode(in);
  if (b > 64) throw DecodeError("invalid Elias delta length prefix");
  return (std::uint64_t{1} << (b - 1)) | in.read_bits(static_cast<unsigned>(b - 1));
}

std::uint64_t EliasDelta::length(std::uint64_t i) {
  unsigned b = bit_length(i);
  return EliasGamma::length(b) + b - 1;
}

void EliasOmega::encode(std::uint64_t i, BitString& out) {
  if (i == 0) throw std::invalid_argument("Elias omega is defined for i >= 1");
  std::vector<std::uint64_t> groups;
  for (std::uint64_t g = i; g > 1; g = bit_length(g) - 1) groups.push_back(g);
  for (auto it = groups.rbegin(); it != groups.rend(); ++it) out.append_bits(*it, bit_length(*it));
  out.push_back(false);
}

std::uint64_t EliasOmega::decode(BitReader& in) {
  std::uint64_t n = 1;
  while (in.read_bit()) {
    if (n > 63) throw DecodeError("Elias omega group exceeds 64 bits");
    n = (std::uint64_t{1} << n) | in.read_bits(static_cast<unsigned>(n));
  }
  return n;
}

std::uint64_t EliasOmega::length(std::uint64_t i) {
  std::uint64_t len = 1;
  for (std::uint64_t g = i; g > 1; g = bit_length(g) - 1) len += bit_length(g);
  return len;
}

void fixed_length_encode(std::uint64_t value, std::uint64_t m, BitString& out) {
  if (m == 0) throw std::invalid_argument("fixed-length domain must be non-empty");
  if (value >= m) {
    throw std::invalid_argument("fixed-length value " + std::to_string(value) + " outside [0, " +
                                std::to_string(m) + ")");
  }
  out.append_bits(value, ceil_log2(m));
}

BitString fixed_length_encode(std::uint64_t value, std::uint64_t m) {
  BitString out;
  fixed_length_encode(value, m, out);
  return out;
}

std::uint64_t fixed_length_decode(BitReader& in, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("fixed-length domain must be non-empty");
  std::uint64_t v = in.read_bits(ceil_log2(m));
  if (v >= m) throw DecodeError("fixed-length field out of range");
  return v;
}

BigUint subset_rank(std::uint64_t n, std::span<const std::uint64_t> elements) {
  BigUint rank = 0;
  for (std::size_t j = 0; j < elements.size(); ++j) {
    if (elements[j] >= n) throw std::invalid_argument("subset element outside universe");
    if (j > 0 && elements[j] <= elements[j - 1]) {
      throw std::invalid_argument("subset elements must be strictly increasing");
    }
    rank += binomial(elements[j], j + 1);
  }
  return rank;
}

std::vector<std::uint64_t> subset_unrank(std::uint64_t n, std::uint64_t k, BigUint rank) {
  if (k > n || rank >= binomial(n, k)) throw DecodeError("subset rank out of range");
  std::vector<std::uint64_t> elements(k);
  std::uint64_t bound = n;
  for (std::uint64_t j = k; j-- > 0;) {
    // Largest c < bound with C(c, j + 1) <= rank; c >= j always qualifies.
    std::uint64_t c = bound - 1;
    BigUint coeff = binomial(c, j + 1);
    while (coeff > rank) {
      // C(c-1, j+1) = C(c, j+1) * (c - j - 1) / c
      coeff = coeff * (c - j - 1) / c;
      --c;
    }
    elements[j] = c;
    rank -= coeff;
    bound = c;
  }
  return elements;
}

FiniteDensity::FiniteDensity(std::vector<double> masses) : masses_(std::move(masses)) {
  if (masses_.empty()) throw std::invalid_argument("density support must be non-empty");
  double total = 0.0;
  for (double m : masses_) {
    if (!(m > 0.0) || m > 1.0 || !std::isfinite(m)) {
      throw std::invalid_argument("density masses must lie in (0, 1]");
    }
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-9) throw std::invalid_argument("density masses must sum to 1");
}

FiniteDensity FiniteDensity::uniform(std::size_t n) {
  return FiniteDensity(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

bool CodeTable::is_injective() const {
  std::vector<BitString> words;
  for (const auto& e : entries_) {
    if (e) words.push_back(*e);
  }
  std::sort(words.begin(), words.end());
  return std::adjacent_find(words.begin(), words.end()) == words.end();
}

bool CodeTable::is_prefix_free() const {
  std::vector<BitString> words;
  for (const auto& e : entries_) {
    if (e) words.push_back(*e);
  }
  // In lexicographic order a word that prefixes any other prefixes its successor.
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i) {
    if (words[i - 1].is_prefix_of(words[i])) return false;
  }
  return true;
}

std::vector<double> CodeTable::lengths() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) {
    out.push_back(e ? static_cast<double>(e->size()) : std::numeric_limits<double>::infinity());
  }
  return out;
}

double CodeTable::kraft_sum() const {
  std::size_t max_len = 0;
  for (const auto& e : entries_) {
    if (e) max_len = std::max(max_len, e->size());
  }
  BigUint numerator = 0;
  for (const auto& e : entries_) {
    if (e) numerator += BigUint(1) << (max_len - e->size());
  }
  using Float = boost::multiprecision::cpp_bin_float_50;
  Float value = Float(numerator) / boost::multiprecision::pow(Float(2), static_cast<int>(max_len));
  return value.convert_to<double>();
}

std::size_t CodeTable::count_at_most(std::size_t k) const {
  return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(),
                                                [k](const auto& e) { return e && e->size() <= k; }));
}

unsigned shannon_fano_length(double mass) {
  double v = -std::log2(mass);
  double r = std::round(v);
  if (std::abs(v - r) <= 1e-12 * std::max(1.0, v)) return static_cast<unsigned>(r);
  return static_cast<unsigned>(std::ceil(v));
}

CodeTable shannon_fano_build(const FiniteDensity& p) {
  std::vector<std::size_t> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&p](std::size_t a, std::size_t b) { return p[a] > p[b]; });

  std::vector<std::optional<BitString>> entries(p.size());
  BitString code;
  bool first = true;
  for (std::size_t x : order) {
    unsigned len = shannon_fano_length(p[x]);
    if (!first) {
      // Next leaf to the right at the current depth: binary increment.
      std::size_t i = code.size();
      while (i > 0 && code[i - 1]) code.set(--i, false);
      if (i == 0) throw std::logic_error("Shannon-Fano lengths violate Kraft's condition");
      code.set(i - 1, true);
    }
    while (code.size() < len) code.push_back(false);
    entries[x] = code;
    first = false;
  }
  return CodeTable(std::move(entries));
}

double bernoulli_codeword_length(const BitString& x, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  auto ones = static_cast<double>(x.count_ones());
  auto zeros = static_cast<double>(x.count_zeros());
  return ones * std::log2(1.0 / alpha) + zeros * std::log2(1.0 / (1.0 - alpha));
}

double kraft_sum(std::span<const double> lengths) {
  double sum = 0.0;
  for (double l : lengths) {
    if (std::isnan(l) || l < 0.0) throw std::invalid_argument("code lengths must be non-negative");
    if (std::isinf(l)) continue;
    sum += std::exp2(-l);
  }
  return sum;
}

double analytic_kraft_sum(CodeFamily family) {
  // first / (1 - ratio) for a geometric series of per-length contributions.
  switch (family) {
    case CodeFamily::unary:
      // one codeword of each length i + 1: 2^-1 + 2^-2 + ...
      return 0.5 / (1.0 - 0.5);
    case CodeFamily::elias_gamma:
      // 2^(b-1) codewords of length 2b: sum_b 2^(-b-1)
      return 0.25 / (1.0 - 0.5);
  }
  throw std::invalid_argument("unknown code family");
}

}  // namespace bitcodes
}  // namespace encbound
