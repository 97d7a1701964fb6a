// SPDX-License-Identifier: Apache-2.0
#pragma once

// Prefix-free binary codes: unary, Elias gamma/delta/omega, fixed-length,
// Shannon-Fano, plus colex subset ranking used by the witness codecs.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "encbound/bitstring.hpp"

namespace encbound {

using BigUint = boost::multiprecision::cpp_int;

/// Exact binomial coefficient C(n, k); zero when k > n.
BigUint binomial(std::uint64_t n, std::uint64_t k);
/// Smallest w with 2^w >= value (0 for value <= 1).
unsigned ceil_log2(const BigUint& value);
void append_big(BitString& out, const BigUint& value, unsigned width);
BigUint read_big(BitReader& in, unsigned width);

namespace bitcodes {

/// U(i): i one-bits then a zero. |U(i)| = i + 1.
struct Unary {
  static void encode(std::uint64_t i, BitString& out);
  static std::uint64_t decode(BitReader& in);
  static std::uint64_t length(std::uint64_t i) { return i + 1; }
  static constexpr std::uint64_t min_value = 0;
};

/// U(bitlen(i)) followed by i without its leading one. |E_gamma(i)| = 2 bitlen(i).
struct EliasGamma {
  static void encode(std::uint64_t i, BitString& out);
  static std::uint64_t decode(BitReader& in);
  static std::uint64_t length(std::uint64_t i);
  static constexpr std::uint64_t min_value = 1;
};

/// E_gamma(bitlen(i)) followed by i without its leading one.
struct EliasDelta {
  static void encode(std::uint64_t i, BitString& out);
  static std::uint64_t decode(BitReader& in);
  static std::uint64_t length(std::uint64_t i);
  static constexpr std::uint64_t min_value = 1;
};

/// Recursive length-of-length code. Groups are emitted front to back:
/// binary(i) is prepended first, then binary(bitlen(g) - 1) for the current
/// front group g while g has more than one bit; a single 0 terminates.
/// E_omega(1) = "0", E_omega(2) = "100", E_omega(5) = "10 101 0".
struct EliasOmega {
  static void encode(std::uint64_t i, BitString& out);
  static std::uint64_t decode(BitReader& in);
  static std::uint64_t length(std::uint64_t i);
  static constexpr std::uint64_t min_value = 1;
};

template <typename Codec>
BitString encode(std::uint64_t i) {
  BitString out;
  Codec::encode(i, out);
  return out;
}

/// Decodes a single codeword that must consume the whole string.
template <typename Codec>
std::uint64_t decode_exact(const BitString& bits) {
  BitReader in(bits);
  std::uint64_t v = Codec::decode(in);
  if (!in.at_end()) throw DecodeError("trailing bits after codeword");
  return v;
}

/// ceil(log2 m)-bit big-endian representation of value in [0, m).
void fixed_length_encode(std::uint64_t value, std::uint64_t m, BitString& out);
BitString fixed_length_encode(std::uint64_t value, std::uint64_t m);
std::uint64_t fixed_length_decode(BitReader& in, std::uint64_t m);

/// Colex rank of a strictly increasing k-subset of {0..n-1}:
/// sum over positions j of C(elements[j], j + 1).
BigUint subset_rank(std::uint64_t n, std::span<const std::uint64_t> elements);
std::vector<std::uint64_t> subset_unrank(std::uint64_t n, std::uint64_t k, BigUint rank);

/// Probability mass over outcomes 0..size-1. Masses positive, summing to 1
/// within 1e-9.
class FiniteDensity {
 public:
  explicit FiniteDensity(std::vector<double> masses);
  static FiniteDensity uniform(std::size_t n);

  std::size_t size() const noexcept { return masses_.size(); }
  double operator[](std::size_t x) const { return masses_[x]; }
  std::span<const double> masses() const noexcept { return masses_; }

 private:
  std::vector<double> masses_;
};

/// Partial code: outcome index -> codeword, std::nullopt where not encoded
/// (length infinity by convention).
class CodeTable {
 public:
  CodeTable() = default;
  explicit CodeTable(std::vector<std::optional<BitString>> entries) : entries_(std::move(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  const std::optional<BitString>& operator[](std::size_t x) const { return entries_[x]; }
  std::span<const std::optional<BitString>> entries() const noexcept { return entries_; }

  bool is_injective() const;
  bool is_prefix_free() const;
  /// Codeword lengths; +infinity where the outcome is not encoded.
  std::vector<double> lengths() const;
  /// Exact Kraft sum of the integer lengths as numerator / 2^max_len.
  double kraft_sum() const;
  /// Codewords of length <= k.
  std::size_t count_at_most(std::size_t k) const;

 private:
  std::vector<std::optional<BitString>> entries_;
};

/// Length ceil(log2(1/p_x)) for one mass, robust to round-off at powers of two.
unsigned shannon_fano_length(double mass);

/// Canonical Shannon-Fano construction: outcomes sorted by decreasing mass
/// (stable on support order) receive consecutive codewords at their depths.
CodeTable shannon_fano_build(const FiniteDensity& p);

/// n1(x) log(1/alpha) + n0(x) log(1/(1-alpha)), real-valued.
double bernoulli_codeword_length(const BitString& x, double alpha);

/// Sum of 2^-l; infinite entries contribute 0. Negative lengths throw.
double kraft_sum(std::span<const double> lengths);

enum class CodeFamily { unary, elias_gamma };
/// Closed-form Kraft sum of an infinite code family, summed as a geometric
/// series: unary -> 1, Elias gamma -> 1/2.
double analytic_kraft_sum(CodeFamily family);

}  // namespace bitcodes
}  // namespace encbound
