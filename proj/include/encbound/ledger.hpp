// SPDX-License-Identifier: Apache-2.0
#pragma once

// Encoding lemmas as bound evaluators, and real-valued length functions that
// satisfy Kraft's condition by construction.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "encbound/bitcodes.hpp"

namespace encbound {

using NamedValues = std::vector<std::pair<std::string, double>>;

/// A probability bound of the form Pr{bad} <= min(1, 2^-savings).
struct TailBound {
  std::string theorem;
  NamedValues params;
  std::optional<double> threshold;
  double savings = 0.0;
  double probability = 1.0;
  /// Depends on a constant hidden in O(.) and is informational only.
  bool asymptotic = false;
  /// probability was capped at 1 because savings < 0.
  bool clamped = false;
  NamedValues extras;

  static TailBound from_savings(std::string theorem, double savings);
  /// Bound from an explicit log2 probability (<= 0 unless clamped).
  static TailBound from_log2_probability(std::string theorem, double log2_probability);

  double extra(std::string_view name) const;
};

namespace ledger {

using Rational = boost::multiprecision::cpp_rational;

/// Choice among `options` values costing log2(options) bits
/// (ceil(log2(options)) when ceiled).
struct UniformChoice {
  std::uint64_t options = 1;
  bool ceiled = false;
};
/// A verbatim run of `count` bits.
struct RawBits {
  std::uint64_t count = 0;
};
/// log2(1/p_x) for outcome x.
struct DensityCost {
  bitcodes::FiniteDensity density;
};
/// Arbitrary table; +infinity marks outcomes that are not encoded.
struct ExplicitLengths {
  std::vector<double> lengths;
};
/// Codeword lengths of an infinite integer code (outcome = the integer).
struct FamilyCost {
  bitcodes::CodeFamily family;
};

using ComponentKind = std::variant<UniformChoice, RawBits, DensityCost, ExplicitLengths, FamilyCost>;

struct Component {
  std::string label;
  ComponentKind kind;
};

struct KraftSum {
  double value = 0.0;
  /// Present when every factor is an exact rational (dyadic lengths or closed forms).
  std::optional<Rational> exact;
};

/// Symbolic length function over a product domain. Each component owns one
/// coordinate of the outcome; the total length is the sum of component costs.
class LengthFunction {
 public:
  /// Zero-length function on a single outcome; identity for compose.
  static LengthFunction empty();
  static LengthFunction uniform_choice(std::string label, std::uint64_t options, bool ceiled = false);
  static LengthFunction raw_bits(std::string label, std::uint64_t count);
  static LengthFunction explicit_lengths(std::string label, std::vector<double> lengths);
  static LengthFunction family(std::string label, bitcodes::CodeFamily family);
  static LengthFunction density(std::string label, bitcodes::FiniteDensity density);

  std::span<const Component> components() const noexcept { return components_; }
  std::size_t arity() const noexcept { return components_.size(); }

  /// Total length of an outcome given one coordinate per component.
  /// Returns +infinity if any coordinate is not encoded.
  double length(std::span<const std::uint64_t> outcome) const;

  /// Product of per-component closed-form Kraft sums.
  KraftSum kraft_sum() const;
  bool satisfies_kraft() const;

  friend LengthFunction compose(const LengthFunction& a, const LengthFunction& b);

 private:
  std::vector<Component> components_;
};

/// (l1 + l2)(x, x') = l1(x) + l2(x'); Kraft sums multiply.
LengthFunction compose(const LengthFunction& a, const LengthFunction& b);

/// l(x) = log2(1/p_x) with no ceiling; Kraft sum exactly 1.
LengthFunction density_lengths(const bitcodes::FiniteDensity& p);

/// Closed-form Kraft sum of a single component.
KraftSum component_kraft_sum(const Component& c);
/// Cost of coordinate `x` under one component.
double component_length(const Component& c, std::uint64_t x);

/// Uniform encoding lemma: Pr{|C(x)| <= log|X| - s} <= 2^-s with
/// s = universe_log2 - code_length. Vacuous inputs clamp to 1.
TailBound uniform_tail(double universe_log2, double code_length);

/// Non-uniform encoding lemma: Pr{|C(x)| <= log(1/p_x) - s} <= 2^-s.
TailBound nonuniform_tail(double log_inv_px, double code_length);

/// Exact check of the uniform lemma's counting step for a partial prefix-free
/// code over a universe of `universe` outcomes: codewords of length at most
/// floor(log2 universe - s) number at most universe * 2^-s.
struct UniformLemmaCount {
  std::size_t short_codewords = 0;
  double fraction = 0.0;
  double bound = 1.0;
  bool holds = true;
};
UniformLemmaCount check_uniform_lemma(const bitcodes::CodeTable& code, std::uint64_t universe, unsigned s);

}  // namespace ledger
}  // namespace encbound
