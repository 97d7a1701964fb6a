// SPDX-License-Identifier: Apache-2.0
#include "encbound/ledger.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace encbound {

TailBound TailBound::from_savings(std::string theorem, double savings) {
  TailBound b;
  b.theorem = std::move(theorem);
  b.savings = savings;
  b.clamped = savings < 0.0;
  b.probability = b.clamped ? 1.0 : std::exp2(-savings);
  return b;
}

TailBound TailBound::from_log2_probability(std::string theorem, double log2_probability) {
  return from_savings(std::move(theorem), -log2_probability);
}

double TailBound::extra(std::string_view name) const {
  for (const auto& [k, v] : extras) {
    if (k == name) return v;
  }
  throw std::out_of_range("no extra named " + std::string(name));
}

namespace ledger {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Rational dyadic(std::uint64_t numerator, unsigned exponent) {
  return Rational(numerator) / Rational(BigUint(1) << exponent);
}

}  // namespace

LengthFunction LengthFunction::empty() {
  LengthFunction f;
  f.components_.push_back({"empty", RawBits{0}});
  return f;
}

LengthFunction LengthFunction::uniform_choice(std::string label, std::uint64_t options, bool ceiled) {
  if (options == 0) throw std::invalid_argument("uniform choice needs at least one option");
  LengthFunction f;
  f.components_.push_back({std::move(label), UniformChoice{options, ceiled}});
  return f;
}

LengthFunction LengthFunction::raw_bits(std::string label, std::uint64_t count) {
  LengthFunction f;
  f.components_.push_back({std::move(label), RawBits{count}});
  return f;
}

LengthFunction LengthFunction::explicit_lengths(std::string label, std::vector<double> lengths) {
  for (double l : lengths) {
    if (std::isnan(l) || l < 0.0) throw std::invalid_argument("lengths must be non-negative");
  }
  LengthFunction f;
  f.components_.push_back({std::move(label), ExplicitLengths{std::move(lengths)}});
  return f;
}

LengthFunction LengthFunction::family(std::string label, bitcodes::CodeFamily family) {
  LengthFunction f;
  f.components_.push_back({std::move(label), FamilyCost{family}});
  return f;
}

LengthFunction LengthFunction::density(std::string label, bitcodes::FiniteDensity density) {
  LengthFunction f;
  f.components_.push_back({std::move(label), DensityCost{std::move(density)}});
  return f;
}

double component_length(const Component& c, std::uint64_t x) {
  struct Visitor {
    std::uint64_t x;
    double operator()(const UniformChoice& u) const {
      if (x >= u.options) return kInf;
      return u.ceiled ? static_cast<double>(ceil_log2(u.options)) : std::log2(static_cast<double>(u.options));
    }
    double operator()(const RawBits& r) const {
      if (r.count < 64 && x >> r.count != 0) return kInf;
      return static_cast<double>(r.count);
    }
    double operator()(const DensityCost& d) const {
      if (x >= d.density.size()) return kInf;
      return std::log2(1.0 / d.density[x]);
    }
    double operator()(const ExplicitLengths& e) const { return x < e.lengths.size() ? e.lengths[x] : kInf; }
    double operator()(const FamilyCost& f) const {
      switch (f.family) {
        case bitcodes::CodeFamily::unary:
          return static_cast<double>(bitcodes::Unary::length(x));
        case bitcodes::CodeFamily::elias_gamma:
          return x == 0 ? kInf : static_cast<double>(bitcodes::EliasGamma::length(x));
      }
      return kInf;
    }
  };
  return std::visit(Visitor{x}, c.kind);
}

KraftSum component_kraft_sum(const Component& c) {
  struct Visitor {
    KraftSum operator()(const UniformChoice& u) const {
      if (!u.ceiled) return {1.0, Rational(1)};
      unsigned w = ceil_log2(u.options);
      Rational r = dyadic(u.options, w);
      return {r.convert_to<double>(), r};
    }
    KraftSum operator()(const RawBits&) const { return {1.0, Rational(1)}; }
    // sum_x 2^-log(1/p_x) = sum_x p_x = 1
    KraftSum operator()(const DensityCost&) const { return {1.0, Rational(1)}; }
    KraftSum operator()(const ExplicitLengths& e) const {
      KraftSum out{bitcodes::kraft_sum(e.lengths), std::nullopt};
      Rational exact = 0;
      for (double l : e.lengths) {
        if (std::isinf(l)) continue;
        if (l != std::floor(l) || l > 4096) return out;
        exact += Rational(1) / Rational(BigUint(1) << static_cast<unsigned>(l));
      }
      out.exact = exact;
      return out;
    }
    KraftSum operator()(const FamilyCost& f) const {
      double v = bitcodes::analytic_kraft_sum(f.family);
      return {v, f.family == bitcodes::CodeFamily::unary ? Rational(1) : Rational(1, 2)};
    }
  };
  return std::visit(Visitor{}, c.kind);
}

double LengthFunction::length(std::span<const std::uint64_t> outcome) const {
  if (outcome.size() != components_.size()) {
    throw std::invalid_argument("outcome must have one coordinate per component");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    double l = component_length(components_[i], outcome[i]);
    if (std::isinf(l)) return kInf;
    total += l;
  }
  return total;
}

KraftSum LengthFunction::kraft_sum() const {
  KraftSum total{1.0, Rational(1)};
  for (const auto& c : components_) {
    KraftSum k = component_kraft_sum(c);
    total.value *= k.value;
    if (total.exact && k.exact) {
      *total.exact *= *k.exact;
    } else {
      total.exact.reset();
    }
  }
  return total;
}

bool LengthFunction::satisfies_kraft() const {
  KraftSum k = kraft_sum();
  if (k.exact) return *k.exact <= 1;
  return k.value <= 1.0 + 1e-12;
}

LengthFunction compose(const LengthFunction& a, const LengthFunction& b) {
  LengthFunction out;
  out.components_ = a.components_;
  out.components_.insert(out.components_.end(), b.components_.begin(), b.components_.end());
  return out;
}

LengthFunction density_lengths(const bitcodes::FiniteDensity& p) { return LengthFunction::density("density", p); }

TailBound uniform_tail(double universe_log2, double code_length) {
  if (std::isnan(universe_log2) || universe_log2 < 0.0) {
    throw std::invalid_argument("universe size must be at least 1");
  }
  TailBound b = TailBound::from_savings("uniform", universe_log2 - code_length);
  b.params = {{"universe_log2", universe_log2}, {"code_length", code_length}};
  b.threshold = code_length;
  return b;
}

TailBound nonuniform_tail(double log_inv_px, double code_length) {
  if (std::isnan(log_inv_px) || log_inv_px < 0.0) throw std::invalid_argument("log(1/p_x) must be >= 0");
  TailBound b = TailBound::from_savings("nonuniform", log_inv_px - code_length);
  b.params = {{"log_inv_px", log_inv_px}, {"code_length", code_length}};
  b.threshold = code_length;
  return b;
}

UniformLemmaCount check_uniform_lemma(const bitcodes::CodeTable& code, std::uint64_t universe, unsigned s) {
  if (universe == 0) throw std::invalid_argument("universe must be non-empty");
  UniformLemmaCount r;
  const double cutoff = std::floor(std::log2(static_cast<double>(universe)) - s);
  if (cutoff >= 0.0) r.short_codewords = code.count_at_most(static_cast<std::size_t>(cutoff));
  r.fraction = static_cast<double>(r.short_codewords) / static_cast<double>(universe);
  r.bound = std::exp2(-static_cast<double>(s));
  // count / universe <= 2^-s  <=>  count * 2^s <= universe, in integers.
  r.holds = (BigUint(r.short_codewords) << s) <= universe;
  return r;
}

}  // namespace ledger
}  // namespace encbound
