// SPDX-License-Identifier: Apache-2.0
#include "encbound/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace encbound::entropy {

namespace {

void require_open_unit(double a, const char* what) {
  if (!(a > 0.0 && a < 1.0)) throw std::invalid_argument(std::string(what) + " must lie in (0, 1)");
}

double stirling_base(double n) {
  return n * std::log2(n) - n * kLog2E + 0.5 * std::log2(n) + 0.5 * std::log2(2.0 * std::numbers::pi);
}

}  // namespace

double binary_entropy(double alpha) {
  require_open_unit(alpha, "alpha");
  return alpha * std::log2(1.0 / alpha) + (1.0 - alpha) * std::log2(1.0 / (1.0 - alpha));
}

double entropy_bound_near_zero(double alpha) {
  require_open_unit(alpha, "alpha");
  return alpha * std::log2(1.0 / alpha) + alpha * kLog2E;
}

double entropy_bound_near_half(double eps) {
  require_open_unit(eps, "eps");
  return 1.0 - eps * eps / (2.0 * std::numbers::ln2);
}

double kl_divergence(double p, double q) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  require_open_unit(q, "q");
  double d = 0.0;
  if (p > 0.0) d += p * std::log2(p / q);
  if (p < 1.0) d += (1.0 - p) * std::log2((1.0 - p) / (1.0 - q));
  // Round-off can push D(p||p) a hair below zero.
  return std::max(d, 0.0);
}

double log2_factorial(std::uint64_t n) {
  if (n <= kFactorialSummationLimit) {
    // Running sums of log2(i), built once.
    static const std::vector<double> table = [] {
      std::vector<double> t(kFactorialSummationLimit + 1, 0.0);
      long double sum = 0.0L;
      for (std::uint64_t i = 2; i <= kFactorialSummationLimit; ++i) {
        sum += std::log2(static_cast<long double>(i));
        t[i] = static_cast<double>(sum);
      }
      return t;
    }();
    return table[n];
  }
  auto b = log_factorial_bound(n);
  return 0.5 * (b.lower + b.upper);
}

FactorialBounds log_factorial_bound(std::uint64_t n) {
  if (n == 0) return {};
  const auto x = static_cast<double>(n);
  const double base = stirling_base(x);
  FactorialBounds b;
  b.lower = base + kLog2E / (2.0 * (12.0 * x + 1.0));
  b.upper = base + kLog2E / (6.0 * x);
  b.point = n <= kFactorialSummationLimit ? log2_factorial(n) : 0.5 * (b.lower + b.upper);
  return b;
}

double log2_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("k must not exceed n");
  k = std::min(k, n - k);
  double sum = 0.0;
  for (std::uint64_t i = 1; i <= k; ++i) {
    sum += std::log2(static_cast<double>(n - k + i) / static_cast<double>(i));
  }
  return sum;
}

BinomialBounds log_binomial_bound(std::uint64_t n, std::uint64_t k) {
  if (k < 1 || k + 1 > n) throw std::invalid_argument("k must lie in [1, n-1]");
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  BinomialBounds b;
  b.exact = log2_binomial(n, k);
  b.entropy_bound = nn * binary_entropy(kk / nn);
  b.loose_bound = kk * std::log2(nn / kk) + kk * kLog2E;
  return b;
}

}  // namespace encbound::entropy
