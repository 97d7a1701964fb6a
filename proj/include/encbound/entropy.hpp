// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace encbound::entropy {

inline constexpr double kLog2E = 1.4426950408889634074;

/// H(a) = a log(1/a) + (1-a) log(1/(1-a)), a in (0,1).
double binary_entropy(double alpha);

/// a log(1/a) + a log e, an upper bound on H(a) that is tight near 0.
double entropy_bound_near_zero(double alpha);

/// 1 - eps^2 / (2 ln 2), a strict upper bound on H((1+eps)/2), eps in (0,1).
double entropy_bound_near_half(double eps);

/// Bernoulli relative entropy D(p || q) in bits, p in [0,1], q in (0,1),
/// using 0 log 0 = 0.
double kl_divergence(double p, double q);

/// Inputs at or below this use exact summation for log2(n!).
inline constexpr std::uint64_t kFactorialSummationLimit = 1'000'000;

/// log2(n!). Direct summation of log2(i) up to kFactorialSummationLimit,
/// Stirling midpoint beyond.
double log2_factorial(std::uint64_t n);

struct FactorialBounds {
  double lower = 0.0;
  double upper = 0.0;
  double point = 0.0;
};

/// Brackets log2(n!) between Stirling-based bounds:
///   base  = n log n - n log e + (1/2) log n + log sqrt(2 pi)
///   lower = base + log e / (2 (12n + 1))   (Robbins, then 1+x >= e^(x/2))
///   upper = base + log e / (6n)            (Robbins, e^x - 1 <= 2x, 1+x <= e^x)
/// n = 0 yields all zeros.
FactorialBounds log_factorial_bound(std::uint64_t n);

struct BinomialBounds {
  double exact = 0.0;          // log2 C(n,k) by summation
  double entropy_bound = 0.0;  // n H(k/n)
  double loose_bound = 0.0;    // k log(n/k) + k log e
};

/// Chain log C(n,k) <= n H(k/n) <= k log(n/k) + k log e, for 1 <= k <= n-1.
BinomialBounds log_binomial_bound(std::uint64_t n, std::uint64_t k);

/// log2 C(n,k) by summation; 0 <= k <= n.
double log2_binomial(std::uint64_t n, std::uint64_t k);

}  // namespace encbound::entropy
