// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "encbound/entropy.hpp"
#include "encbound/rng.hpp"

using namespace encbound::entropy;

TEST_CASE("binary entropy values") {
  CHECK(binary_entropy(0.5) == 1.0);
  CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781244591328).epsilon(1e-15));
  encbound::Rng rng(1);
  for (int i = 0; i < 1000; ++i) {
    const double a = 1e-6 + rng.uniform01() * (1 - 2e-6);
    CHECK(binary_entropy(a) == doctest::Approx(binary_entropy(1 - a)).epsilon(1e-12));
    CHECK(binary_entropy(a) <= 1.0);
    CHECK(binary_entropy(a) > 0.0);
  }
}

TEST_CASE("upper bounds on entropy") {
  CHECK(entropy_bound_near_zero(0.25) == doctest::Approx(0.5 + 0.25 * kLog2E).epsilon(1e-12));
  CHECK(entropy_bound_near_zero(0.25) >= binary_entropy(0.25));
  CHECK(entropy_bound_near_half(0.5) == doctest::Approx(1 - 0.25 / (2 * std::log(2.0))).epsilon(1e-12));
  CHECK(entropy_bound_near_half(0.5) > binary_entropy(0.75));
  CHECK(entropy_bound_near_half(1e-9) == doctest::Approx(1.0));
  // Near zero the bound and H share the a log(1/a) term.
  const double a = 1e-6;
  const double lead = a * std::log2(1 / a);
  CHECK(std::abs(entropy_bound_near_zero(a) - binary_entropy(a)) / lead < 1e-5 * 100);
  for (double x = 0.001; x < 0.999; x += 0.001) {
    CHECK(entropy_bound_near_zero(x) >= binary_entropy(x));
    CHECK(entropy_bound_near_half(x) > binary_entropy((1 + x) / 2));
  }
}

TEST_CASE("relative entropy") {
  CHECK(kl_divergence(0.3, 0.3) == doctest::Approx(0.0));
  CHECK(kl_divergence(0.3, 0.5) == doctest::Approx(0.1187091007693073).epsilon(1e-12));
  CHECK(kl_divergence(0.0, 0.5) == 1.0);
  CHECK(kl_divergence(1.0, 0.5) == 1.0);
  for (double p = 0.0; p <= 1.0; p += 0.05) {
    for (double q = 0.05; q < 1.0; q += 0.05) CHECK(kl_divergence(p, q) >= -1e-15);
  }
}

TEST_CASE("factorials") {
  CHECK(log2_factorial(0) == 0.0);
  CHECK(log2_factorial(1) == 0.0);
  CHECK(log2_factorial(10) == doctest::Approx(std::log2(3628800.0)).epsilon(1e-12));
  for (std::uint64_t n : {1, 2, 5, 10, 100, 1000, 100000}) {
    const auto b = log_factorial_bound(n);
    const double exact = log2_factorial(n);
    CHECK(b.lower <= exact);
    CHECK(exact <= b.upper);
    CHECK(b.lower <= b.point);
    CHECK(b.point <= b.upper);
  }
  // Beyond the summation limit the Stirling midpoint takes over smoothly.
  const double below = log2_factorial(kFactorialSummationLimit);
  const double above = log2_factorial(kFactorialSummationLimit + 1);
  CHECK(above - below == doctest::Approx(std::log2(static_cast<double>(kFactorialSummationLimit + 1))).epsilon(1e-6));
}

TEST_CASE("binomial bound chain") {
  const auto b = log_binomial_bound(4, 2);
  CHECK(b.exact == doctest::Approx(std::log2(6.0)));
  CHECK(b.entropy_bound == doctest::Approx(4.0));
  for (std::uint64_t n : {2, 3, 10, 57, 400}) {
    for (std::uint64_t k = 1; k < n; k += 1 + n / 20) {
      const auto c = log_binomial_bound(n, k);
      CHECK(c.exact <= c.entropy_bound + 1e-9);
      CHECK(c.entropy_bound <= c.loose_bound + 1e-9);
      CHECK(log2_binomial(n, k) == doctest::Approx(c.exact));
    }
    CHECK(log2_binomial(n, 1) <= std::log2(static_cast<double>(n)) + kLog2E);
  }
}
