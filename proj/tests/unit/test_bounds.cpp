// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "encbound/bounds.hpp"
#include "encbound/entropy.hpp"
#include "encbound/params.hpp"

using namespace encbound;
using namespace encbound::bounds;

TEST_CASE("runs threshold") {
  const auto a = runs_threshold(8, 3);
  CHECK(*a.threshold == 6);
  CHECK(a.probability == 0.125);
  const auto b = runs_threshold(2, 0);
  CHECK(*b.threshold == 1);
  CHECK(b.probability == 1.0);
  const auto c = runs_threshold(1024, 10);
  CHECK(*c.threshold == 20);
  CHECK(c.probability == std::ldexp(1.0, -10));
}

TEST_CASE("ramsey threshold") {
  CHECK(*ramsey_threshold(16, 2).threshold == 14);
  CHECK(ramsey_threshold(16, 2).probability == 0.25);
  CHECK(*ramsey_threshold(3, 1).threshold == 7);
  CHECK_THROWS_AS(ramsey_threshold(2, 1), std::invalid_argument);
  const auto v = ramsey_power_variant(16);
  CHECK(*v.threshold == 16);
  CHECK(v.extra("claimed_probability") == doctest::Approx(std::pow(16.0, -4.0)));
  CHECK(v.probability <= v.extra("claimed_probability"));
}

TEST_CASE("urns threshold") {
  const auto a = urns_threshold(1024, 3);
  CHECK(*a.threshold == 9);
  CHECK(a.probability == 0.125);
  double prev = 0;
  for (double s = 0; s < 40; s += 0.5) {
    const double t = *urns_threshold(1 << 20, s).threshold;
    CHECK(t >= prev);
    const double lhs = t * std::log2(t / std::exp(1.0));
    CHECK(lhs >= 20 + s);
    CHECK((t - 1) * std::log2((t - 1) / std::exp(1.0)) < 20 + s);
    prev = t;
  }
}

TEST_CASE("linear probing threshold") {
  CHECK(*linear_probing_threshold(4, 2).threshold == 18);
  const double t = *linear_probing_threshold(std::exp(1.0) + 0.01, 0).threshold;
  CHECK(std::isfinite(t));
  CHECK(t > 1000);
  CHECK_THROWS_AS(linear_probing_threshold(2.7, 1), std::invalid_argument);
  CHECK(std::isfinite(linear_probing_search_series(4, 1)));
  CHECK(linear_probing_search_series(4, 1) > 0);
}

TEST_CASE("cuckoo and two-choice constants are flagged") {
  const auto p = cuckoo_path_threshold(1024, 10);
  CHECK(*p.threshold == 24);
  CHECK(p.asymptotic);
  CHECK(*cuckoo_path_threshold(1024, 10, 2).threshold == 22);
  const auto f = cuckoo_failure(1000, 3);
  CHECK(f.probability == doctest::Approx(0.003));
  CHECK(f.asymptotic);
  const auto comp = two_choice_component(1 << 16, 16, 16, 0.0);
  CHECK(*comp.threshold == doctest::Approx(32.0));
  CHECK(*two_choice_maxload(1 << 16, 3).threshold == 7);
  CHECK_THROWS_AS(two_choice_component(1 << 16, 8, 1), std::invalid_argument);
}

TEST_CASE("expander constants") {
  CHECK(expander_beta() == doctest::Approx(1.5 * std::log2(1.5) + 2.5 * entropy::kLog2E).epsilon(1e-14));
  CHECK(std::abs(expander_beta() - 4.48418) <= 1e-4);
  CHECK(std::abs(expander_alpha_threshold() - 0.002) <= 5e-4);
  CHECK(expander_savings(1 << 20, 1).savings ==
        doctest::Approx(10.0 - expander_beta()).epsilon(1e-12));
}

TEST_CASE("inversions tail") {
  const auto a = inversions_tail(100, 0.05, 0.0);
  CHECK(a.savings == doctest::Approx(-100 * std::log2(0.05 * std::exp(2.0))).epsilon(1e-12));
  CHECK(-a.savings == doctest::Approx(-143.7).epsilon(1e-3));
  CHECK(a.asymptotic);
  CHECK_THROWS_AS(inversions_tail(100, std::exp(-2.0)), std::invalid_argument);
  CHECK(inversions_tail(100, std::exp(-2.0) - 1e-3, 0.0).savings > 0);
}

TEST_CASE("records and bst height") {
  CHECK(records_rate(3) == doctest::Approx(0.245112).epsilon(1e-5));
  CHECK(records_rate(2.000001) < 1e-5);
  // Direct evaluation gives 3.65148; the often-quoted 3.6498 is a rounding slip.
  CHECK(records_rate(8) == doctest::Approx(8 * (1 - entropy::binary_entropy(0.125))));
  CHECK_THROWS_AS(records_tail(100, 2), std::invalid_argument);
  const auto hi = bst_height_constant_check(9.943483);
  CHECK(hi.ok);
  CHECK(hi.lhs > 2.0);
  CHECK(hi.lhs < 2.0002);
  const auto lo = bst_height_constant_check(9.9);
  CHECK_FALSE(lo.ok);
  CHECK(lo.lhs == doctest::Approx(1.9741).epsilon(1e-3));
  double prev = 0;
  for (double c = 5; c < 200; c *= 1.1) {
    CHECK(bst_height_constant_check(c).lhs > prev);
    prev = bst_height_constant_check(c).lhs;
  }
  CHECK_THROWS_AS(bst_height_constant_check(4.0), std::invalid_argument);
}

TEST_CASE("chernoff bounds") {
  CHECK(chernoff_basic(100, 0.2).probability == doctest::Approx(std::exp(-2.0)).epsilon(1e-12));
  CHECK(chernoff_basic(100, 0).probability == 1.0);
  CHECK(chernoff_kl(20, 0.5, 0.2).probability == doctest::Approx(0.19288568522336444).epsilon(1e-12));
  CHECK(chernoff_kl(20, 0.5, 0.0).probability == 1.0);
  CHECK_THROWS_AS(chernoff_kl(20, 0.3, 0.4), std::invalid_argument);
  for (std::uint64_t n = 1; n <= 400; n += 13) {
    for (double eps = 0; eps <= 1.0; eps += 0.02) {
      CHECK(chernoff_kl(n, 0.5, eps / 2).probability <= chernoff_basic(n, eps).probability * (1 + 1e-12));
    }
  }
}

TEST_CASE("percolation") {
  const auto a = percolation_cycle_tail(400, 0.25, 4);
  CHECK(*a.threshold == doctest::Approx((4 + std::log2(400.0)) / std::log2(4.0 / 3.0)));
  CHECK(*a.threshold == doctest::Approx(30.46).epsilon(1e-3));
  CHECK(a.probability == 1.0 / 16);
  CHECK(*percolation_cycle_tail(64, 0.2, 6).threshold == doctest::Approx(16.28).epsilon(1e-3));
  CHECK(*percolation_cycle_tail(64, 0.3333, 6).threshold > 1e4);
  CHECK_THROWS_AS(percolation_cycle_tail(64, 1.0 / 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(percolation_cycle_tail(63, 0.2, 1), std::invalid_argument);
}

TEST_CASE("triangles") {
  CHECK(triangles_down(0.2).probability == doctest::Approx(0.008));
  CHECK(triangles_down(1.5).probability == 1.0);
  const auto up = triangles_up(1 << 20, 2, 1);
  CHECK(up.asymptotic);
  CHECK(up.probability == doctest::Approx(std::ldexp(1.0, -8)));
}

TEST_CASE("moser tail") {
  const auto a = moser_tail(8, 10);
  CHECK(*a.threshold == 34);
  CHECK(a.probability == std::ldexp(1.0, -10));
  const auto b = moser_tail(1, 0);
  CHECK(*b.threshold == 0);
  CHECK(b.probability == 1.0);
  CHECK(moser_precondition(8, 31));
  CHECK_FALSE(moser_precondition(8, 32));
}

TEST_CASE("bounds stay in [0,1] and clamping is reported") {
  CHECK_THROWS_AS(runs_threshold(8, -3), std::invalid_argument);
  const auto r = inversions_tail(4, 0.1, 2.0);
  CHECK(r.probability == 1.0);
  CHECK(r.clamped);
  for (const auto& info : theorems()) CHECK_FALSE(info.id.empty());
}

TEST_CASE("registry evaluation") {
  Params p({{"n", 8}, {"s", 3}});
  const auto b = evaluate("runs", p);
  CHECK(*b.threshold == 6);
  CHECK(p.unused().empty());
  CHECK_THROWS_AS(evaluate("nope", p), std::out_of_range);
  CHECK_THROWS_AS(evaluate("runs", Params({{"n", 8}})), std::invalid_argument);
}
