// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "encbound/ledger.hpp"
#include "encbound/rng.hpp"

using namespace encbound;
using namespace encbound::ledger;

TEST_CASE("composition adds lengths and multiplies Kraft sums") {
  const auto index = LengthFunction::uniform_choice("index", 16);
  const auto rest = LengthFunction::raw_bits("rest", 12);
  const auto h = compose(index, rest);
  CHECK(h.arity() == 2);
  const std::vector<std::uint64_t> x{3, 0};
  CHECK(h.length(x) == doctest::Approx(4.0 + 12.0));
  const auto k = h.kraft_sum();
  REQUIRE(k.exact.has_value());
  CHECK(*k.exact == Rational(1, 1));

  const auto e = compose(index, LengthFunction::empty());
  const std::vector<std::uint64_t> y{5};
  const std::vector<std::uint64_t> y0{5, 0};
  CHECK(e.length(y0) == index.length(y));
  CHECK(*e.kraft_sum().exact == *index.kraft_sum().exact);
}

TEST_CASE("density lengths") {
  const auto l = density_lengths(bitcodes::FiniteDensity::uniform(8));
  const std::vector<std::uint64_t> x{2};
  CHECK(l.length(x) == doctest::Approx(3.0));
  CHECK(l.kraft_sum().value == doctest::Approx(1.0));
  const auto p = density_lengths(bitcodes::FiniteDensity({0.5, 0.25, 0.125, 0.125}));
  const std::vector<std::uint64_t> y{3};
  CHECK(p.length(y) == doctest::Approx(3.0));
  CHECK(p.satisfies_kraft());
}

TEST_CASE("family length functions") {
  const auto u = LengthFunction::family("u", bitcodes::CodeFamily::unary).kraft_sum();
  const auto g = LengthFunction::family("g", bitcodes::CodeFamily::elias_gamma).kraft_sum();
  REQUIRE(u.exact);
  REQUIRE(g.exact);
  CHECK(*u.exact == 1);
  CHECK(*g.exact == Rational(1, 2));
  const auto both = compose(LengthFunction::family("u", bitcodes::CodeFamily::unary),
                            LengthFunction::family("g", bitcodes::CodeFamily::elias_gamma));
  CHECK(*both.kraft_sum().exact == Rational(1, 2));
  const std::vector<std::uint64_t> x{3, 5};
  CHECK(both.length(x) == doctest::Approx(4.0 + 6.0));
}

TEST_CASE("explicit lengths with unencoded outcomes") {
  const auto l = LengthFunction::explicit_lengths("t", {1.0, 2.0, INFINITY});
  const std::vector<std::uint64_t> x{2};
  CHECK(std::isinf(l.length(x)));
  CHECK(l.kraft_sum().value == doctest::Approx(0.75));
  CHECK(l.satisfies_kraft());
  CHECK_FALSE(LengthFunction::explicit_lengths("bad", {1.0, 1.0, 1.0}).satisfies_kraft());
}

TEST_CASE("uniform and non-uniform lemmas") {
  const auto a = uniform_tail(8.0, 5.0);
  CHECK(a.savings == 3.0);
  CHECK(a.probability == 0.125);
  CHECK(uniform_tail(8.0, 8.0).probability == 1.0);
  const auto c = uniform_tail(8.0, 10.0);
  CHECK(c.probability == 1.0);
  CHECK(c.clamped);
  CHECK(uniform_tail(20.0, 20.0 - 4.0).probability == std::ldexp(1.0, -4));
  CHECK(nonuniform_tail(10.0, 7.0).probability == 0.125);
  CHECK(nonuniform_tail(10.0, 10.0).probability == 1.0);
}

TEST_CASE("uniform lemma counting on exhaustive short codes") {
  // Complete code with every word of length 3: all 8 outcomes within 3 bits.
  std::vector<std::optional<BitString>> words;
  for (std::uint64_t v = 0; v < 8; ++v) {
    BitString b;
    b.append_bits(v, 3);
    words.emplace_back(b);
  }
  words.resize(64);
  const bitcodes::CodeTable t(words);
  const auto r = check_uniform_lemma(t, 64, 3);
  CHECK(r.short_codewords == 8);
  CHECK(r.fraction == 0.125);
  CHECK(r.bound == 0.125);
  CHECK(r.holds);
}
