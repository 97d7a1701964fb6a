// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "encbound/bitcodes.hpp"
#include "encbound/rng.hpp"

using namespace encbound;
using namespace encbound::bitcodes;

namespace {

// Reference encoders built on text, independent of the library.
std::string binary(std::uint64_t i) {
  std::string s;
  for (; i > 0; i >>= 1) s.insert(s.begin(), static_cast<char>('0' + (i & 1U)));
  return s;
}
std::string ref_unary(std::uint64_t i) { return std::string(i, '1') + "0"; }
std::string ref_gamma(std::uint64_t i) {
  const std::string b = binary(i);
  return ref_unary(b.size()) + b.substr(1);
}
std::string ref_delta(std::uint64_t i) {
  const std::string b = binary(i);
  return ref_gamma(b.size()) + b.substr(1);
}
std::string ref_omega(std::uint64_t i) {
  std::string code = "0";
  for (std::uint64_t n = i; n > 1; n = binary(n).size() - 1) code = binary(n) + code;
  return code;
}

template <typename C>
std::string enc(std::uint64_t i) {
  return encode<C>(i).to_string();
}

}  // namespace

TEST_CASE("unary examples") {
  CHECK(enc<Unary>(0) == "0");
  CHECK(enc<Unary>(3) == "1110");
  CHECK(Unary::length(10) == 11);
}

TEST_CASE("elias gamma examples") {
  CHECK(enc<EliasGamma>(1) == "10");
  CHECK(enc<EliasGamma>(5) == "111001");
  CHECK_THROWS_AS(enc<EliasGamma>(0), std::invalid_argument);
}

TEST_CASE("elias delta examples") {
  CHECK(enc<EliasDelta>(1) == "10");
  CHECK(enc<EliasDelta>(5) == "110101");
}

TEST_CASE("elias omega examples") {
  CHECK(enc<EliasOmega>(1) == "0");
  CHECK(enc<EliasOmega>(2) == "100");
  CHECK(enc<EliasOmega>(5) == "101010");
}

TEST_CASE("codecs agree with text oracles and their length formulas") {
  for (std::uint64_t i = 1; i <= 5000; ++i) {
    REQUIRE(enc<Unary>(i) == ref_unary(i));
    REQUIRE(enc<EliasGamma>(i) == ref_gamma(i));
    REQUIRE(enc<EliasDelta>(i) == ref_delta(i));
    REQUIRE(enc<EliasOmega>(i) == ref_omega(i));
    REQUIRE(EliasGamma::length(i) == ref_gamma(i).size());
    REQUIRE(EliasDelta::length(i) == ref_delta(i).size());
    REQUIRE(EliasOmega::length(i) == ref_omega(i).size());
  }
}

TEST_CASE("large values roundtrip") {
  for (std::uint64_t i : {std::uint64_t{1} << 40, (std::uint64_t{1} << 63) + 12345, UINT64_MAX}) {
    CHECK(decode_exact<EliasGamma>(encode<EliasGamma>(i)) == i);
    CHECK(decode_exact<EliasDelta>(encode<EliasDelta>(i)) == i);
    CHECK(decode_exact<EliasOmega>(encode<EliasOmega>(i)) == i);
  }
}

TEST_CASE("codeword sets are prefix-free") {
  std::vector<std::string> words;
  for (std::uint64_t i = 1; i <= 300; ++i) words.push_back(enc<EliasOmega>(i));
  for (std::uint64_t i = 1; i <= 300; ++i) words.push_back("x" + enc<EliasDelta>(i));
  std::sort(words.begin(), words.end());
  for (std::size_t i = 1; i < words.size(); ++i) CHECK(words[i].rfind(words[i - 1], 0) != 0);
}

TEST_CASE("truncated and trailing input is rejected") {
  CHECK_THROWS_AS(decode_exact<Unary>(BitString::from_string("111")), DecodeError);
  CHECK_THROWS_AS(decode_exact<EliasGamma>(BitString::from_string("1110")), DecodeError);
  CHECK_THROWS_AS(decode_exact<EliasGamma>(BitString::from_string("100")), DecodeError);
  CHECK_THROWS_AS(decode_exact<EliasOmega>(BitString::from_string("10")), DecodeError);
}

TEST_CASE("fixed-length codes") {
  CHECK(fixed_length_encode(4, 5).to_string() == "100");
  CHECK(fixed_length_encode(0, 1).to_string().empty());
  CHECK(fixed_length_encode(2, 8).to_string() == "010");
  CHECK_THROWS_AS(fixed_length_encode(5, 5), std::invalid_argument);
  for (std::uint64_t m : {1, 2, 3, 7, 1000}) {
    for (std::uint64_t v = 0; v < m; v += 1 + m / 50) {
      const BitString b = fixed_length_encode(v, m);
      CHECK(b.size() == ceil_log2(m));
      BitReader in(b);
      CHECK(fixed_length_decode(in, m) == v);
    }
  }
}

TEST_CASE("subset ranks") {
  const std::vector<std::uint64_t> first{0, 1};
  const std::vector<std::uint64_t> last{2, 3};
  CHECK(subset_rank(4, first) == 0);
  CHECK(subset_rank(4, last) == 5);
  // Every 3-subset of 8 gets a distinct rank below C(8,3), and unranks back.
  std::vector<bool> seen(56, false);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = a + 1; b < 8; ++b) {
      for (std::uint64_t c = b + 1; c < 8; ++c) {
        const std::vector<std::uint64_t> s{a, b, c};
        const auto r = subset_rank(8, s);
        REQUIRE(r < 56);
        const auto idx = static_cast<std::size_t>(r);
        CHECK_FALSE(seen[idx]);
        seen[idx] = true;
        CHECK(subset_unrank(8, 3, r) == s);
      }
    }
  }
  CHECK(binomial(8, 3) == 56);
  CHECK(binomial(100, 50) > BigUint(1) << 95);
}

TEST_CASE("shannon-fano lengths") {
  const auto lens = [](std::vector<double> p) {
    std::vector<std::size_t> out;
    for (const auto& w : shannon_fano_build(FiniteDensity(std::move(p))).entries()) out.push_back(w->size());
    return out;
  };
  CHECK(lens({0.25, 0.25, 0.25, 0.25}) == std::vector<std::size_t>{2, 2, 2, 2});
  CHECK(lens({0.5, 0.25, 0.25}) == std::vector<std::size_t>{1, 2, 2});
  CHECK(lens({0.4, 0.3, 0.3}) == std::vector<std::size_t>{2, 2, 2});
  CHECK_THROWS_AS(FiniteDensity({0.5, 0.4}), std::invalid_argument);
}

TEST_CASE("shannon-fano tables are prefix-free with Kraft sum at most one") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> p(1 + rng.below(40));
    for (auto& x : p) x = std::pow(rng.uniform01() + 1e-6, 3.0);
    const double total = std::accumulate(p.begin(), p.end(), 0.0);
    for (auto& x : p) x /= total;
    const CodeTable t = shannon_fano_build(FiniteDensity(p));
    CHECK(t.is_prefix_free());
    CHECK(t.is_injective());
    CHECK(t.kraft_sum() <= 1.0);
    for (std::size_t x = 0; x < p.size(); ++x) CHECK(t[x]->size() == shannon_fano_length(p[x]));
  }
}

TEST_CASE("bernoulli codeword lengths") {
  CHECK(bernoulli_codeword_length(BitString::from_string("1111"), 0.5) == doctest::Approx(4.0));
  CHECK(bernoulli_codeword_length(BitString::from_string("1000"), 0.25) ==
        doctest::Approx(2.0 + 3.0 * std::log2(4.0 / 3.0)));
}

TEST_CASE("kraft sums") {
  const std::vector<double> full{1, 2, 2};
  CHECK(kraft_sum(full) == 1.0);
  CHECK(analytic_kraft_sum(CodeFamily::unary) == 1.0);
  CHECK(analytic_kraft_sum(CodeFamily::elias_gamma) == 0.5);
  // Partial sums approach the analytic values from below.
  double u = 0.0;
  double g = 0.0;
  for (std::uint64_t i = 0; i < 60; ++i) u += std::ldexp(1.0, -static_cast<int>(Unary::length(i)));
  for (std::uint64_t i = 1; i < (1U << 20); ++i) g += std::ldexp(1.0, -static_cast<int>(EliasGamma::length(i)));
  CHECK(u == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(g <= 0.5);
  CHECK(g == doctest::Approx(0.5).epsilon(1e-5));
}

TEST_CASE("code table queries") {
  std::vector<std::optional<BitString>> e{BitString::from_string("0"), std::nullopt, BitString::from_string("10"),
                                          BitString::from_string("11")};
  const CodeTable t(e);
  CHECK(t.is_prefix_free());
  CHECK(t.kraft_sum() == 1.0);
  CHECK(t.count_at_most(1) == 1);
  CHECK(std::isinf(t.lengths()[1]));
  const CodeTable bad({BitString::from_string("1"), BitString::from_string("10")});
  CHECK_FALSE(bad.is_prefix_free());
}
