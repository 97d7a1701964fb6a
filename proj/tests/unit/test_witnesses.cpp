// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "encbound/experiments.hpp"
#include "encbound/graph.hpp"
#include "encbound/rng.hpp"
#include "encbound/witnesses.hpp"

using namespace encbound;
using namespace encbound::witnesses;

TEST_CASE("runs codec examples") {
  const auto x = BitString::from_string("10111110");
  const auto code = runs_encode(x, 4);
  REQUIRE(code);
  CHECK(code->to_string() == "0101010");
  CHECK(runs_decode(*code, 8, 4) == x);
  const auto ones = runs_encode(BitString::from_string("1111"), 4);
  REQUIRE(ones);
  CHECK(ones->to_string() == "00");
  CHECK_FALSE(runs_encode(BitString::from_string("11101110"), 4).has_value());
  CHECK(runs_decode(BitString::from_string("0101010"), 8, 4).to_string() == "10111110");
}

TEST_CASE("runs codec exhaustive roundtrip") {
  for (std::uint64_t v = 0; v < 4096; ++v) {
    BitString x;
    x.append_bits(v, 12);
    const auto code = runs_encode(x, 5);
    REQUIRE(code.has_value() == first_run(x, 5).has_value());
    if (code) {
      REQUIRE(code->size() == runs_length(12, 5));
      REQUIRE(runs_decode(*code, 12, 5) == x);
    }
  }
}

TEST_CASE("urns codec") {
  const std::vector<std::uint64_t> pair{0, 0};
  const auto small = urns_encode(pair, 2);
  REQUIRE(small);
  CHECK(small->size() == urns_length(2, 2));
  CHECK(urns_decode(*small, 2, 2) == pair);
  CHECK(urns_length(16, 4) == 63);

  std::uint64_t encoded = 0;
  for (std::uint64_t a = 0; a < 256; ++a) {
    std::vector<std::uint64_t> balls(4);
    std::vector<int> load(4, 0);
    for (std::size_t i = 0; i < 4; ++i) ++load[balls[i] = (a >> (2 * i)) & 3U];
    const auto code = urns_encode(balls, 3);
    REQUIRE(code.has_value() == (*std::max_element(load.begin(), load.end()) >= 3));
    if (!code) continue;
    ++encoded;
    REQUIRE(urns_decode(*code, 4, 3) == balls);
  }
  // 4 urns x (C(4,3) * 3 + 1) assignments put at least 3 balls in some urn.
  CHECK(encoded == 52);
}

TEST_CASE("clique codec") {
  const Graph k4 = Graph::complete(4);
  const auto code = clique_encode(k4, 4);
  REQUIRE(code);
  CHECK(code->size() == 9);
  CHECK(clique_decode(*code, 4, 4) == k4);
  const Graph empty(4);
  const auto e = clique_encode(empty, 4);
  REQUIRE(e);
  CHECK(e->size() == 9);
  CHECK((*e)[0] == false);
  CHECK(clique_decode(*e, 4, 4) == empty);

  Rng rng(9);
  for (int i = 0; i < 50; ++i) {
    const Graph g = experiments::sample_gnp(12, 0.5, rng);
    for (auto mode : {VertexListMode::indices, VertexListMode::subset_rank}) {
      const auto c = clique_encode(g, 4, mode);
      REQUIRE(c.has_value() == find_homogeneous_set(g, 4).has_value());
      if (c) {
        CHECK(c->size() == clique_length(12, 4, mode));
        CHECK(clique_decode(*c, 12, 4, mode) == g);
      }
    }
  }
  CHECK(clique_length(12, 4, VertexListMode::subset_rank) <= clique_length(12, 4, VertexListMode::indices));
}

TEST_CASE("insertion sort profiles") {
  const std::vector<std::uint64_t> id{1, 2, 3, 4, 5};
  CHECK(insertion_sort_profile(id).total() == 0);
  const std::vector<std::uint64_t> two{2, 1};
  CHECK(insertion_sort_profile(two).swaps == std::vector<std::uint64_t>{1});
  const std::vector<std::uint64_t> rev{5, 4, 3, 2, 1};
  CHECK(insertion_sort_profile(rev).swaps == std::vector<std::uint64_t>{1, 2, 3, 4});
  CHECK(insertion_sort_profile(rev).total() == 10);
  CHECK(insertion_sort_reconstruct(SwapProfile{{0, 0, 0}}) == Permutation{1, 2, 3, 4});
  CHECK(insertion_sort_reconstruct(SwapProfile{{1}}) == Permutation{2, 1});
  const std::vector<std::uint64_t> bad{1, 1, 2};
  CHECK_THROWS_AS(insertion_sort_profile(bad), std::invalid_argument);
}

TEST_CASE("swap profile equals the inversion profile") {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    const auto sigma = experiments::random_permutation(1 + rng.below(60), rng);
    CHECK(insertion_sort_profile(sigma).swaps == experiments::fast_swap_profile(sigma));
    CHECK(insertion_sort_reconstruct(insertion_sort_profile(sigma)) == sigma);
  }
}

TEST_CASE("composition ranks") {
  const std::vector<std::uint64_t> zeros{0, 0, 0};
  CHECK(composition_rank(zeros) == 0);
  // All compositions of 4 into 3 parts get distinct ranks below C(6, 2).
  std::vector<bool> seen(15, false);
  for (std::uint64_t a = 0; a <= 4; ++a) {
    for (std::uint64_t b = 0; a + b <= 4; ++b) {
      const std::vector<std::uint64_t> parts{a, b, 4 - a - b};
      const auto r = composition_rank(parts);
      REQUIRE(r < 15);
      CHECK_FALSE(seen[static_cast<std::size_t>(r)]);
      seen[static_cast<std::size_t>(r)] = true;
      CHECK(composition_unrank(4, 3, r) == parts);
    }
  }
}

TEST_CASE("inssort codec") {
  const std::vector<std::uint64_t> id{1, 2, 3, 4};
  CHECK(inssort_decode(inssort_encode(id), 4) == Permutation(id.begin(), id.end()));
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<std::uint64_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
    do {
      const auto code = inssort_encode(sigma);
      REQUIRE(code.size() == inssort_length(n, insertion_sort_profile(sigma).total()));
      REQUIRE(inssort_decode(code, n) == sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  Rng rng(8);
  const auto big = experiments::random_permutation(2000, rng);
  CHECK(inssort_decode(inssort_encode(big), 2000) == big);
}
