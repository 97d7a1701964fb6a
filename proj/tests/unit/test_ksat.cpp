// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <set>

#include "encbound/experiments.hpp"
#include "encbound/ksat.hpp"

using namespace encbound;
using namespace encbound::ksat;

namespace {

// Brute-force overlap degree from the variable sets.
std::uint64_t naive_degree(const CnfFormula& phi) {
  std::uint64_t worst = 0;
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    std::set<std::uint32_t> vars;
    for (const auto& l : phi.clauses[i]) vars.insert(l.var);
    std::uint64_t d = 0;
    for (std::size_t j = 0; j < phi.clauses.size(); ++j) {
      if (j == i) continue;
      bool shared = false;
      for (const auto& l : phi.clauses[j]) shared = shared || vars.count(l.var) != 0;
      d += shared ? 1 : 0;
    }
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace

TEST_CASE("window strides") {
  CHECK(window_stride(8, 0) == 8);
  CHECK(2 * ((8 + window_stride(8, 7) - 1) / window_stride(8, 7) - 1) <= 7);
  for (std::uint64_t k = 4; k <= 12; ++k) {
    for (std::uint64_t r = 0; r < 20; ++r) {
      const std::uint64_t s = window_stride(k, r);
      CHECK(s >= 1);
      CHECK(s <= k);
    }
  }
}

TEST_CASE("generated formulas respect the overlap bound") {
  Rng rng(1);
  const auto disjoint = gen_bounded_overlap_cnf(5, 10, 0, rng);
  CHECK(disjoint.num_vars == 50);
  CHECK(disjoint.intersection_degree() == 0);
  for (std::uint64_t r : {1, 2, 3, 7}) {
    const auto phi = gen_bounded_overlap_cnf(8, 32, r, rng);
    phi.validate();
    CHECK(phi.intersection_degree() == naive_degree(phi));
    CHECK(phi.intersection_degree() <= r);
    for (const auto& c : phi.clauses) CHECK(c.size() == 8);
  }
  CHECK_THROWS_AS(gen_bounded_overlap_cnf(3, 4, 0, rng), std::invalid_argument);
  CHECK_THROWS_AS(gen_bounded_overlap_cnf(8, 4, 32, rng), std::invalid_argument);
  CHECK_THROWS_AS(gen_bounded_overlap_cnf(8, 32, 7, rng, 10), std::invalid_argument);
}

TEST_CASE("neighbourhoods include the clause itself") {
  Rng rng(2);
  const auto phi = gen_bounded_overlap_cnf(6, 10, 3, rng);
  const auto nb = phi.neighbourhoods();
  for (std::uint32_t i = 0; i < nb.size(); ++i) {
    CHECK(std::find(nb[i].begin(), nb[i].end(), i) != nb[i].end());
    CHECK(std::is_sorted(nb[i].begin(), nb[i].end()));
  }
}

TEST_CASE("solver output satisfies the formula") {
  CnfFormula trivial{4, 4, {{{0, false}, {1, false}, {2, false}, {3, false}}}};
  std::vector<bool> yes{true, false, false, false};
  CHECK(trivial.satisfied(yes));
  CHECK_FALSE(trivial.satisfied(std::vector<bool>(4, false)));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const auto phi = gen_bounded_overlap_cnf(8, 32, 7, rng);
    const auto result = moser_solve(phi, rng);
    REQUIRE(phi.satisfied(result.assignment));
    CHECK(result.fix_count >= result.root_children);
  }
}

TEST_CASE("an already satisfied formula needs no fixing") {
  // No clauses: every assignment satisfies it.
  CnfFormula phi{4, 4, {}};
  Rng rng(3);
  CHECK(moser_solve(phi, rng).fix_count == 0);
}

TEST_CASE("moser experiment") {
  const auto r = experiments::sim_moser(8, 32, 7, 30, 100, 7);
  CHECK(r.check("unsatisfied_result").exceed == 0);
  CHECK(r.verdict() == experiments::Verdict::pass);
}
