// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "encbound/experiments.hpp"
#include "encbound/params.hpp"
#include "encbound/report.hpp"

using namespace encbound;
using namespace encbound::experiments;

namespace {

struct Histo {
  std::vector<std::uint64_t> counts;
  void merge(const Histo& o) { merge_counts(counts, o.counts); }
};

Histo longest_run_histogram(unsigned threads) {
  return parallel_trials<Histo>(
      997, 77,
      [](Rng& rng, std::uint64_t, Histo& h) {
        std::uint64_t best = 0;
        std::uint64_t run = 0;
        for (int i = 0; i < 300; ++i) {
          run = rng.coin() ? run + 1 : 0;
          best = std::max(best, run);
        }
        if (h.counts.size() <= best) h.counts.resize(best + 1, 0);
        ++h.counts[best];
      },
      threads);
}

std::string report_text(const ExperimentReport& r) { return report::to_json(r, false).dump(); }

}  // namespace

TEST_CASE("rng streams are fixed functions of seed and trial") {
  Rng a = Rng::stream(42, 7);
  Rng b = Rng::stream(42, 7);
  Rng c = Rng::stream(42, 8);
  const auto x = a.below(1'000'000'000);
  CHECK(x == b.below(1'000'000'000));
  CHECK(x != c.below(1'000'000'000));
  Rng r(1);
  std::vector<int> hits(10, 0);
  for (int i = 0; i < 100000; ++i) ++hits[r.below(10)];
  for (int h : hits) CHECK(std::abs(h - 10000) < 500);
  for (int i = 0; i < 1000; ++i) {
    const double u = r.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("trial results do not depend on the worker count") {
  const auto one = longest_run_histogram(1);
  CHECK(std::accumulate(one.counts.begin(), one.counts.end(), std::uint64_t{0}) == 997);
  for (unsigned threads : {2U, 3U, 8U}) CHECK(longest_run_histogram(threads).counts == one.counts);
}

TEST_CASE("worker exceptions propagate") {
  struct Acc {
    void merge(const Acc&) {}
  };
  auto boom = [](Rng&, std::uint64_t i, Acc&) {
    if (i == 5) throw std::runtime_error("trial failed");
  };
  CHECK_THROWS_AS(parallel_trials<Acc>(10, 1, boom, 3), std::runtime_error);
}

TEST_CASE("verdict rule") {
  TailBound b = TailBound::from_savings("x", 3);
  CHECK(make_check("a", 1250, 10000, b).verdict == Verdict::pass);
  CHECK(make_check("a", 1300, 10000, b).verdict == Verdict::pass);
  CHECK(make_check("a", 1400, 10000, b).verdict == Verdict::fail);
  CHECK(make_check("a", 1251, 10000, b, true).verdict == Verdict::fail);
  CHECK(make_check("a", 1250, 10000, b, true).verdict == Verdict::pass);
  b.asymptotic = true;
  CHECK(make_check("a", 9999, 10000, b).verdict == Verdict::info);
  const auto c = make_check("a", 100, 10000, TailBound::from_savings("y", 1));
  CHECK(c.mc_stderr() == doctest::Approx(std::sqrt(0.01 * 0.99 / 10000)));
  CHECK(to_string(Verdict::info) == "asymptotic-info");
}

TEST_CASE("runs experiment") {
  CHECK(count_runs_exhaustive(4, 4) == 1);
  const auto r = sim_runs(4, 4, 0, 0);
  CHECK(r.primary().empirical() == 1.0 / 16);
  CHECK(r.primary().trials == 16);
  // Exhaustive count against a direct scan of all strings.
  for (unsigned t = 1; t <= 12; ++t) {
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < 4096; ++x) {
      unsigned run = 0;
      bool hit = false;
      for (int i = 0; i < 12; ++i) {
        run = ((x >> i) & 1U) ? run + 1 : 0;
        hit = hit || run >= t;
      }
      count += hit ? 1 : 0;
    }
    CHECK(count_runs_exhaustive(12, t) == count);
    CHECK(has_run(0xF0, 4));
    CHECK_FALSE(has_run(0xEE, 4));
  }
  const auto mc = sim_runs(1024, 20, 20000, 42);
  CHECK(mc.verdict() == Verdict::pass);
}

TEST_CASE("urns experiment") {
  const auto one = sim_urns(1, 0, 0, 0);
  CHECK(one.check("more_than_t").empirical() == 1.0);
  const auto c = count_urns_exhaustive(4, 3);
  CHECK(c.total == 256);
  CHECK(c.at_least_t == 52);
  CHECK(c.more_than_t == 4);
  const auto mc = sim_urns(1024, 9, 20000, 3);
  CHECK(mc.verdict() == Verdict::pass);
}

TEST_CASE("linear probing") {
  Rng rng(1);
  const auto t = linear_probing_trial(1, 4.0, rng);
  CHECK(t.block_size == 1);
  const auto r = sim_linear_probing(500, 4.0, 2.0, 2000, 5);
  CHECK(r.check("unfindable_key").exceed == 0);
  CHECK(r.verdict() == Verdict::pass);
  CHECK(r.stat("t") == 18);
}

TEST_CASE("cuckoo hashing") {
  Rng rng(1);
  const auto t = cuckoo_trial(1, 10, rng);
  CHECK(t.rehashes == 0);
  const auto r = sim_cuckoo(200, 42, 20, 500, 2);
  CHECK(r.primary().bound.asymptotic);
  CHECK(r.verdict() != Verdict::fail);
}

TEST_CASE("two-choice hashing") {
  Rng rng(1);
  CHECK(two_choice_trial(1, 16, rng).max_load == 1);
  const auto r = sim_two_choice(4096, 16, 3, 3, 100, 3);
  CHECK(r.stat("max_max_load") <= r.stat("log_log_n") + 3 + 1);
  CHECK(r.verdict() != Verdict::fail);
}

TEST_CASE("expander") {
  CHECK(expander_single_vertex_probability(100) == doctest::Approx(1 - std::pow(1 - 1e-4, 100)).epsilon(1e-12));
  const std::vector<std::uint32_t> spread{0, 1, 2, 1, 2, 3, 0, 2, 3, 0, 1, 3};
  const auto ok = expansion_violations(4, spread, 2);
  CHECK(std::none_of(ok.begin(), ok.end(), [](bool b) { return b; }));
  CHECK(expansion_violations(4, spread, 3)[3]);
  const std::vector<std::uint32_t> same{0, 0, 0, 1, 2, 3, 0, 2, 3, 0, 1, 3};
  CHECK(expansion_violations(4, same, 1)[1]);
  const auto r = sim_expander(100, 0.05, 3, 2000, 4);
  CHECK(r.check("single_vertex").verdict == Verdict::pass);
}

TEST_CASE("permutation statistics") {
  const std::vector<std::uint64_t> id{1, 2, 3, 4, 5, 6};
  const auto prof = fast_swap_profile(id);
  CHECK(std::accumulate(prof.begin(), prof.end(), std::uint64_t{0}) == 0);
  CHECK(count_records(id) == 6);
  CHECK(bst_height_nodes(id) == 6);  // a path: n nodes, n - 1 edges
  const std::vector<std::uint64_t> mid{4, 2, 6, 1, 3, 5, 7};
  CHECK(bst_height_nodes(mid) == 3);
  CHECK(count_records(mid) == 3);
  CHECK(find_comparisons(id, 1) == 5);
  CHECK(find_comparisons(id, 6) == 15);
  const auto d = inversion_distribution(4);
  CHECK(d == std::vector<std::uint64_t>{1, 3, 5, 6, 5, 3, 1});
  const auto r = sim_permutation_stats(256, 0.1, 3, 9.943483, 500, 9);
  CHECK(r.check("bst_height").exceed == 0);
  CHECK(r.check("inversions_encoding").verdict == Verdict::pass);
}

TEST_CASE("graph experiments") {
  Graph k3(3);
  k3.set_edge(0, 1, true);
  k3.set_edge(1, 2, true);
  CHECK_FALSE(has_triangle(k3));
  k3.set_edge(0, 2, true);
  CHECK(has_triangle(k3));
  Rng rng(2);
  const Graph none = sample_gnp(50, 0.0, rng);
  CHECK(none.edge_count() == 0);
  const Graph full = sample_gnp(30, 1.0, rng);
  CHECK(full.edge_count() == 435);
  double edges = 0;
  for (int i = 0; i < 200; ++i) edges += static_cast<double>(sample_gnp(100, 0.1, rng).edge_count());
  CHECK(edges / 200 == doctest::Approx(495).epsilon(0.03));
  CHECK(sim_ramsey(5, 3, 1, 0, 0).primary().trials == 1024);
  CHECK(sim_triangles(200, 0.2, 1, 2000, 1).verdict() == Verdict::pass);
}

TEST_CASE("percolation") {
  Rng rng(3);
  const auto empty = sample_torus(4, 0.0, rng);
  CHECK(std::none_of(empty.edges.begin(), empty.edges.end(), [](bool b) { return b; }));
  CHECK(find_long_cycle(empty, 3, 1000) == CycleSearch::absent);
  const auto full = sample_torus(4, 1.0, rng);
  CHECK(find_long_cycle(full, 16, 1'000'000) == CycleSearch::found);
  CHECK(find_long_cycle(full, 17, 1'000'000) == CycleSearch::absent);
  CHECK(two_largest_components(full).first == 16);
  const auto r = sim_percolation(8, 0.25, 4, 10'000'000, 1000, 6);
  CHECK(r.verdict() == Verdict::pass);
}

TEST_CASE("reports are deterministic for a fixed seed") {
  for (const auto& info : experiment_ids()) {
    Params p;
    std::uint64_t trials = 50;
    if (info.id == "two-choice") p.set("n", 1024);
    if (info.id == "cuckoo" || info.id == "linear-probing") p.set("n", 200);
    const auto a = run_experiment(info.id, p, trials, 11);
    const auto b = run_experiment(info.id, p, trials, 11);
    CHECK_MESSAGE(report_text(a) == report_text(b), info.id);
  }
  CHECK_THROWS_AS(run_experiment("nope", Params(), 10, 1), std::out_of_range);
  CHECK_THROWS_AS(run_experiment("cuckoo", Params(), 0, 1), std::invalid_argument);
}
