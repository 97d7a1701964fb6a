// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "encbound/experiments.hpp"

namespace encbound::experiments {

namespace {

constexpr std::uint32_t kEmpty = UINT32_MAX;
constexpr std::uint64_t kRehashCap = 50;

struct DisjointSets {
  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> vertices;
  std::vector<std::uint32_t> edges;

  explicit DisjointSets(std::size_t n) : parent(n), vertices(n, 1), edges(n, 0) {
    std::iota(parent.begin(), parent.end(), 0u);
  }
  std::uint32_t find(std::uint32_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  void add_edge(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      if (vertices[a] < vertices[b]) std::swap(a, b);
      parent[b] = a;
      vertices[a] += vertices[b];
      edges[a] += edges[b];
    }
    ++edges[a];
  }
};

// Placeholder bound for checks that only report a frequency.
TailBound info_bound(std::string theorem) {
  TailBound b;
  b.theorem = std::move(theorem);
  b.asymptotic = true;
  return b;
}

struct Tally {
  std::uint64_t a = 0, b = 0, c = 0, d = 0;
  double sum1 = 0.0, sum2 = 0.0;
  std::uint64_t top = 0;
  std::vector<std::uint64_t> hist;
  void merge(const Tally& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    d += o.d;
    sum1 += o.sum1;
    sum2 += o.sum2;
    top = std::max(top, o.top);
    merge_counts(hist, o.hist);
  }
};

void bump(std::vector<std::uint64_t>& hist, std::uint64_t value) {
  if (hist.size() <= value) hist.resize(value + 1, 0);
  ++hist[value];
}

}  // namespace

LinearProbingTrial linear_probing_trial(std::uint64_t n, double c, Rng& rng) {
  if (n < 1 || !(c > 1.0)) throw std::invalid_argument("linear probing needs n >= 1 and c > 1");
  const auto m = static_cast<std::uint64_t>(std::ceil(c * static_cast<double>(n)));
  std::vector<std::uint64_t> h(n);
  for (auto& v : h) v = rng.below(m);
  const std::uint64_t x = rng.below(n);

  std::vector<std::uint32_t> slot(m, kEmpty);
  std::vector<std::uint64_t> pos(n);
  for (std::uint64_t key = 0; key < n; ++key) {
    std::uint64_t i = h[key];
    while (slot[i] != kEmpty) i = i + 1 == m ? 0 : i + 1;
    slot[i] = static_cast<std::uint32_t>(key);
    pos[key] = i;
  }

  LinearProbingTrial out;
  // Every key must be reached from its hash before an empty slot.
  for (std::uint64_t key = 0; key < n && out.all_findable; ++key) {
    std::uint64_t i = h[key];
    while (slot[i] != key) {
      if (slot[i] == kEmpty) {
        out.all_findable = false;
        break;
      }
      i = i + 1 == m ? 0 : i + 1;
    }
  }

  // Maximal occupied interval around x's slot; m > n so it is bounded.
  const std::uint64_t p = pos[x];
  std::uint64_t size = 1;
  for (std::uint64_t i = p == 0 ? m - 1 : p - 1; slot[i] != kEmpty; i = i == 0 ? m - 1 : i - 1) ++size;
  for (std::uint64_t i = p + 1 == m ? 0 : p + 1; slot[i] != kEmpty; i = i + 1 == m ? 0 : i + 1) ++size;
  out.block_size = size;
  out.search_cost = (p + m - h[x]) % m + 1;
  return out;
}

ExperimentReport sim_linear_probing(std::uint64_t n, double c, double s, std::uint64_t trials, std::uint64_t seed) {
  ExperimentReport r;
  r.experiment = "linear-probing";
  r.params = {{"n", static_cast<double>(n)}, {"c", c}, {"s", s}};
  r.trials = trials;
  r.seed = seed;
  const bool in_range = c > std::numbers::e;
  const TailBound bound = in_range ? bounds::linear_probing_threshold(c, s) : info_bound("linear-probing");
  const std::uint64_t t = in_range ? static_cast<std::uint64_t>(*bound.threshold) : 0;

  auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& a) {
    const LinearProbingTrial tr = linear_probing_trial(n, c, rng);
    a.a += in_range && tr.block_size == t ? 1 : 0;
    a.b += tr.all_findable ? 0 : 1;
    a.sum1 += static_cast<double>(tr.search_cost);
    a.sum2 += static_cast<double>(tr.block_size);
    a.top = std::max(a.top, tr.block_size);
    bump(a.hist, tr.block_size);
  });

  r.checks.push_back(make_check("block_size_eq_t", acc.a, trials, bound));
  TailBound never;
  never.theorem = "linear-probing-findable";
  never.probability = 0.0;
  never.savings = INFINITY;
  r.checks.push_back(make_check("unfindable_key", acc.b, trials, never, true));
  const auto tt = static_cast<double>(trials);
  r.stats = {{"t", static_cast<double>(t)},
             {"mean_search_cost", acc.sum1 / tt},
             {"mean_block_size", acc.sum2 / tt},
             {"max_block_size", static_cast<double>(acc.top)}};
  if (in_range) r.stats.emplace_back("search_series_t0_1", bounds::linear_probing_search_series(c, 1.0));
  r.histograms.push_back({"block_size", acc.hist});
  return r;
}

CuckooTrial cuckoo_trial(std::uint64_t n, std::uint64_t maxloop, Rng& rng) {
  if (n < 1) throw std::invalid_argument("cuckoo needs n >= 1");
  const std::uint64_t m = 2 * n;
  std::vector<std::uint64_t> h(n), g(n);
  auto sample = [&] {
    for (std::uint64_t i = 0; i < n; ++i) {
      h[i] = rng.below(m);
      g[i] = rng.below(m);
    }
  };
  sample();

  CuckooTrial out;
  {
    DisjointSets ds(2 * m);
    for (std::uint64_t i = 0; i < n; ++i) ds.add_edge(static_cast<std::uint32_t>(h[i]), static_cast<std::uint32_t>(m + g[i]));
    for (std::uint32_t v = 0; v < 2 * m; ++v) {
      if (ds.find(v) != v) continue;
      out.bicyclic = out.bicyclic || ds.edges[v] > ds.vertices[v];
      out.largest_component_edges = std::max<std::uint64_t>(out.largest_component_edges, ds.edges[v]);
    }
  }

  std::vector<std::uint32_t> a(m, kEmpty), b(m, kEmpty);
  // Insert as in the pseudocode; a step is one probe of A or B.
  auto insert = [&](std::uint32_t x) -> bool {
    if (a[h[x]] == x || b[g[x]] == x) return true;
    std::uint64_t steps = 0;
    for (std::uint64_t it = 0; it < maxloop; ++it) {
      ++steps;
      if (a[h[x]] == kEmpty) {
        a[h[x]] = x;
        out.max_steps = std::max(out.max_steps, steps);
        return true;
      }
      std::swap(x, a[h[x]]);
      ++steps;
      if (b[g[x]] == kEmpty) {
        b[g[x]] = x;
        out.max_steps = std::max(out.max_steps, steps);
        return true;
      }
      std::swap(x, b[g[x]]);
    }
    return false;
  };

  for (std::uint64_t key = 0; key < n; ++key) {
    if (insert(static_cast<std::uint32_t>(key))) continue;
    // Rehash: fresh h and g for every key, then reinsert keys 0..key.
    std::uint64_t consecutive = 0;
    bool rebuilt = false;
    while (!rebuilt) {
      if (++consecutive > kRehashCap) {
        out.capped = true;
        return out;
      }
      ++out.rehashes;
      sample();
      std::fill(a.begin(), a.end(), kEmpty);
      std::fill(b.begin(), b.end(), kEmpty);
      rebuilt = true;
      for (std::uint64_t y = 0; y <= key && rebuilt; ++y) rebuilt = insert(static_cast<std::uint32_t>(y));
    }
  }
  return out;
}

ExperimentReport sim_cuckoo(std::uint64_t n, std::uint64_t maxloop, double s, std::uint64_t trials,
                            std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("cuckoo experiment needs n >= 2");
  ExperimentReport r;
  r.experiment = "cuckoo";
  r.params = {{"n", static_cast<double>(n)}, {"maxloop", static_cast<double>(maxloop)}, {"s", s}};
  r.trials = trials;
  r.seed = seed;
  const TailBound path = bounds::cuckoo_path_threshold(n, s);
  const double step_limit = 2.0 * *path.threshold;

  auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& t) {
    const CuckooTrial tr = cuckoo_trial(n, maxloop, rng);
    t.a += tr.rehashes > 0 ? 1 : 0;
    t.b += tr.bicyclic ? 1 : 0;
    t.c += tr.capped ? 1 : 0;
    t.d += static_cast<double>(tr.max_steps) >= step_limit ? 1 : 0;
    t.sum1 += static_cast<double>(tr.rehashes);
    t.sum2 += static_cast<double>(tr.largest_component_edges);
    t.top = std::max(t.top, tr.max_steps);
    bump(t.hist, tr.max_steps);
  });

  const auto nn = static_cast<double>(n);
  const auto tt = static_cast<double>(trials);
  const double rehash_rate = static_cast<double>(acc.a) / tt;
  const double bicyclic_rate = static_cast<double>(acc.b) / tt;
  r.checks.push_back(make_check("rehash", acc.a, trials, bounds::cuckoo_failure(n, std::max(1.0, rehash_rate * nn))));
  r.checks.push_back(make_check("bicyclic_graph", acc.b, trials, bounds::cuckoo_failure(n)));
  r.checks.push_back(make_check("steps_at_least_2t", acc.d, trials, path));
  r.stats = {{"rehash_rate", rehash_rate},
             {"fitted_K2", rehash_rate * nn},
             {"bicyclic_rate", bicyclic_rate},
             {"fitted_K2_graph", bicyclic_rate * nn},
             {"mean_rehashes", acc.sum1 / tt},
             {"capped", static_cast<double>(acc.c)},
             {"max_steps", static_cast<double>(acc.top)},
             {"step_limit", step_limit},
             {"mean_largest_component_edges", acc.sum2 / tt}};
  r.histograms.push_back({"max_steps", acc.hist});
  return r;
}

TwoChoiceTrial two_choice_trial(std::uint64_t n, double c, Rng& rng) {
  if (n < 1 || !(c > 0.0)) throw std::invalid_argument("2-choice needs n >= 1 and c > 0");
  const auto m = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(c * static_cast<double>(n))));
  std::vector<std::uint32_t> load(m, 0);
  DisjointSets ds(m);
  TwoChoiceTrial out;
  for (std::uint64_t x = 0; x < n; ++x) {
    const std::uint64_t hx = rng.below(m);
    const std::uint64_t gx = rng.below(m);
    const std::uint64_t u = load[gx] < load[hx] ? gx : hx;
    out.max_load = std::max<std::uint64_t>(out.max_load, ++load[u]);
    ds.add_edge(static_cast<std::uint32_t>(hx), static_cast<std::uint32_t>(gx));
  }
  out.max_excess = INT64_MIN;
  for (std::uint32_t v = 0; v < m; ++v) {
    if (ds.find(v) != v) continue;
    out.largest_component = std::max<std::uint64_t>(out.largest_component, ds.vertices[v]);
    out.max_excess = std::max<std::int64_t>(out.max_excess, std::int64_t{ds.edges[v]} - std::int64_t{ds.vertices[v]});
  }
  return out;
}

ExperimentReport sim_two_choice(std::uint64_t n, double c, double s, double d, std::uint64_t trials,
                                std::uint64_t seed) {
  ExperimentReport r;
  r.experiment = "two-choice";
  r.params = {{"n", static_cast<double>(n)}, {"c", c}, {"s", s}, {"d", d}};
  r.trials = trials;
  r.seed = seed;
  const bool load_bound = n >= 4;
  const bool component_bound = n >= 2 && c > 8.0;
  const TailBound maxload = load_bound ? bounds::two_choice_maxload(n, d) : info_bound("two-choice-maxload");
  const TailBound component =
      component_bound ? bounds::two_choice_component(n, c, s) : info_bound("two-choice-component");
  const double load_limit = load_bound ? *maxload.threshold : INFINITY;
  const double comp_limit = component_bound ? *component.threshold : INFINITY;

  auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& t) {
    const TwoChoiceTrial tr = two_choice_trial(n, c, rng);
    t.a += static_cast<double>(tr.max_load) > load_limit ? 1 : 0;
    t.b += static_cast<double>(tr.largest_component) > comp_limit ? 1 : 0;
    t.c += tr.max_excess > 0 ? 1 : 0;
    t.sum1 += static_cast<double>(tr.max_load);
    t.sum2 += static_cast<double>(tr.largest_component);
    t.top = std::max(t.top, tr.max_load);
    bump(t.hist, tr.max_load);
  });

  const auto tt = static_cast<double>(trials);
  const double loglog = n >= 4 ? std::log2(std::log2(static_cast<double>(n))) : 0.0;
  r.checks.push_back(make_check("max_load_exceeds", acc.a, trials, maxload));
  r.checks.push_back(make_check("component_exceeds", acc.b, trials, component));
  r.stats = {{"mean_max_load", acc.sum1 / tt},
             {"max_max_load", static_cast<double>(acc.top)},
             {"log_log_n", loglog},
             {"fitted_d", static_cast<double>(acc.top) - loglog},
             {"mean_largest_component", acc.sum2 / tt},
             {"component_threshold", comp_limit},
             {"excess_rate", static_cast<double>(acc.c) / tt}};
  r.histograms.push_back({"max_load", acc.hist});
  return r;
}

}  // namespace encbound::experiments
