// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "encbound/experiments.hpp"
#include "encbound/kernels.hpp"

namespace encbound::experiments {

namespace {

struct Tally {
  std::uint64_t a = 0, b = 0, c = 0;
  double sum1 = 0.0, sum2 = 0.0;
  std::vector<std::uint64_t> hist;
  void merge(const Tally& o) {
    a += o.a;
    b += o.b;
    c += o.c;
    sum1 += o.sum1;
    sum2 += o.sum2;
    merge_counts(hist, o.hist);
  }
};

void bump(std::vector<std::uint64_t>& hist, std::uint64_t value) {
  if (hist.size() <= value) hist.resize(value + 1, 0);
  ++hist[value];
}

TailBound info_bound(std::string theorem) {
  TailBound b;
  b.theorem = std::move(theorem);
  b.asymptotic = true;
  return b;
}

TailBound ramsey_code_bound(std::uint64_t n, std::uint64_t t) {
  TailBound b = TailBound::from_savings("ramsey-code", bounds::ramsey_savings(n, static_cast<double>(t)));
  b.params = {{"n", static_cast<double>(n)}, {"t", static_cast<double>(t)}};
  b.threshold = static_cast<double>(t);
  return b;
}

}  // namespace

// Ramsey

ExperimentReport sim_ramsey(std::uint64_t n, std::uint64_t t, double s, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1 || n > 24) throw std::invalid_argument("ramsey experiment needs 1 <= n <= 24");
  ExperimentReport r;
  r.experiment = "ramsey";
  r.params = {{"n", static_cast<double>(n)}, {"t", static_cast<double>(t)}, {"s", s}};
  r.seed = seed;
  const TailBound code = ramsey_code_bound(n, t);
  // The theorem's 2^-s applies to every t at or above its threshold.
  TailBound theorem = code;
  if (n >= 3 && s >= 1.0) {
    TailBound th = bounds::ramsey_threshold(n, s);
    if (static_cast<double>(t) >= *th.threshold) theorem = th;
  }

  std::uint64_t exceed = 0;
  std::uint64_t cliques = 0;
  const bool exact = trials == 0;
  if (exact) {
    if (n > 6) throw std::invalid_argument("exhaustive ramsey needs n <= 6");
    const std::uint64_t pairs = pair_count(n);
    r.trials = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < r.trials; ++mask) {
      Graph g(n);
      std::size_t k = 0;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v, ++k) {
          if ((mask >> k) & 1U) g.set_edge(u, v, true);
        }
      }
      const auto found = find_homogeneous_set(g, t);
      exceed += found ? 1 : 0;
      cliques += found && found->clique ? 1 : 0;
    }
  } else {
    r.trials = trials;
    auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& a) {
      const Graph g = sample_gnp(n, 0.5, rng);
      const auto found = find_homogeneous_set(g, t);
      a.a += found ? 1 : 0;
      a.b += found && found->clique ? 1 : 0;
      bump(a.hist, max_clique_size(g));
    });
    exceed = acc.a;
    cliques = acc.b;
    r.histograms.push_back({"max_clique", acc.hist});
  }
  r.checks.push_back(make_check("homogeneous_set", exceed, r.trials, theorem, exact));
  r.checks.push_back(make_check("code_savings", exceed, r.trials, code, exact));
  r.stats = {{"exhaustive", exact ? 1.0 : 0.0},
             {"clique_found", static_cast<double>(cliques)},
             {"code_savings", code.savings}};
  return r;
}

Graph sample_gnp(std::uint64_t n, double p, Rng& rng) {
  Graph g(n);
  if (n < 2 || p <= 0.0) return g;
  if (p >= 1.0) return Graph::complete(n);
  if (p == 0.5) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = u + 1; v < n; ++v) {
        if (rng.coin()) g.set_edge(u, v, true);
      }
    }
    return g;
  }
  // Geometric skips over the row-major pair order.
  const double log_q = std::log1p(-p);
  const std::uint64_t pairs = pair_count(n);
  std::uint64_t u = 0;
  std::uint64_t row_start = 0;
  std::uint64_t idx = 0;
  bool first = true;
  while (true) {
    const double skip = std::floor(std::log1p(-rng.uniform01()) / log_q);
    if (skip >= static_cast<double>(pairs)) break;
    idx += static_cast<std::uint64_t>(skip) + (first ? 0 : 1);
    first = false;
    if (idx >= pairs) break;
    while (idx >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    g.set_edge(u, u + 1 + (idx - row_start), true);
  }
  return g;
}

bool has_triangle(const Graph& g) {
  const auto& k = kernels::active();
  const std::size_t n = g.vertex_count();
  const std::size_t words = g.words_per_row();
  for (std::size_t u = 0; u < n; ++u) {
    const auto ru = g.row(u);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = ru[w];
      if (w == u / 64) bits &= ~((std::uint64_t{2} << (u % 64)) - 1);  // neighbours v > u
      else if (w < u / 64) bits = 0;
      while (bits != 0) {
        const std::size_t v = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        if (k.any_and(ru.data(), g.row(v).data(), words)) return true;
      }
    }
  }
  return false;
}

ExperimentReport sim_triangles(std::uint64_t n, double c, double k, std::uint64_t trials, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("triangles experiment needs n >= 3");
  ExperimentReport r;
  r.experiment = "triangles";
  r.params = {{"n", static_cast<double>(n)}, {"c", c}, {"K", k}};
  r.trials = trials;
  r.seed = seed;
  const double p = c / static_cast<double>(n);
  auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& a) {
    const Graph g = sample_gnp(n, p, rng);
    a.a += has_triangle(g) ? 1 : 0;
    a.sum1 += static_cast<double>(g.edge_count());
  });
  const std::uint64_t free = trials - acc.a;
  const double free_rate = static_cast<double>(free) / static_cast<double>(trials);
  const double c3 = c * c * c;
  r.checks.push_back(make_check("triangle_exists", acc.a, trials, bounds::triangles_down(c)));
  r.checks.push_back(make_check("triangle_free", free, trials, bounds::triangles_up(n, c, k)));
  r.stats = {{"triangle_free_rate", free_rate},
             {"lower_no_triangle", std::max(0.0, 1.0 - c3)},
             {"fitted_K", free_rate > 0.0 ? -std::log2(free_rate) / c3 : INFINITY},
             {"mean_edges", acc.sum1 / static_cast<double>(trials)}};
  return r;
}

// Expanders

std::vector<std::uint32_t> sample_left_regular(std::uint64_t n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("expander needs n >= 1");
  std::vector<std::uint32_t> nbr(3 * n);
  for (auto& v : nbr) v = static_cast<std::uint32_t>(rng.below(n));
  return nbr;
}

namespace {

struct ExpansionSearch {
  const kernels::KernelTable& k;
  std::size_t words;
  std::uint64_t n;
  std::uint64_t kmax;
  const std::vector<std::uint64_t>& single;  // neighbourhood bitset of each left vertex
  std::vector<std::vector<std::uint64_t>> stack;
  std::vector<bool> found;

  // Sets grow in increasing vertex order; a set is extended only while its
  // neighbourhood is small enough for some larger size to violate.
  void visit(std::uint64_t next, std::uint64_t size) {
    const auto& cur = stack[size];
    for (std::uint64_t v = next; v < n; ++v) {
      auto& grown = stack[size + 1];
      std::copy(cur.begin(), cur.end(), grown.begin());
      k.or_into(grown.data(), single.data() + v * words, words);
      const std::size_t reach = k.popcount(grown.data(), words);
      if (2 * reach < 3 * (size + 1)) found[size + 1] = true;
      if (size + 1 < kmax && 2 * reach < 3 * kmax) visit(v + 1, size + 1);
    }
  }
};

}  // namespace

std::vector<bool> expansion_violations(std::uint64_t n, const std::vector<std::uint32_t>& nbr, std::uint64_t kmax) {
  if (nbr.size() != 3 * n) throw std::invalid_argument("expected 3 neighbours per left vertex");
  kmax = std::min(kmax, n);
  const std::size_t words = (n + 63) / 64;
  std::vector<std::uint64_t> single(n * words, 0);
  for (std::uint64_t v = 0; v < n; ++v) {
    for (int j = 0; j < 3; ++j) {
      const std::uint32_t b = nbr[3 * v + static_cast<std::uint64_t>(j)];
      single[v * words + b / 64] |= std::uint64_t{1} << (b % 64);
    }
  }
  ExpansionSearch search{kernels::active(), words, n, kmax, single, {}, std::vector<bool>(kmax + 1, false)};
  search.stack.assign(kmax + 1, std::vector<std::uint64_t>(words, 0));
  if (kmax > 0) search.visit(0, 0);
  return search.found;
}

double expander_single_vertex_probability(std::uint64_t n) {
  const auto nn = static_cast<double>(n);
  return -std::expm1(nn * std::log1p(-1.0 / (nn * nn)));
}

ExperimentReport sim_expander(std::uint64_t n, double alpha, std::uint64_t kmax, std::uint64_t trials,
                              std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("expander experiment needs n >= 2");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::invalid_argument("expander needs 0 < alpha <= 1");
  ExperimentReport r;
  r.experiment = "expander";
  const std::uint64_t limit =
      std::min<std::uint64_t>(kmax, static_cast<std::uint64_t>(std::floor(alpha * static_cast<double>(n))));
  r.params = {{"n", static_cast<double>(n)}, {"alpha", alpha}, {"kmax", static_cast<double>(kmax)}};
  r.trials = trials;
  r.seed = seed;

  const std::uint64_t search_to = std::max<std::uint64_t>(limit, 1);
  auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& a) {
    const auto nbr = sample_left_regular(n, rng);
    const auto bad = expansion_violations(n, nbr, search_to);
    bool any = false;
    for (std::uint64_t k = 1; k <= limit; ++k) any = any || bad[k];
    a.a += any ? 1 : 0;
    a.b += bad[1] ? 1 : 0;
  });

  double total = 0.0;
  for (std::uint64_t k = 1; k <= limit; ++k) total += bounds::expander_savings(n, k).probability;
  TailBound sum = limit == 0 ? TailBound::from_savings("expander", INFINITY)
                             : TailBound::from_log2_probability("expander", std::log2(std::min(1.0, total)));
  sum.params = {{"n", static_cast<double>(n)}, {"kmax", static_cast<double>(limit)}};
  sum.asymptotic = true;
  r.checks.push_back(make_check("non_expanding", acc.a, trials, sum));

  // Exact single-vertex probability; two-sided 3 sigma agreement.
  const double p1 = expander_single_vertex_probability(n);
  TailBound oracle;
  oracle.theorem = "expander-single-vertex";
  oracle.probability = p1;
  oracle.savings = -std::log2(p1);
  Check single = make_check("single_vertex", acc.b, trials, oracle);
  const double sigma = std::sqrt(p1 * (1.0 - p1) / static_cast<double>(trials));
  const double gap = std::abs(single.empirical() - p1);
  single.verdict = gap <= 3.0 * sigma ? Verdict::pass : Verdict::fail;
  r.checks.push_back(single);
  r.stats = {{"k_limit", static_cast<double>(limit)},
             {"single_vertex_oracle", p1},
             {"single_vertex_sigma", sigma},
             {"single_vertex_z", sigma > 0.0 ? gap / sigma : 0.0}};
  return r;
}

// Torus percolation

TorusSample sample_torus(std::uint64_t root_n, double p, Rng& rng) {
  if (root_n < 2) throw std::invalid_argument("torus needs root_n >= 2");
  TorusSample g;
  g.root_n = root_n;
  g.edges.resize(2 * root_n * root_n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) g.edges[e] = rng.bernoulli(p);
  return g;
}

namespace {

struct Incidence {
  std::uint64_t to;
  std::uint64_t edge;
};

std::vector<std::vector<Incidence>> adjacency(const TorusSample& g) {
  const std::uint64_t r = g.root_n;
  std::vector<std::vector<Incidence>> adj(r * r);
  for (std::uint64_t v = 0; v < r * r; ++v) {
    const std::uint64_t i = v / r;
    const std::uint64_t j = v % r;
    const std::uint64_t down = ((i + 1) % r) * r + j;
    const std::uint64_t right = i * r + (j + 1) % r;
    if (g.edges[2 * v]) {
      adj[v].push_back({down, 2 * v});
      adj[down].push_back({v, 2 * v});
    }
    if (g.edges[2 * v + 1]) {
      adj[v].push_back({right, 2 * v + 1});
      adj[right].push_back({v, 2 * v + 1});
    }
  }
  return adj;
}

struct CycleDfs {
  const std::vector<std::vector<Incidence>>& adj;
  const std::vector<bool>& alive;
  std::uint64_t start;
  std::uint64_t first_edge = UINT64_MAX;
  std::uint64_t min_length;
  std::uint64_t budget;
  std::uint64_t used = 0;
  std::vector<bool> on_path;

  // 1 found, 0 not found, -1 budget exhausted.
  int go(std::uint64_t u, std::uint64_t length, std::uint64_t via) {
    if (++used > budget) return -1;
    for (const auto& [w, e] : adj[u]) {
      if (e == via) continue;
      if (w == start) {
        if (length + 1 >= min_length && e != first_edge) return 1;
        continue;
      }
      if (w < start || !alive[w] || on_path[w]) continue;
      if (length == 0) first_edge = e;
      on_path[w] = true;
      const int res = go(w, length + 1, e);
      on_path[w] = false;
      if (res != 0) return res;
    }
    return 0;
  }
};

}  // namespace

CycleSearch find_long_cycle(const TorusSample& g, std::uint64_t min_length, std::uint64_t node_budget) {
  const auto adj = adjacency(g);
  const std::uint64_t n = adj.size();
  // Vertices outside the 2-core lie on no cycle.
  std::vector<std::uint64_t> degree(n);
  std::vector<bool> alive(n, true);
  std::vector<std::uint64_t> queue;
  for (std::uint64_t v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] < 2) queue.push_back(v);
  }
  while (!queue.empty()) {
    const std::uint64_t v = queue.back();
    queue.pop_back();
    if (!alive[v]) continue;
    alive[v] = false;
    for (const auto& inc : adj[v]) {
      if (alive[inc.to] && --degree[inc.to] < 2) queue.push_back(inc.to);
    }
  }
  const std::uint64_t core = static_cast<std::uint64_t>(std::count(alive.begin(), alive.end(), true));
  if (core < std::max<std::uint64_t>(min_length, 2)) return CycleSearch::absent;

  std::uint64_t spent = 0;
  for (std::uint64_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    CycleDfs dfs{adj, alive, v, UINT64_MAX, min_length, node_budget - spent, 0, std::vector<bool>(n, false)};
    dfs.on_path[v] = true;
    const int res = dfs.go(v, 0, UINT64_MAX);
    spent += std::min(dfs.used, node_budget - spent);
    if (res == 1) return CycleSearch::found;
    if (res == -1 || spent >= node_budget) return CycleSearch::inconclusive;
  }
  return CycleSearch::absent;
}

std::pair<std::uint64_t, std::uint64_t> two_largest_components(const TorusSample& g) {
  const auto adj = adjacency(g);
  const std::uint64_t n = adj.size();
  std::vector<bool> seen(n, false);
  std::vector<std::uint64_t> stack;
  std::uint64_t first = 0, second = 0;
  for (std::uint64_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    seen[s] = true;
    stack.push_back(s);
    std::uint64_t size = 0;
    while (!stack.empty()) {
      const std::uint64_t u = stack.back();
      stack.pop_back();
      ++size;
      for (const auto& inc : adj[u]) {
        if (!seen[inc.to]) {
          seen[inc.to] = true;
          stack.push_back(inc.to);
        }
      }
    }
    if (size > first) {
      second = first;
      first = size;
    } else if (size > second) {
      second = size;
    }
  }
  return {first, second};
}

ExperimentReport sim_percolation(std::uint64_t root_n, double p, double s, std::uint64_t node_budget,
                                 std::uint64_t trials, std::uint64_t seed) {
  if (root_n < 2) throw std::invalid_argument("percolation needs root_n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("percolation needs 0 <= p <= 1");
  ExperimentReport r;
  r.experiment = "percolation";
  r.params = {{"root_n", static_cast<double>(root_n)}, {"p", p}, {"s", s}};
  r.trials = trials;
  r.seed = seed;
  const std::uint64_t n = root_n * root_n;
  const bool cycle_bound = p > 0.0 && p < 1.0 / 3.0;
  const TailBound bound = cycle_bound ? bounds::percolation_cycle_tail(n, p, s) : info_bound("percolation");
  const std::uint64_t length = cycle_bound ? static_cast<std::uint64_t>(std::ceil(*bound.threshold)) : 0;

  auto acc = parallel_trials<Tally>(trials, seed, [&](Rng& rng, std::uint64_t, Tally& a) {
    const TorusSample g = sample_torus(root_n, p, rng);
    if (cycle_bound) {
      const CycleSearch res = find_long_cycle(g, length, node_budget);
      a.a += res == CycleSearch::absent ? 0 : 1;
      a.b += res == CycleSearch::inconclusive ? 1 : 0;
    }
    const auto [first, second] = two_largest_components(g);
    a.sum1 += static_cast<double>(first);
    a.sum2 += static_cast<double>(second);
    bump(a.hist, second);
  });

  r.checks.push_back(make_check("long_cycle", acc.a, trials, bound));
  const double log_n = std::log2(static_cast<double>(n));
  r.stats = {{"cycle_length", static_cast<double>(length)},
             {"inconclusive", static_cast<double>(acc.b)},
             {"mean_largest_component", acc.sum1 / static_cast<double>(trials)},
             {"mean_second_component", acc.sum2 / static_cast<double>(trials)},
             {"log2_n_squared", log_n * log_n}};
  r.histograms.push_back({"second_component", acc.hist});
  return r;
}

}  // namespace encbound::experiments
