// SPDX-License-Identifier: Apache-2.0
#include "encbound/experiments.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>

#include "encbound/entropy.hpp"

namespace encbound::experiments {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::info:
      return "asymptotic-info";
  }
  return "asymptotic-info";
}

double Check::mc_stderr() const {
  if (exact || trials == 0) return 0.0;
  const double p = empirical();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

Check make_check(std::string name, std::uint64_t exceed, std::uint64_t trials, TailBound bound, bool exact) {
  Check c;
  c.name = std::move(name);
  c.trials = trials;
  c.exceed = exceed;
  c.exact = exact;
  c.bound = std::move(bound);
  if (c.bound.asymptotic) {
    c.verdict = Verdict::info;
  } else if (exact) {
    // Both sides exact: exceed / trials <= probability, no tolerance.
    const bool ok = static_cast<long double>(exceed) <=
                    static_cast<long double>(trials) * static_cast<long double>(c.bound.probability);
    c.verdict = ok ? Verdict::pass : Verdict::fail;
  } else {
    c.verdict = c.empirical() <= c.bound.probability + 3.0 * c.mc_stderr() ? Verdict::pass : Verdict::fail;
  }
  return c;
}

Verdict ExperimentReport::verdict() const {
  bool any_pass = false;
  for (const auto& c : checks) {
    if (c.verdict == Verdict::fail) return Verdict::fail;
    any_pass = any_pass || c.verdict == Verdict::pass;
  }
  return any_pass ? Verdict::pass : Verdict::info;
}

double ExperimentReport::stat(std::string_view name) const {
  for (const auto& [k, v] : stats) {
    if (k == name) return v;
  }
  throw std::out_of_range("no statistic named " + std::string(name));
}

const Check& ExperimentReport::check(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw std::out_of_range("no check named " + std::string(name));
}

unsigned worker_count(std::uint64_t trials) {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("ENCBOUND_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) hw = std::min<unsigned>(hw, static_cast<unsigned>(cap));
  }
  if (trials < hw) hw = static_cast<unsigned>(std::max<std::uint64_t>(trials, 1));
  return hw;
}

void merge_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t i = 0; i < from.size(); ++i) into[i] += from[i];
}

namespace {

struct Counter {
  std::uint64_t exceed = 0;
  std::uint64_t alt = 0;
  std::vector<std::uint64_t> hist;
  void merge(const Counter& o) {
    exceed += o.exceed;
    alt += o.alt;
    merge_counts(hist, o.hist);
  }
};

void bump(std::vector<std::uint64_t>& hist, std::uint64_t value) {
  if (hist.size() <= value) hist.resize(value + 1, 0);
  ++hist[value];
}

// Longest run of ones in an n-bit string stored LSB-first in words.
std::uint64_t longest_run(const std::vector<std::uint64_t>& words, std::uint64_t n) {
  std::uint64_t best = 0;
  std::uint64_t current = 0;
  for (std::size_t w = 0; w < words.size(); ++w) {
    const unsigned bits = static_cast<unsigned>(std::min<std::uint64_t>(64, n - 64 * w));
    const std::uint64_t word = words[w];
    unsigned pos = 0;
    while (pos < bits) {
      const std::uint64_t rest = word >> pos;
      if (rest & 1) {
        const unsigned ones = std::min<unsigned>(static_cast<unsigned>(std::countr_one(rest)), bits - pos);
        current += ones;
        pos += ones;
        best = std::max(best, current);
      } else {
        const unsigned zeros = rest == 0 ? bits - pos : std::min<unsigned>(static_cast<unsigned>(std::countr_zero(rest)), bits - pos);
        current = 0;
        pos += zeros;
      }
    }
  }
  return best;
}

TailBound runs_bound(std::uint64_t n, std::uint64_t t) {
  const double s = static_cast<double>(t) - std::log2(static_cast<double>(n));
  TailBound b = TailBound::from_savings("runs", s);
  b.params = {{"n", static_cast<double>(n)}, {"s", s}};
  b.threshold = static_cast<double>(t);
  return b;
}

// Savings of the urns code at threshold t: t log(t/e) - log n.
TailBound urns_bound(std::uint64_t n, std::uint64_t t) {
  const auto tt = static_cast<double>(t);
  const double gain = t == 0 ? 0.0 : tt * (std::log2(tt) - entropy::kLog2E);
  const double s = gain - std::log2(static_cast<double>(n));
  TailBound b = TailBound::from_savings("urns", s);
  b.params = {{"n", static_cast<double>(n)}, {"s", s}};
  b.threshold = tt;
  return b;
}

}  // namespace

bool has_run(std::uint64_t x, unsigned t) {
  if (t == 0) return true;
  // After the loop, bit i of x is set iff bits i..i+len-1 were all ones.
  unsigned len = 1;
  while (len < t && x != 0) {
    const unsigned step = std::min(len, t - len);
    x &= x >> step;
    len += step;
  }
  return x != 0;
}

std::uint64_t count_runs_exhaustive(unsigned n, unsigned t) {
  if (n > 30) throw std::invalid_argument("exhaustive runs needs n <= 30");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t x = 0; x < total; ++x) count += has_run(x, t) ? 1 : 0;
  return count;
}

ExperimentReport sim_runs(std::uint64_t n, std::uint64_t t, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("runs needs n >= 1");
  ExperimentReport r;
  r.experiment = "runs";
  r.params = {{"n", static_cast<double>(n)}, {"t", static_cast<double>(t)}};
  r.seed = seed;
  const TailBound bound = runs_bound(n, t);
  if (trials == 0) {
    const std::uint64_t exceed = count_runs_exhaustive(static_cast<unsigned>(n), static_cast<unsigned>(t));
    r.trials = std::uint64_t{1} << n;
    r.checks.push_back(make_check("run_at_least_t", exceed, r.trials, bound, true));
    r.stats = {{"exhaustive", 1.0}};
    return r;
  }
  const std::size_t words = (n + 63) / 64;
  auto acc = parallel_trials<Counter>(trials, seed, [&](Rng& rng, std::uint64_t, Counter& c) {
    std::vector<std::uint64_t> x(words);
    for (auto& w : x) w = rng.next();
    const std::uint64_t longest = longest_run(x, n);
    c.exceed += longest >= t ? 1 : 0;
    bump(c.hist, longest);
  });
  r.trials = trials;
  r.checks.push_back(make_check("run_at_least_t", acc.exceed, trials, bound));
  double mean = 0.0;
  for (std::size_t i = 0; i < acc.hist.size(); ++i) mean += static_cast<double>(i * acc.hist[i]);
  r.stats = {{"exhaustive", 0.0}, {"mean_longest_run", mean / static_cast<double>(trials)}};
  r.histograms.push_back({"longest_run", acc.hist});
  return r;
}

UrnCounts count_urns_exhaustive(unsigned n, unsigned t) {
  if (n < 1 || n > 7) throw std::invalid_argument("exhaustive urns needs 1 <= n <= 7");
  UrnCounts out;
  std::vector<unsigned> balls(n, 0);
  std::vector<unsigned> load(n, 0);
  load[0] = n;
  while (true) {
    ++out.total;
    const unsigned top = *std::max_element(load.begin(), load.end());
    out.at_least_t += top >= t ? 1 : 0;
    out.more_than_t += top > t ? 1 : 0;
    // Odometer increment over assignments, keeping loads current.
    std::size_t i = 0;
    while (i < n) {
      --load[balls[i]];
      if (++balls[i] < n) {
        ++load[balls[i]];
        break;
      }
      balls[i] = 0;
      ++load[0];
      ++i;
    }
    if (i == n) break;
  }
  return out;
}

ExperimentReport sim_urns(std::uint64_t n, std::uint64_t t, std::uint64_t trials, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("urns needs n >= 1");
  ExperimentReport r;
  r.experiment = "urns";
  r.params = {{"n", static_cast<double>(n)}, {"t", static_cast<double>(t)}};
  r.seed = seed;
  const TailBound bound = urns_bound(n, t);
  if (trials == 0) {
    const UrnCounts u = count_urns_exhaustive(static_cast<unsigned>(n), static_cast<unsigned>(t));
    r.trials = u.total;
    r.checks.push_back(make_check("more_than_t", u.more_than_t, u.total, bound, true));
    r.checks.push_back(make_check("at_least_t", u.at_least_t, u.total, bound, true));
    r.stats = {{"exhaustive", 1.0}};
    return r;
  }
  auto acc = parallel_trials<Counter>(trials, seed, [&](Rng& rng, std::uint64_t, Counter& c) {
    std::vector<std::uint32_t> load(n, 0);
    std::uint64_t top = 0;
    for (std::uint64_t i = 0; i < n; ++i) top = std::max<std::uint64_t>(top, ++load[rng.below(n)]);
    c.exceed += top > t ? 1 : 0;
    c.alt += top >= t ? 1 : 0;
    bump(c.hist, top);
  });
  r.trials = trials;
  r.checks.push_back(make_check("more_than_t", acc.exceed, trials, bound));
  r.checks.push_back(make_check("at_least_t", acc.alt, trials, bound));
  r.stats = {{"exhaustive", 0.0}};
  r.histograms.push_back({"max_load", acc.hist});
  return r;
}

const std::vector<ExperimentInfo>& experiment_ids() {
  static const std::vector<ExperimentInfo> list = {
      {"runs", "n=1024 (t | s=10) exhaustive=[n<=20]"},
      {"urns", "n=1024 (t | s=3) exhaustive=[n<=6]"},
      {"linear-probing", "n=1000 c=4 s=2"},
      {"cuckoo", "n=1000 maxloop=ceil(4 log n + 10) s=20"},
      {"two-choice", "n=65536 c=16 s=3 d=3"},
      {"expander", "n=100 alpha=0.05 kmax=3"},
      {"permutations", "n=1024 alpha=0.1 c_records=3 c_bst=9.943483"},
      {"ramsey", "n=16 (t | s=2) exhaustive=[n<=5]"},
      {"triangles", "n=200 c=0.2 K=1"},
      {"percolation", "root_n=8 p=0.25 s=4 budget=10000000"},
      {"moser", "k=8 m=32 r=7 s=30"},
  };
  return list;
}

namespace {

std::uint64_t exhaustive_trials(const Params& p, bool default_on, std::uint64_t trials) {
  return p.get("exhaustive", default_on ? 1.0 : 0.0) != 0.0 ? 0 : trials;
}

void require_trials(std::uint64_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
}

}  // namespace

ExperimentReport run_experiment(std::string_view id, const Params& p, std::uint64_t trials, std::uint64_t seed) {
  using Fn = std::function<ExperimentReport(const Params&, std::uint64_t, std::uint64_t)>;
  static const std::vector<std::pair<std::string_view, Fn>> table = {
      {"runs",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         const std::uint64_t n = q.get_count("n", 1024);
         if (n < 2) throw std::invalid_argument("runs needs n >= 2");
         const std::uint64_t t = q.has("t") ? q.require_count("t")
                                            : static_cast<std::uint64_t>(*bounds::runs_threshold(n, q.get("s", 10.0)).threshold);
         tr = exhaustive_trials(q, n <= 20, tr);
         if (tr != 0 || n > 30) require_trials(tr);
         return sim_runs(n, t, tr, sd);
       }},
      {"urns",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         const std::uint64_t n = q.get_count("n", 1024);
         std::uint64_t t = 0;
         if (q.has("t")) {
           t = q.require_count("t");
         } else {
           t = static_cast<std::uint64_t>(*bounds::urns_threshold(n, q.get("s", 3.0)).threshold);
         }
         tr = exhaustive_trials(q, n <= 6, tr);
         if (tr != 0 || n > 7) require_trials(tr);
         return sim_urns(n, t, tr, sd);
       }},
      {"linear-probing",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_linear_probing(q.get_count("n", 1000), q.get("c", 4.0), q.get("s", 2.0), tr, sd);
       }},
      {"cuckoo",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         const std::uint64_t n = q.get_count("n", 1000);
         const auto fallback =
             static_cast<std::uint64_t>(std::ceil(4.0 * std::log2(static_cast<double>(std::max<std::uint64_t>(n, 2))) + 10.0));
         return sim_cuckoo(n, q.get_count("maxloop", fallback), q.get("s", 20.0), tr, sd);
       }},
      {"two-choice",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_two_choice(q.get_count("n", 65536), q.get("c", 16.0), q.get("s", 3.0), q.get("d", 3.0), tr, sd);
       }},
      {"expander",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_expander(q.get_count("n", 100), q.get("alpha", 0.05), q.get_count("kmax", 3), tr, sd);
       }},
      {"permutations",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_permutation_stats(q.get_count("n", 1024), q.get("alpha", 0.1), q.get("c_records", 3.0),
                                      q.get("c_bst", 9.943483), tr, sd);
       }},
      {"ramsey",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         const std::uint64_t n = q.get_count("n", 16);
         const double s = q.get("s", 2.0);
         const std::uint64_t t = q.has("t") ? q.require_count("t")
                                            : static_cast<std::uint64_t>(*bounds::ramsey_threshold(n, s).threshold);
         tr = exhaustive_trials(q, n <= 5, tr);
         if (tr != 0 || n > 6) require_trials(tr);
         return sim_ramsey(n, t, s, tr, sd);
       }},
      {"triangles",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_triangles(q.get_count("n", 200), q.get("c", 0.2), q.get("K", 1.0), tr, sd);
       }},
      {"percolation",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_percolation(q.get_count("root_n", 8), q.get("p", 0.25), q.get("s", 4.0),
                                q.get_count("budget", 10'000'000), tr, sd);
       }},
      {"moser",
       [](const Params& q, std::uint64_t tr, std::uint64_t sd) {
         require_trials(tr);
         return sim_moser(q.get_count("k", 8), q.get_count("m", 32), q.get_count("r", 7), q.get("s", 30.0), tr, sd);
       }},
  };
  for (const auto& [name, fn] : table) {
    if (name != id) continue;
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport r = fn(p, trials, seed);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }
  throw std::out_of_range("unknown experiment id: " + std::string(id));
}

}  // namespace encbound::experiments
