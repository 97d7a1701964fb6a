// SPDX-License-Identifier: Apache-2.0
#pragma once

// Simulators for the random processes behind each bound, and the report type
// that compares their exceedance frequencies with the bounds.

#include <cstdint>
#include <exception>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "encbound/bounds.hpp"
#include "encbound/graph.hpp"
#include "encbound/ledger.hpp"
#include "encbound/params.hpp"
#include "encbound/rng.hpp"

namespace encbound::experiments {

enum class Verdict { pass, fail, info };
std::string_view to_string(Verdict v);

/// One comparison of an exceedance count against a bound.
struct Check {
  std::string name;
  std::uint64_t trials = 0;
  std::uint64_t exceed = 0;
  /// Exhaustive enumeration: the frequency is an exact probability and is
  /// compared with zero tolerance.
  bool exact = false;
  TailBound bound;
  Verdict verdict = Verdict::info;

  double empirical() const { return trials == 0 ? 0.0 : static_cast<double>(exceed) / static_cast<double>(trials); }
  /// sqrt(p(1-p)/trials); zero for exact checks.
  double mc_stderr() const;
};

/// pass iff empirical <= bound + 3 stderr (exact: empirical <= bound);
/// info whenever the bound is asymptotic.
Check make_check(std::string name, std::uint64_t exceed, std::uint64_t trials, TailBound bound, bool exact = false);

struct Histogram {
  std::string name;
  std::vector<std::uint64_t> counts;
};

struct ExperimentReport {
  std::string experiment;
  NamedValues params;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// The first entry is the headline check.
  std::vector<Check> checks;
  NamedValues stats;
  std::vector<Histogram> histograms;
  double wall_ms = 0.0;

  const Check& primary() const { return checks.front(); }
  /// fail if any check fails, else pass if any check passes, else info.
  Verdict verdict() const;
  double stat(std::string_view name) const;
  const Check& check(std::string_view name) const;
};

/// Worker threads for a batch: hardware concurrency capped by
/// ENCBOUND_THREADS and by the trial count.
unsigned worker_count(std::uint64_t trials);

/// Runs fn(rng, trial, acc) for every trial with a per-trial stream and a
/// per-worker accumulator, then merges accumulators. Acc::merge must be
/// commutative so results do not depend on the thread count. A nonzero
/// `threads` overrides worker_count.
template <class Acc, class Fn>
Acc parallel_trials(std::uint64_t trials, std::uint64_t seed, Fn&& fn, unsigned threads = 0) {
  const unsigned workers = threads != 0 ? threads : worker_count(trials);
  std::vector<Acc> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned id) {
    try {
      const std::uint64_t begin = trials * id / workers;
      const std::uint64_t end = trials * (id + 1) / workers;
      for (std::uint64_t i = begin; i < end; ++i) {
        Rng rng = Rng::stream(seed, i);
        fn(rng, i, parts[id]);
      }
    } catch (...) {
      errors[id] = std::current_exception();
    }
  };
  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < workers; ++id) pool.emplace_back(work, id);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  Acc total;
  for (auto& p : parts) total.merge(p);
  return total;
}

/// Element-wise sum that grows the destination as needed.
void merge_counts(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from);

// Runs of ones

/// Exceedance: some run of >= t ones. Exhaustive when trials == 0 (n <= 30).
ExperimentReport sim_runs(std::uint64_t n, std::uint64_t t, std::uint64_t trials, std::uint64_t seed);
bool has_run(std::uint64_t x, unsigned t);
/// Number of n-bit strings with a run of >= t ones, by enumeration.
std::uint64_t count_runs_exhaustive(unsigned n, unsigned t);

// Balls in urns

/// Exceedance: some urn with more than t balls. Exhaustive when trials == 0 (n <= 7).
ExperimentReport sim_urns(std::uint64_t n, std::uint64_t t, std::uint64_t trials, std::uint64_t seed);
struct UrnCounts {
  std::uint64_t total = 0;
  std::uint64_t at_least_t = 0;
  std::uint64_t more_than_t = 0;
};
UrnCounts count_urns_exhaustive(unsigned n, unsigned t);

// Hashing

struct LinearProbingTrial {
  std::uint64_t block_size = 0;
  std::uint64_t search_cost = 0;
  bool all_findable = true;
};
/// One table of n keys in ceil(cn) slots; x is the designated key.
LinearProbingTrial linear_probing_trial(std::uint64_t n, double c, Rng& rng);
ExperimentReport sim_linear_probing(std::uint64_t n, double c, double s, std::uint64_t trials, std::uint64_t seed);

struct CuckooTrial {
  std::uint64_t rehashes = 0;
  std::uint64_t max_steps = 0;  // longest successful insertion
  bool capped = false;          // 50 consecutive rehashes
  bool bicyclic = false;        // initial cuckoo graph has a component with edges > vertices
  std::uint64_t largest_component_edges = 0;
};
CuckooTrial cuckoo_trial(std::uint64_t n, std::uint64_t maxloop, Rng& rng);
ExperimentReport sim_cuckoo(std::uint64_t n, std::uint64_t maxloop, double s, std::uint64_t trials,
                            std::uint64_t seed);

struct TwoChoiceTrial {
  std::uint64_t max_load = 0;
  std::uint64_t largest_component = 0;
  std::int64_t max_excess = 0;  // max over components of edges - vertices
};
TwoChoiceTrial two_choice_trial(std::uint64_t n, double c, Rng& rng);
ExperimentReport sim_two_choice(std::uint64_t n, double c, double s, double d, std::uint64_t trials,
                                std::uint64_t seed);

// Expanders

/// Left vertex i has neighbours nbr[3i..3i+2] in B (with repetition).
std::vector<std::uint32_t> sample_left_regular(std::uint64_t n, Rng& rng);
/// Per k in 1..kmax, whether some A' of size k has |N(A')| < 3k/2.
std::vector<bool> expansion_violations(std::uint64_t n, const std::vector<std::uint32_t>& nbr, std::uint64_t kmax);
/// 1 - (1 - 1/n^2)^n: some left vertex has all three edges on one vertex.
double expander_single_vertex_probability(std::uint64_t n);
ExperimentReport sim_expander(std::uint64_t n, double alpha, std::uint64_t kmax, std::uint64_t trials,
                              std::uint64_t seed);

// Permutations

std::vector<std::uint64_t> random_permutation(std::uint64_t n, Rng& rng);
/// Swap profile by counting earlier larger elements with a Fenwick tree.
std::vector<std::uint64_t> fast_swap_profile(std::span<const std::uint64_t> sigma);
std::uint64_t count_records(std::span<const std::uint64_t> sigma);
/// Nodes on the longest root-to-leaf path of the sequential-insertion BST.
std::uint64_t bst_height_nodes(std::span<const std::uint64_t> sigma);
/// Comparisons made by Find(k, sigma) with the n-1 comparison Partition.
std::uint64_t find_comparisons(std::span<const std::uint64_t> sigma, std::uint64_t k);
/// Number of permutations of size n with exactly m inversions, m = 0..C(n,2).
std::vector<std::uint64_t> inversion_distribution(unsigned n);
ExperimentReport sim_permutation_stats(std::uint64_t n, double alpha, double c_records, double c_bst,
                                       std::uint64_t trials, std::uint64_t seed);

// Random graphs

/// Exceedance: clique or independent set of size t in G(n, 1/2), n <= 24.
/// Exhaustive over all graphs when trials == 0 (n <= 6).
ExperimentReport sim_ramsey(std::uint64_t n, std::uint64_t t, double s, std::uint64_t trials, std::uint64_t seed);
Graph sample_gnp(std::uint64_t n, double p, Rng& rng);
bool has_triangle(const Graph& g);
ExperimentReport sim_triangles(std::uint64_t n, double c, double k, std::uint64_t trials, std::uint64_t seed);

// Torus percolation

/// Edge e = 2v + dir joins v = (i, j) to (i+1, j) for dir 0 and (i, j+1) for dir 1.
struct TorusSample {
  std::uint64_t root_n = 0;
  std::vector<bool> edges;
};
TorusSample sample_torus(std::uint64_t root_n, double p, Rng& rng);
enum class CycleSearch { found, absent, inconclusive };
CycleSearch find_long_cycle(const TorusSample& g, std::uint64_t min_length, std::uint64_t node_budget);
/// Sizes of the largest and second-largest components.
std::pair<std::uint64_t, std::uint64_t> two_largest_components(const TorusSample& g);
ExperimentReport sim_percolation(std::uint64_t root_n, double p, double s, std::uint64_t node_budget,
                                 std::uint64_t trials, std::uint64_t seed);

// Moser fixing

ExperimentReport sim_moser(std::uint64_t k, std::uint64_t m, std::uint64_t r, double s, std::uint64_t trials,
                           std::uint64_t seed);

// Registry

struct ExperimentInfo {
  std::string id;
  std::string params;
};
const std::vector<ExperimentInfo>& experiment_ids();
/// Looks up an experiment; trials and seed come from the caller.
ExperimentReport run_experiment(std::string_view id, const Params& params, std::uint64_t trials,
                                std::uint64_t seed);

}  // namespace encbound::experiments
