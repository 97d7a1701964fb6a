// SPDX-License-Identifier: Apache-2.0
#include "encbound/ksat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "encbound/bounds.hpp"
#include "encbound/experiments.hpp"

namespace encbound::ksat {

void CnfFormula::validate() const {
  for (const auto& clause : clauses) {
    if (clause.size() != k) throw std::invalid_argument("clause does not have k literals");
    for (std::size_t a = 0; a < clause.size(); ++a) {
      if (clause[a].var >= num_vars) throw std::invalid_argument("literal variable out of range");
      for (std::size_t b = a + 1; b < clause.size(); ++b) {
        if (clause[a].var == clause[b].var) throw std::invalid_argument("clause repeats a variable");
      }
    }
  }
}

std::vector<std::vector<std::uint32_t>> CnfFormula::neighbourhoods() const {
  std::vector<std::vector<std::uint32_t>> by_var(num_vars);
  for (std::uint32_t i = 0; i < clauses.size(); ++i) {
    for (const auto& lit : clauses[i]) by_var[lit.var].push_back(i);
  }
  std::vector<std::vector<std::uint32_t>> out(clauses.size());
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    auto& list = out[i];
    for (const auto& lit : clauses[i]) list.insert(list.end(), by_var[lit.var].begin(), by_var[lit.var].end());
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

std::uint64_t CnfFormula::intersection_degree() const {
  std::uint64_t best = 0;
  for (const auto& list : neighbourhoods()) best = std::max<std::uint64_t>(best, list.size() - 1);
  return best;
}

bool CnfFormula::clause_satisfied(std::size_t i, const std::vector<bool>& assignment) const {
  for (const auto& lit : clauses[i]) {
    if (assignment[lit.var] != lit.negated) return true;
  }
  return false;
}

bool CnfFormula::satisfied(const std::vector<bool>& assignment) const {
  if (assignment.size() != num_vars) return false;
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    if (!clause_satisfied(i, assignment)) return false;
  }
  return true;
}

std::uint64_t window_stride(std::uint64_t k, std::uint64_t r) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (std::uint64_t stride = 1; stride < k; ++stride) {
    if (2 * ((k + stride - 1) / stride - 1) <= r) return stride;
  }
  return k;
}

CnfFormula gen_bounded_overlap_cnf(std::uint64_t k, std::uint64_t m, std::uint64_t r, Rng& rng,
                                   std::optional<std::uint64_t> max_vars) {
  if (k < 4 || k > 63) throw std::invalid_argument("generator needs 4 <= k <= 63");
  if (!bounds::moser_precondition(k, r)) throw std::invalid_argument("generator needs r < 2^(k-3)");
  if (m < 1) throw std::invalid_argument("generator needs m >= 1");
  const std::uint64_t stride = window_stride(k, r);
  const std::uint64_t n = (m - 1) * stride + k;
  if (max_vars && n > *max_vars) {
    throw std::invalid_argument("(k, m, r) needs " + std::to_string(n) + " variables, above the limit of " +
                                std::to_string(*max_vars));
  }
  CnfFormula phi;
  phi.num_vars = n;
  phi.k = k;
  phi.clauses.resize(m);
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j < k; ++j) {
      phi.clauses[i].push_back({static_cast<std::uint32_t>(i * stride + j), rng.coin()});
    }
  }
  if (phi.intersection_degree() > r) throw std::logic_error("generated formula exceeds the overlap bound");
  return phi;
}

SolveResult moser_solve(const CnfFormula& phi, Rng& rng, std::uint64_t fix_cap) {
  phi.validate();
  const auto nbhd = phi.neighbourhoods();
  SolveResult out;
  out.assignment.resize(phi.num_vars);
  for (std::size_t v = 0; v < phi.num_vars; ++v) out.assignment[v] = rng.coin();

  auto fix = [&](std::uint32_t d) {
    if (++out.fix_count > fix_cap) throw std::runtime_error("Fix call cap exceeded");
    for (const auto& lit : phi.clauses[d]) out.assignment[lit.var] = rng.coin();
  };
  auto first_unsatisfied = [&](const std::vector<std::uint32_t>& among) -> std::optional<std::uint32_t> {
    for (std::uint32_t c : among) {
      if (!phi.clause_satisfied(c, out.assignment)) return c;
    }
    return std::nullopt;
  };

  std::vector<std::uint32_t> all(phi.clauses.size());
  for (std::uint32_t i = 0; i < all.size(); ++i) all[i] = i;
  // Explicit call stack of active Fix frames.
  std::vector<std::uint32_t> stack;
  while (true) {
    if (stack.empty()) {
      const auto d = first_unsatisfied(all);
      if (!d) break;
      ++out.root_children;
      fix(*d);
      stack.push_back(*d);
    } else {
      const auto d = first_unsatisfied(nbhd[stack.back()]);
      if (!d) {
        stack.pop_back();
        continue;
      }
      fix(*d);
      stack.push_back(*d);
    }
    out.max_depth = std::max<std::uint64_t>(out.max_depth, stack.size());
  }
  return out;
}

}  // namespace encbound::ksat

namespace encbound::experiments {

namespace {

struct MoserTally {
  std::uint64_t exceed = 0;
  std::uint64_t unsatisfied = 0;
  double fixes = 0.0;
  std::uint64_t max_fixes = 0;
  std::uint64_t max_depth = 0;
  std::uint64_t max_degree = 0;
  std::vector<std::uint64_t> hist;
  void merge(const MoserTally& o) {
    exceed += o.exceed;
    unsatisfied += o.unsatisfied;
    fixes += o.fixes;
    max_fixes = std::max(max_fixes, o.max_fixes);
    max_depth = std::max(max_depth, o.max_depth);
    max_degree = std::max(max_degree, o.max_degree);
    merge_counts(hist, o.hist);
  }
};

}  // namespace

ExperimentReport sim_moser(std::uint64_t k, std::uint64_t m, std::uint64_t r, double s, std::uint64_t trials,
                           std::uint64_t seed) {
  ExperimentReport rep;
  rep.experiment = "moser";
  rep.params = {{"k", static_cast<double>(k)}, {"m", static_cast<double>(m)}, {"r", static_cast<double>(r)}, {"s", s}};
  rep.trials = trials;
  rep.seed = seed;
  const TailBound bound = bounds::moser_tail(m, s);
  const double limit = *bound.threshold;

  auto acc = parallel_trials<MoserTally>(trials, seed, [&](Rng& rng, std::uint64_t, MoserTally& t) {
    const ksat::CnfFormula phi = ksat::gen_bounded_overlap_cnf(k, m, r, rng);
    const ksat::SolveResult res = ksat::moser_solve(phi, rng);
    t.exceed += static_cast<double>(res.fix_count) >= limit ? 1 : 0;
    t.unsatisfied += phi.satisfied(res.assignment) ? 0 : 1;
    t.fixes += static_cast<double>(res.fix_count);
    t.max_fixes = std::max(t.max_fixes, res.fix_count);
    t.max_depth = std::max(t.max_depth, res.max_depth);
    t.max_degree = std::max(t.max_degree, phi.intersection_degree());
    if (t.hist.size() <= res.fix_count) t.hist.resize(res.fix_count + 1, 0);
    ++t.hist[res.fix_count];
  });

  rep.checks.push_back(make_check("fix_count", acc.exceed, trials, bound));
  TailBound never;
  never.theorem = "moser-satisfying";
  never.probability = 0.0;
  never.savings = INFINITY;
  rep.checks.push_back(make_check("unsatisfied_result", acc.unsatisfied, trials, never, true));
  rep.stats = {{"fix_threshold", limit},
               {"mean_fix_count", acc.fixes / static_cast<double>(trials)},
               {"max_fix_count", static_cast<double>(acc.max_fixes)},
               {"max_depth", static_cast<double>(acc.max_depth)},
               {"num_vars", static_cast<double>((m - 1) * ksat::window_stride(k, r) + k)},
               {"measured_r", static_cast<double>(acc.max_degree)}};
  rep.histograms.push_back({"fix_count", acc.hist});
  return rep;
}

}  // namespace encbound::experiments
