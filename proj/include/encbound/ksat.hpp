// SPDX-License-Identifier: Apache-2.0
#pragma once

// k-CNF formulas with bounded clause overlap, and the randomized fixing
// solver whose running time the Fix-count bound controls.

#include <cstdint>
#include <optional>
#include <vector>

#include "encbound/rng.hpp"

namespace encbound::ksat {

struct Literal {
  std::uint32_t var = 0;
  bool negated = false;
};

struct CnfFormula {
  std::uint64_t num_vars = 0;
  std::uint64_t k = 0;
  std::vector<std::vector<Literal>> clauses;

  /// Throws std::invalid_argument unless every clause has k distinct
  /// variables below num_vars.
  void validate() const;
  /// For each clause, the clauses sharing a variable with it, itself
  /// included, in increasing order.
  std::vector<std::vector<std::uint32_t>> neighbourhoods() const;
  /// Largest number of other clauses sharing a variable with one clause.
  std::uint64_t intersection_degree() const;
  bool clause_satisfied(std::size_t i, const std::vector<bool>& assignment) const;
  bool satisfied(const std::vector<bool>& assignment) const;
};

/// Variable stride between consecutive windows: smallest stride with
/// 2 (ceil(k / stride) - 1) <= r.
std::uint64_t window_stride(std::uint64_t k, std::uint64_t r);

/// Clause i covers variables [i stride, i stride + k) with random signs.
/// Requires k >= 4 and r < 2^(k-3); a max_vars below the needed count is
/// rejected with that count in the message.
CnfFormula gen_bounded_overlap_cnf(std::uint64_t k, std::uint64_t m, std::uint64_t r, Rng& rng,
                                   std::optional<std::uint64_t> max_vars = std::nullopt);

struct SolveResult {
  std::vector<bool> assignment;
  std::uint64_t fix_count = 0;
  std::uint64_t max_depth = 0;     // deepest Fix nesting, root calls at depth 1
  std::uint64_t root_children = 0; // Fix calls made directly by Solve
};

/// Solve/Fix with lowest-index clause selection. Fix keeps working while
/// any clause sharing a variable with D, D included, is unsatisfied.
/// Throws std::runtime_error after fix_cap Fix calls.
SolveResult moser_solve(const CnfFormula& phi, Rng& rng, std::uint64_t fix_cap = 10'000'000);

}  // namespace encbound::ksat
