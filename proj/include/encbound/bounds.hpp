// SPDX-License-Identifier: Apache-2.0
#pragma once

// Threshold and tail-probability calculators, one per encoding argument.
// Constants hidden in O(.) terms are explicit arguments; results that depend
// on them carry asymptotic = true.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "encbound/ledger.hpp"
#include "encbound/params.hpp"

namespace encbound::bounds {

/// ceil(x), except values within 1e-12 (relative) of an integer round to it.
double robust_ceil(double x);

// Runs of ones: t = ceil(log n + s).
TailBound runs_threshold(std::uint64_t n, double s);

// Cliques or independent sets in G(n, 1/2).
TailBound ramsey_threshold(std::uint64_t n, double s);
/// Savings (1/2)(t^2 - t - 2t log n) - 1 of the clique/IS code at size t.
double ramsey_savings(std::uint64_t n, double t);
/// t = ceil(4 log n); extras report the claimed 2^-(log n)^2.
TailBound ramsey_power_variant(std::uint64_t n);

// Balls in urns: smallest t >= 3 with t log(t/e) >= log n + s.
TailBound urns_threshold(std::uint64_t n, double s);
/// Whether t = (1 + eps) L / log L satisfies t log(t/e) >= L + s, where
/// L = log n is given directly so huge n can be probed.
bool urns_asymptotic_choice_ok(double log2_n, double eps, double s);

// Linear probing with table size cn: smallest t >= 2 with
// (t-1) log(c/e) - log t - 3 >= s.
TailBound linear_probing_threshold(double c, double s);
/// t0 + sum_{t >= 1} (t + t0) (c/e)^(-t/2), summed until terms vanish.
double linear_probing_search_series(double c, double t0);

// Cuckoo hashing.
TailBound cuckoo_path_threshold(std::uint64_t n, double s, double k1 = 4.0);
TailBound cuckoo_failure(std::uint64_t n, double k2 = 1.0);

// 2-choice hashing with table size cn, c > 8.
/// Additive constant of the component-size code: 2 log c - 3.
double two_choice_default_k(double c);
TailBound two_choice_component(std::uint64_t n, double c, double s);
TailBound two_choice_component(std::uint64_t n, double c, double s, double k);
TailBound two_choice_maxload(std::uint64_t n, double d = 3.0);

// Random 3-left-regular bipartite graphs.
/// (3/2) log(3/2) + (5/2) log e.
double expander_beta();
/// (1/2)^(2 beta).
double expander_alpha_threshold();
/// s(k) = (k/2) log n - (k/2) log k - beta k - 2 log k - c0.
TailBound expander_savings(std::uint64_t n, std::uint64_t k, double c0 = 0.0);

// Permutations.
/// Exponent n log(alpha e^2) + K log n; requires 0 < alpha < 1/e^2.
TailBound inversions_tail(std::uint64_t n, double alpha, double k = 2.0);
/// Non-asymptotic form: Pr{inversions <= M} <= n^2 C(M+n-2, n-2) / n!.
TailBound inversions_encoding_bound(std::uint64_t n, std::uint64_t max_inversions);
/// c (1 - H(1/c)).
double records_rate(double c);
/// Exponent -c(1 - H(1/c)) log n + K log log n; requires c > 2.
TailBound records_tail(std::uint64_t n, double c, double k = 1.0);

struct BstCheck {
  double lhs = 0.0;
  bool ok = false;
};
/// lhs = c (1 - H(1/(c log(4/3)))), ok when lhs > 2; requires c > 2/log(4/3).
BstCheck bst_height_constant_check(double c);

// Concentration.
TailBound chernoff_basic(std::uint64_t n, double eps);
TailBound chernoff_kl(std::uint64_t n, double p, double eps);

// Torus percolation: cycle length (s + log n)/log(1/(3p)), p < 1/3.
TailBound percolation_cycle_tail(std::uint64_t n, double p, double s);

// Triangles in G(n, c/n).
/// Pr{some triangle} <= c^3; extras carry lower_no_triangle = max(0, 1 - c^3).
TailBound triangles_down(double c);
/// Pr{no triangle} <= 2^(-K c^3); extras carry valid = [c <= (log n)^(1/3)].
TailBound triangles_up(std::uint64_t n, double c, double k = 1.0);

// Moser's k-SAT fixing: threshold ceil(s + m log m).
TailBound moser_tail(std::uint64_t m, double s);
/// Precondition r < 2^(k-3) as stated in the theorem.
bool moser_precondition(std::uint64_t k, std::uint64_t r);

// Registry used by the command line.
struct TheoremInfo {
  std::string id;
  std::string params;
  std::string summary;
};
const std::vector<TheoremInfo>& theorems();
/// Evaluates a registered calculator; unknown ids throw std::out_of_range.
TailBound evaluate(std::string_view id, const Params& params);

}  // namespace encbound::bounds
