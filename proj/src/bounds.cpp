// SPDX-License-Identifier: Apache-2.0
#include "encbound/bounds.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "encbound/entropy.hpp"

namespace encbound::bounds {

namespace {

using entropy::kLog2E;

double lg(double x) { return std::log2(x); }

void require(bool cond, const char* message) {
  if (!cond) throw std::invalid_argument(message);
}

void require_savings(double s) { require(s >= 0.0 && std::isfinite(s), "s must be a finite value >= 0"); }

TailBound make(std::string theorem, double savings, NamedValues params) {
  TailBound b = TailBound::from_savings(std::move(theorem), savings);
  b.params = std::move(params);
  return b;
}

constexpr std::uint64_t kScanLimit = 100'000'000;

}  // namespace

double robust_ceil(double x) {
  double r = std::round(x);
  if (std::abs(x - r) <= 1e-12 * std::max(1.0, std::abs(x))) return r;
  return std::ceil(x);
}

TailBound runs_threshold(std::uint64_t n, double s) {
  require(n >= 2, "runs needs n >= 2");
  require_savings(s);
  const auto nn = static_cast<double>(n);
  TailBound b = make("runs", s, {{"n", nn}, {"s", s}});
  b.threshold = robust_ceil(lg(nn) + s);
  return b;
}

TailBound ramsey_threshold(std::uint64_t n, double s) {
  require(n >= 3, "ramsey needs n >= 3");
  require(s >= 1.0 && std::isfinite(s), "ramsey needs s >= 1");
  const auto nn = static_cast<double>(n);
  TailBound b = make("ramsey", s, {{"n", nn}, {"s", s}});
  b.threshold = robust_ceil(3.0 * lg(nn) + std::sqrt(2.0 * s));
  b.extras = {{"code_savings", ramsey_savings(n, *b.threshold)}};
  return b;
}

double ramsey_savings(std::uint64_t n, double t) {
  return 0.5 * (t * t - t - 2.0 * t * lg(static_cast<double>(n))) - 1.0;
}

TailBound ramsey_power_variant(std::uint64_t n) {
  require(n >= 3, "ramsey needs n >= 3");
  const auto nn = static_cast<double>(n);
  const double t = robust_ceil(4.0 * lg(nn));
  TailBound b = make("ramsey-power", ramsey_savings(n, t), {{"n", nn}});
  b.threshold = t;
  const double claim = lg(nn) * lg(nn);
  b.extras = {{"claimed_savings", claim}, {"claimed_probability", std::exp2(-claim)}};
  return b;
}

TailBound urns_threshold(std::uint64_t n, double s) {
  require(n >= 2, "urns needs n >= 2");
  require_savings(s);
  const auto nn = static_cast<double>(n);
  const double target = lg(nn) + s;
  std::uint64_t t = 3;
  while (static_cast<double>(t) * (lg(static_cast<double>(t)) - kLog2E) < target) {
    if (++t > kScanLimit) throw std::invalid_argument("urns threshold scan limit exceeded");
  }
  TailBound b = make("urns", s, {{"n", nn}, {"s", s}});
  b.threshold = static_cast<double>(t);
  return b;
}

bool urns_asymptotic_choice_ok(double log2_n, double eps, double s) {
  require(log2_n > 2.0 && eps > 0.0, "need log n > 2 and eps > 0");
  const double t = (1.0 + eps) * log2_n / lg(log2_n);
  return t * (lg(t) - kLog2E) >= log2_n + s;
}

TailBound linear_probing_threshold(double c, double s) {
  require(c > std::numbers::e, "linear probing needs c > e");
  require_savings(s);
  const double rate = lg(c / std::numbers::e);
  std::uint64_t t = 2;
  auto slack = [&](std::uint64_t v) {
    const auto tv = static_cast<double>(v);
    return (tv - 1.0) * rate - lg(tv) - 3.0;
  };
  while (slack(t) < s) {
    if (++t > kScanLimit) throw std::invalid_argument("linear probing threshold scan limit exceeded");
  }
  TailBound b = make("linear-probing", s, {{"c", c}, {"s", s}});
  b.threshold = static_cast<double>(t);
  return b;
}

double linear_probing_search_series(double c, double t0) {
  require(c > std::numbers::e, "series converges only for c > e");
  const double q = std::pow(c / std::numbers::e, -0.5);
  double sum = t0;
  double qt = 1.0;
  for (std::uint64_t t = 1; t < kScanLimit; ++t) {
    qt *= q;
    const double term = (static_cast<double>(t) + t0) * qt;
    sum += term;
    if (term < sum * 1e-18) break;
  }
  return sum;
}

TailBound cuckoo_path_threshold(std::uint64_t n, double s, double k1) {
  require(n >= 2, "cuckoo needs n >= 2");
  require_savings(s);
  const auto nn = static_cast<double>(n);
  TailBound b = make("cuckoo-path", s, {{"n", nn}, {"s", s}, {"K1", k1}});
  b.threshold = s + lg(nn) + k1;
  b.asymptotic = true;
  return b;
}

TailBound cuckoo_failure(std::uint64_t n, double k2) {
  require(n >= 2, "cuckoo needs n >= 2");
  require(k2 > 0.0, "K2 must be positive");
  const auto nn = static_cast<double>(n);
  TailBound b = make("cuckoo-failure", lg(nn / k2), {{"n", nn}, {"K2", k2}});
  b.asymptotic = true;
  return b;
}

double two_choice_default_k(double c) { return 2.0 * lg(c) - 3.0; }

TailBound two_choice_component(std::uint64_t n, double c, double s) {
  require(c > 8.0, "2-choice needs c > 8");
  return two_choice_component(n, c, s, two_choice_default_k(c));
}

TailBound two_choice_component(std::uint64_t n, double c, double s, double k) {
  require(n >= 2, "2-choice needs n >= 2");
  require(c > 8.0, "2-choice needs c > 8");
  require_savings(s);
  const auto nn = static_cast<double>(n);
  TailBound b = make("two-choice-component", s, {{"n", nn}, {"c", c}, {"s", s}, {"K", k}});
  b.threshold = (s + lg(nn) + k) / lg(c / 8.0);
  b.asymptotic = true;
  return b;
}

TailBound two_choice_maxload(std::uint64_t n, double d) {
  require(n >= 4, "2-choice max load needs n >= 4");
  const auto nn = static_cast<double>(n);
  TailBound b = make("two-choice-maxload", lg(nn), {{"n", nn}, {"d", d}});
  b.threshold = robust_ceil(lg(lg(nn)) + d);
  b.asymptotic = true;
  return b;
}

double expander_beta() { return 1.5 * lg(1.5) + 2.5 * kLog2E; }

double expander_alpha_threshold() { return std::pow(0.5, 2.0 * expander_beta()); }

TailBound expander_savings(std::uint64_t n, std::uint64_t k, double c0) {
  require(k >= 1 && k <= n, "expander needs 1 <= k <= n");
  const auto nn = static_cast<double>(n);
  const auto kk = static_cast<double>(k);
  const double s = 0.5 * kk * lg(nn) - 0.5 * kk * lg(kk) - expander_beta() * kk - 2.0 * lg(kk) - c0;
  TailBound b = make("expander", s, {{"n", nn}, {"k", kk}, {"c0", c0}});
  b.asymptotic = true;
  b.extras = {{"beta", expander_beta()}, {"alpha_threshold", expander_alpha_threshold()}};
  return b;
}

TailBound inversions_tail(std::uint64_t n, double alpha, double k) {
  const double limit = std::exp(-2.0);
  require(alpha > 0.0 && alpha < limit, "inversions needs 0 < alpha < 1/e^2");
  require(n >= 2, "inversions needs n >= 2");
  const auto nn = static_cast<double>(n);
  const double exponent = nn * lg(alpha * std::numbers::e * std::numbers::e) + k * lg(nn);
  TailBound b = make("inversions", -exponent, {{"n", nn}, {"alpha", alpha}, {"K", k}});
  b.threshold = alpha * nn * nn - nn + 2.0;
  b.asymptotic = true;
  b.extras = {{"exponent", exponent}};
  return b;
}

TailBound inversions_encoding_bound(std::uint64_t n, std::uint64_t max_inversions) {
  require(n >= 2, "inversions needs n >= 2");
  const auto nn = static_cast<double>(n);
  const double code = 2.0 * lg(nn) + entropy::log2_binomial(max_inversions + n - 2, n - 2);
  TailBound b = make("inversions-encoding", entropy::log2_factorial(n) - code,
                     {{"n", nn}, {"max_inversions", static_cast<double>(max_inversions)}});
  b.threshold = static_cast<double>(max_inversions);
  return b;
}

double records_rate(double c) {
  require(c > 2.0, "records needs c > 2");
  return c * (1.0 - entropy::binary_entropy(1.0 / c));
}

TailBound records_tail(std::uint64_t n, double c, double k) {
  require(n >= 4, "records needs n >= 4");
  const auto nn = static_cast<double>(n);
  const double rate = records_rate(c);
  const double exponent = -rate * lg(nn) + k * lg(lg(nn));
  TailBound b = make("records", -exponent, {{"n", nn}, {"c", c}, {"K", k}});
  b.threshold = robust_ceil(c * lg(nn));
  b.asymptotic = true;
  b.extras = {{"rate", rate}, {"exponent", exponent}};
  return b;
}

BstCheck bst_height_constant_check(double c) {
  const double l43 = lg(4.0 / 3.0);
  require(c > 2.0 / l43, "bst height check needs c > 2/log(4/3)");
  BstCheck r;
  r.lhs = c * (1.0 - entropy::binary_entropy(1.0 / (c * l43)));
  r.ok = r.lhs > 2.0;
  return r;
}

TailBound chernoff_basic(std::uint64_t n, double eps) {
  require(n >= 1, "chernoff needs n >= 1");
  require(eps >= 0.0 && std::isfinite(eps), "chernoff needs eps >= 0");
  const auto nn = static_cast<double>(n);
  // e^(-eps^2 n / 2) = 2^(-eps^2 n / (2 ln 2))
  TailBound b = make("chernoff-basic", eps * eps * nn / (2.0 * std::numbers::ln2), {{"n", nn}, {"eps", eps}});
  b.threshold = (1.0 - eps) * nn / 2.0;
  return b;
}

TailBound chernoff_kl(std::uint64_t n, double p, double eps) {
  require(n >= 1, "chernoff needs n >= 1");
  require(p > 0.0 && p < 1.0, "chernoff-kl needs 0 < p < 1");
  require(eps >= 0.0 && eps <= p, "chernoff-kl needs 0 <= eps <= p");
  const auto nn = static_cast<double>(n);
  TailBound b = make("chernoff-kl", nn * entropy::kl_divergence(p - eps, p), {{"n", nn}, {"p", p}, {"eps", eps}});
  b.threshold = (p - eps) * nn;
  return b;
}

TailBound percolation_cycle_tail(std::uint64_t n, double p, double s) {
  const auto root = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<double>(n))));
  require(n >= 1 && root * root == n, "percolation needs a perfect-square n");
  require(p > 0.0 && p < 1.0 / 3.0, "percolation needs 0 < p < 1/3");
  require_savings(s);
  const auto nn = static_cast<double>(n);
  TailBound b = make("percolation", s, {{"n", nn}, {"p", p}, {"s", s}});
  b.threshold = (s + lg(nn)) / lg(1.0 / (3.0 * p));
  return b;
}

TailBound triangles_down(double c) {
  require(c > 0.0 && std::isfinite(c), "triangles needs c > 0");
  TailBound b = make("triangles-down", -3.0 * lg(c), {{"c", c}});
  b.extras = {{"lower_no_triangle", std::max(0.0, 1.0 - c * c * c)}};
  return b;
}

TailBound triangles_up(std::uint64_t n, double c, double k) {
  require(n >= 2, "triangles needs n >= 2");
  require(c > 0.0 && std::isfinite(c), "triangles needs c > 0");
  const auto nn = static_cast<double>(n);
  TailBound b = make("triangles-up", k * c * c * c, {{"n", nn}, {"c", c}, {"K", k}});
  b.asymptotic = true;
  b.extras = {{"upper_exists_exponent", k * c * c * c}, {"valid", c <= std::cbrt(lg(nn)) ? 1.0 : 0.0}};
  return b;
}

TailBound moser_tail(std::uint64_t m, double s) {
  require(m >= 1, "moser needs m >= 1");
  require_savings(s);
  const auto mm = static_cast<double>(m);
  TailBound b = make("moser", s, {{"m", mm}, {"s", s}});
  b.threshold = robust_ceil(s + mm * lg(mm));
  return b;
}

bool moser_precondition(std::uint64_t k, std::uint64_t r) { return k >= 3 && k < 67 && r < (std::uint64_t{1} << (k - 3)); }

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> list = {
      {"runs", "n s", "run of t = ceil(log n + s) ones"},
      {"ramsey", "n s", "clique or independent set of size ceil(3 log n + sqrt(2s))"},
      {"ramsey-power", "n", "clique or independent set of size ceil(4 log n)"},
      {"urns", "n s", "urn with more than t balls, t log(t/e) >= log n + s"},
      {"linear-probing", "c s", "block containing x has size exactly t"},
      {"linear-probing-search", "c t0", "expected search series"},
      {"cuckoo-path", "n s K1=4", "edge-simple path of length s + log n + K1"},
      {"cuckoo-failure", "n K2=1", "cuckoo insertion failure, K2/n"},
      {"two-choice-component", "n c s [K]", "component size (s + log n + K)/log(c/8)"},
      {"two-choice-maxload", "n d=3", "max load ceil(log log n + d)"},
      {"expander", "n k c0=0", "savings s(k) for a non-expanding set of size k"},
      {"inversions", "n alpha K=2", "at most alpha n^2 - n + 2 inversions"},
      {"inversions-encoding", "n M", "at most M inversions, non-asymptotic"},
      {"records", "n c K=1", "at least c log n records"},
      {"bst-height", "c", "c (1 - H(1/(c log(4/3)))) > 2"},
      {"chernoff-basic", "n eps", "Binomial(n,1/2) <= (1-eps) n/2"},
      {"chernoff-kl", "n p eps", "Binomial(n,p) <= (p-eps) n"},
      {"percolation", "n p s", "cycle of length (s + log n)/log(1/(3p))"},
      {"triangles-down", "c", "some triangle in G(n, c/n)"},
      {"triangles-up", "n c K=1", "no triangle in G(n, c/n)"},
      {"moser", "m s", "at least ceil(s + m log m) Fix calls"},
      {"uniform", "universe_log2 code_length", "uniform encoding lemma"},
      {"nonuniform", "log_inv_px code_length", "non-uniform encoding lemma"},
  };
  return list;
}

TailBound evaluate(std::string_view id, const Params& p) {
  using Fn = std::function<TailBound(const Params&)>;
  static const std::vector<std::pair<std::string_view, Fn>> table = {
      {"runs", [](const Params& q) { return runs_threshold(q.require_count("n"), q.require("s")); }},
      {"ramsey", [](const Params& q) { return ramsey_threshold(q.require_count("n"), q.require("s")); }},
      {"ramsey-power", [](const Params& q) { return ramsey_power_variant(q.require_count("n")); }},
      {"urns", [](const Params& q) { return urns_threshold(q.require_count("n"), q.require("s")); }},
      {"linear-probing", [](const Params& q) { return linear_probing_threshold(q.require("c"), q.require("s")); }},
      {"linear-probing-search",
       [](const Params& q) {
         const double c = q.require("c");
         const double t0 = q.get("t0", 1.0);
         TailBound b;
         b.theorem = "linear-probing-search";
         b.params = {{"c", c}, {"t0", t0}};
         b.asymptotic = true;
         b.extras = {{"series", linear_probing_search_series(c, t0)}};
         return b;
       }},
      {"cuckoo-path",
       [](const Params& q) { return cuckoo_path_threshold(q.require_count("n"), q.require("s"), q.get("K1", 4.0)); }},
      {"cuckoo-failure", [](const Params& q) { return cuckoo_failure(q.require_count("n"), q.get("K2", 1.0)); }},
      {"two-choice-component",
       [](const Params& q) {
         const double c = q.require("c");
         return two_choice_component(q.require_count("n"), c, q.require("s"), q.get("K", two_choice_default_k(c)));
       }},
      {"two-choice-maxload", [](const Params& q) { return two_choice_maxload(q.require_count("n"), q.get("d", 3.0)); }},
      {"expander",
       [](const Params& q) {
         return expander_savings(q.require_count("n"), q.require_count("k"), q.get("c0", 0.0));
       }},
      {"inversions",
       [](const Params& q) { return inversions_tail(q.require_count("n"), q.require("alpha"), q.get("K", 2.0)); }},
      {"inversions-encoding",
       [](const Params& q) { return inversions_encoding_bound(q.require_count("n"), q.require_count("M")); }},
      {"records", [](const Params& q) { return records_tail(q.require_count("n"), q.require("c"), q.get("K", 1.0)); }},
      {"bst-height",
       [](const Params& q) {
         const double c = q.require("c");
         BstCheck r = bst_height_constant_check(c);
         TailBound b;
         b.theorem = "bst-height";
         b.params = {{"c", c}};
         b.extras = {{"lhs", r.lhs}, {"ok", r.ok ? 1.0 : 0.0}};
         return b;
       }},
      {"chernoff-basic", [](const Params& q) { return chernoff_basic(q.require_count("n"), q.require("eps")); }},
      {"chernoff-kl",
       [](const Params& q) { return chernoff_kl(q.require_count("n"), q.require("p"), q.require("eps")); }},
      {"percolation",
       [](const Params& q) { return percolation_cycle_tail(q.require_count("n"), q.require("p"), q.require("s")); }},
      {"triangles-down", [](const Params& q) { return triangles_down(q.require("c")); }},
      {"triangles-up",
       [](const Params& q) { return triangles_up(q.require_count("n"), q.require("c"), q.get("K", 1.0)); }},
      {"moser", [](const Params& q) { return moser_tail(q.require_count("m"), q.require("s")); }},
      {"uniform",
       [](const Params& q) { return ledger::uniform_tail(q.require("universe_log2"), q.require("code_length")); }},
      {"nonuniform",
       [](const Params& q) { return ledger::nonuniform_tail(q.require("log_inv_px"), q.require("code_length")); }},
  };
  for (const auto& [name, fn] : table) {
    if (name == id) return fn(p);
  }
  throw std::out_of_range("unknown theorem id: " + std::string(id));
}

}  // namespace encbound::bounds
