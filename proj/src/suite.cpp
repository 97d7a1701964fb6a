// SPDX-License-Identifier: Apache-2.0
#include "encbound/suite.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "encbound/bitcodes.hpp"
#include "encbound/bounds.hpp"
#include "encbound/entropy.hpp"
#include "encbound/experiments.hpp"
#include "encbound/report.hpp"
#include "encbound/rng.hpp"
#include "encbound/witnesses.hpp"

namespace encbound::suite {

namespace {


using experiments::Verdict;
using Clock = std::chrono::steady_clock;
using Float = boost::multiprecision::cpp_bin_float_50;
using Rational = boost::multiprecision::cpp_rational;

// Pinned seeds and budgets.
constexpr std::uint64_t kSeedCodecs = 0x5eed0001;
constexpr std::uint64_t kSeedKraft = 0x5eed0002;
constexpr std::uint64_t kSeedUniform = 0x5eed0003;
constexpr std::uint64_t kSeedMonteCarlo = 0x5eed0007;
constexpr std::uint64_t kSeedAsymptotic = 0x5eed0008;
constexpr std::uint64_t kMonteCarloTrials = 10'000;

// Tolerances.
constexpr double kKraftTolerance = 1e-12;
constexpr double kBetaValue = 4.48418;
constexpr double kBetaTolerance = 1e-4;
constexpr double kAlphaValue = 0.002;
constexpr double kAlphaTolerance = 5e-4;
constexpr double kCodecSeconds = 5.0;
constexpr double kExhaustiveSeconds = 120.0;
constexpr double kMonteCarloSeconds = 600.0;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

class Tracker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_failure_.empty()) first_failure_ = what;
    }
  }
  std::uint64_t checks() const { return checks_; }
  std::uint64_t failures() const { return failures_; }
  std::string describe() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failures";
    if (!first_failure_.empty()) s << "; first: " << first_failure_;
    return s.str();
  }

 private:
  std::uint64_t checks_ = 0;
  std::uint64_t failures_ = 0;
  std::string first_failure_;
};

// Criterion 1

template <typename Codec>
void codec_roundtrips(Tracker& tr, const char* name, Rng& rng) {
  bool ok = true;
  for (std::uint64_t i = 1; i <= 65536 && ok; ++i) {
    const BitString code = bitcodes::encode<Codec>(i);
    ok = bitcodes::decode_exact<Codec>(code) == i && code.size() == Codec::length(i);
  }
  tr.expect(ok, std::string(name) + " roundtrip");
  std::vector<std::uint64_t> values(100);
  BitString stream;
  for (auto& v : values) {
    v = rng.below(65536) + 1;
    Codec::encode(v, stream);
  }
  BitReader in(stream);
  bool same = true;
  for (std::uint64_t v : values) same = same && Codec::decode(in) == v;
  tr.expect(same && in.at_end(), std::string(name) + " stream");
}

CriterionResult codec_exactness() {
  CriterionResult r{1, "codec exactness", false, "", {}, 0.0};
  const auto start = Clock::now();
  Tracker tr;
  Rng rng(kSeedCodecs);
  try {
    codec_roundtrips<bitcodes::Unary>(tr, "unary", rng);
    codec_roundtrips<bitcodes::EliasGamma>(tr, "gamma", rng);
    codec_roundtrips<bitcodes::EliasDelta>(tr, "delta", rng);
    codec_roundtrips<bitcodes::EliasOmega>(tr, "omega", rng);
  } catch (const std::exception& e) {
    tr.expect(false, e.what());
  }
  const double ms = elapsed_ms(start);
  tr.expect(ms < kCodecSeconds * 1000.0, "runtime under 5 s");
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"failures", static_cast<double>(tr.failures())}, {"runtime_ms", ms}};
  return r;
}

// Criterion 2

CriterionResult kraft_sums() {
  CriterionResult r{2, "kraft sums", false, "", {}, 0.0};
  Tracker tr;
  tr.expect(bitcodes::analytic_kraft_sum(bitcodes::CodeFamily::unary) == 1.0, "unary analytic sum");
  tr.expect(bitcodes::analytic_kraft_sum(bitcodes::CodeFamily::elias_gamma) == 0.5, "gamma analytic sum");
  const auto unary = ledger::LengthFunction::family("unary", bitcodes::CodeFamily::unary).kraft_sum();
  const auto gamma = ledger::LengthFunction::family("gamma", bitcodes::CodeFamily::elias_gamma).kraft_sum();
  tr.expect(unary.exact && *unary.exact == Rational(1), "unary exact rational");
  tr.expect(gamma.exact && *gamma.exact == Rational(1, 2), "gamma exact rational");

  Rng rng(kSeedKraft);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t size = 1 + rng.below(64);
    std::vector<double> masses(size);
    for (auto& m : masses) m = rng.uniform01() + 1e-3;
    const double total = std::accumulate(masses.begin(), masses.end(), 0.0);
    for (auto& m : masses) m /= total;
    const bitcodes::CodeTable table = bitcodes::shannon_fano_build(bitcodes::FiniteDensity(masses));
    const double k = table.kraft_sum();
    worst = std::max(worst, k);
    tr.expect(k <= 1.0 + kKraftTolerance, "shannon-fano kraft sum");
    tr.expect(table.is_prefix_free(), "shannon-fano prefix-free");
  }
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"max_shannon_fano_kraft", worst}};
  return r;
}

// Criterion 3

// Random prefix-free code on `universe` outcomes: lengths drawn while the
// Kraft budget lasts, canonical codewords, random outcome assignment.
bitcodes::CodeTable random_partial_code(std::size_t universe, Rng& rng) {
  constexpr unsigned kMaxLen = 12;
  std::uint64_t budget = std::uint64_t{1} << kMaxLen;  // units of 2^-12
  const std::size_t wanted = 1 + rng.below(universe);
  std::vector<unsigned> lengths;
  while (lengths.size() < wanted && budget > 0) {
    unsigned len = 1 + static_cast<unsigned>(rng.below(kMaxLen));
    while ((std::uint64_t{1} << (kMaxLen - len)) > budget) ++len;
    budget -= std::uint64_t{1} << (kMaxLen - len);
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  std::vector<BitString> words;
  std::uint64_t next = 0;
  unsigned prev = lengths.empty() ? 0 : lengths.front();
  for (unsigned len : lengths) {
    next <<= (len - prev);
    prev = len;
    BitString w;
    w.append_bits(next, len);
    words.push_back(w);
    ++next;
  }
  std::vector<std::size_t> slots(universe);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  for (std::size_t i = universe; i > 1; --i) std::swap(slots[i - 1], slots[rng.below(i)]);
  std::vector<std::optional<BitString>> entries(universe);
  for (std::size_t i = 0; i < words.size(); ++i) entries[slots[i]] = words[i];
  return bitcodes::CodeTable(std::move(entries));
}

CriterionResult uniform_lemma_counting() {
  CriterionResult r{3, "uniform lemma counting", false, "", {}, 0.0};
  Tracker tr;
  Rng rng(kSeedUniform);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const bitcodes::CodeTable code = random_partial_code(256, rng);
    tr.expect(code.is_prefix_free(), "generated code is prefix-free");
    for (unsigned s = 1; s <= 3; ++s) {
      const auto count = ledger::check_uniform_lemma(code, 256, s);
      tr.expect(count.holds, "short codeword count within 2^-s");
      worst_ratio = std::max(worst_ratio, count.fraction / count.bound);
    }
  }
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"max_fraction_over_bound", worst_ratio}};
  return r;
}

// Criterion 4

CriterionResult exhaustive_checks() {
  CriterionResult r{4, "exhaustive theorem checks", false, "", {}, 0.0};
  const auto start = Clock::now();
  Tracker tr;

  // Runs, n = 12: for each t the largest admissible s is t - log n, so the
  // bound reads count / 2^n <= n / 2^t.
  constexpr unsigned n_runs = 12;
  for (unsigned t = 4; t <= n_runs; ++t) {
    const std::uint64_t count = experiments::count_runs_exhaustive(n_runs, t);
    const BigUint lhs = BigUint(count) << t;
    const BigUint rhs = BigUint(n_runs) << n_runs;
    tr.expect(lhs <= rhs, "runs n=12 t=" + std::to_string(t));
    const auto report = experiments::sim_runs(n_runs, t, 0, 0);
    tr.expect(report.primary().verdict == Verdict::pass, "runs exhaustive verdict t=" + std::to_string(t));
  }

  // Urns, n = 4..6: every t whose savings t log(t/e) - log n is >= 0.
  std::uint64_t urn_cases = 0;
  for (unsigned n = 4; n <= 6; ++n) {
    for (unsigned t = 1; t <= n; ++t) {
      const double s = t * (std::log2(static_cast<double>(t)) - entropy::kLog2E) - std::log2(static_cast<double>(n));
      if (s < 0.0) continue;
      ++urn_cases;
      const auto report = experiments::sim_urns(n, t, 0, 0);
      tr.expect(report.check("more_than_t").verdict == Verdict::pass, "urns more than t");
      tr.expect(report.check("at_least_t").verdict == Verdict::pass, "urns at least t");
    }
  }

  // Insertion sort, n = 7: Mahonian distribution checked against enumeration.
  constexpr unsigned n_perm = 7;
  const auto dist = experiments::inversion_distribution(n_perm);
  std::vector<std::uint64_t> counted(dist.size(), 0);
  std::vector<std::uint64_t> sigma(n_perm);
  std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
  do {
    const auto profile = experiments::fast_swap_profile(sigma);
    ++counted[std::accumulate(profile.begin(), profile.end(), std::uint64_t{0})];
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  tr.expect(counted == dist, "inversion distribution matches enumeration");

  const BigUint total = 5040;  // 7!
  for (double alpha : {0.05, 0.1}) {
    const TailBound b = bounds::inversions_tail(n_perm, alpha);
    std::uint64_t low = 0;
    for (std::size_t m = 0; m < dist.size(); ++m) low += static_cast<double>(m) <= *b.threshold ? dist[m] : 0;
    tr.expect(static_cast<long double>(low) <= 5040.0L * static_cast<long double>(b.probability),
              "inversions alpha=" + std::to_string(alpha));
  }
  // Encoding form at every M: #{inv <= M} <= n^2 C(M+n-2, n-2).
  std::uint64_t cumulative = 0;
  for (std::size_t m = 0; m < dist.size(); ++m) {
    cumulative += dist[m];
    const BigUint rhs = BigUint(n_perm * n_perm) * binomial(m + n_perm - 2, n_perm - 2);
    tr.expect(BigUint(cumulative) <= rhs && BigUint(cumulative) <= total, "inversions encoding M=" + std::to_string(m));
  }

  const double ms = elapsed_ms(start);
  tr.expect(ms < kExhaustiveSeconds * 1000.0, "runtime under 2 min");
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"urn_cases", static_cast<double>(urn_cases)}, {"runtime_ms", ms}};
  return r;
}

// Criterion 5

CriterionResult witness_roundtrips() {
  CriterionResult r{5, "witness codec roundtrips", false, "", {}, 0.0};
  Tracker tr;
  std::uint64_t encoded = 0;
  try {
    // Runs, n = 12, t = 5.
    std::uint64_t fails = 0;
    for (std::uint64_t x = 0; x < 4096; ++x) {
      BitString bits;
      bits.append_bits(x, 12);
      const auto code = witnesses::runs_encode(bits, 5);
      const bool has = witnesses::first_run(bits, 5).has_value();
      if (code.has_value() != has) ++fails;
      if (code) {
        ++encoded;
        if (code->size() != witnesses::runs_length(12, 5) || witnesses::runs_decode(*code, 12, 5) != bits) ++fails;
      }
    }
    tr.expect(fails == 0, "runs roundtrip");

    // Urns, n = 4, t = 3.
    fails = 0;
    for (std::uint64_t a = 0; a < 256; ++a) {
      std::vector<std::uint64_t> balls(4);
      std::vector<int> load(4, 0);
      for (std::size_t i = 0; i < 4; ++i) ++load[balls[i] = (a >> (2 * i)) & 3U];
      const bool has = *std::max_element(load.begin(), load.end()) >= 3;
      const auto code = witnesses::urns_encode(balls, 3);
      if (code.has_value() != has) ++fails;
      if (code) {
        ++encoded;
        if (code->size() != witnesses::urns_length(4, 3) || witnesses::urns_decode(*code, 4, 3) != balls) ++fails;
      }
    }
    tr.expect(fails == 0, "urns roundtrip");

    // Cliques, n = 5, t = 3, both vertex-list modes.
    fails = 0;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      BitString bits;
      bits.append_bits(mask, 10);
      const Graph g = Graph::from_pair_bits(5, bits);
      const bool has = find_homogeneous_set(g, 3).has_value();
      for (auto mode : {witnesses::VertexListMode::indices, witnesses::VertexListMode::subset_rank}) {
        const auto code = witnesses::clique_encode(g, 3, mode);
        if (code.has_value() != has) ++fails;
        if (code) {
          ++encoded;
          if (code->size() != witnesses::clique_length(5, 3, mode) || !(witnesses::clique_decode(*code, 5, 3, mode) == g)) {
            ++fails;
          }
        }
      }
    }
    tr.expect(fails == 0, "clique roundtrip");

    // Insertion sort, every permutation with n <= 6.
    fails = 0;
    for (std::size_t n = 1; n <= 6; ++n) {
      std::vector<std::uint64_t> sigma(n);
      std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
      do {
        ++encoded;
        const BitString code = witnesses::inssort_encode(sigma);
        const auto m = witnesses::insertion_sort_profile(sigma).total();
        if (code.size() != witnesses::inssort_length(n, m) || witnesses::inssort_decode(code, n) != sigma) ++fails;
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    tr.expect(fails == 0, "inssort roundtrip");
  } catch (const std::exception& e) {
    tr.expect(false, e.what());
  }
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"codewords_checked", static_cast<double>(encoded)}};
  return r;
}

// Criterion 6

// Pr{Binomial(n, p) <= floor(limit)} by direct summation in exact rationals.
Rational binomial_lower_tail(std::uint64_t n, const Rational& p, const Rational& limit) {
  Rational sum = 0;
  for (std::uint64_t k = 0; k <= n && Rational(k) <= limit; ++k) {
    Rational term = Rational(binomial(n, k));
    for (std::uint64_t j = 0; j < k; ++j) term *= p;
    for (std::uint64_t j = k; j < n; ++j) term *= 1 - p;
    sum += term;
  }
  return sum;
}

Float kl_bits(const Float& a, const Float& b) {
  using boost::multiprecision::log;
  const Float ln2 = log(Float(2));
  Float d = 0;
  if (a > 0) d += a * log(a / b);
  if (a < 1) d += (1 - a) * log((1 - a) / (1 - b));
  return d / ln2;
}

CriterionResult kl_chernoff() {
  CriterionResult r{6, "kl chernoff exactness", false, "", {}, 0.0};
  Tracker tr;
  constexpr std::uint64_t n = 20;
  double min_gap = INFINITY;
  for (int p10 : {3, 5, 7}) {
    const Rational p(p10, 10);
    for (int j = 0; j < 10; ++j) {
      // eps = j p / 10, so (p - eps) n = p n (10 - j) / 10.
      const Rational centre = p * Rational(10 - j, 10);
      const Rational tail = binomial_lower_tail(n, p, centre * n);
      const Float bound = boost::multiprecision::pow(Float(2), -Float(n) * kl_bits(Float(centre), Float(p)));
      const Float exact = Float(tail);
      tr.expect(exact <= bound, "tail p=" + std::to_string(p10) + "/10 j=" + std::to_string(j));
      min_gap = std::min(min_gap, static_cast<double>(bound - exact));
      if (p10 == 5) {
        const double eps = 0.05 * j;
        const double basic = std::exp(-eps * eps * static_cast<double>(n) / 2.0);
        tr.expect(bound <= Float(basic), "kl below basic at eps=" + std::to_string(eps));
        // Same event: chernoff_kl at eps/2 against chernoff_basic at eps.
        tr.expect(bounds::chernoff_kl(n, 0.5, eps / 2.0).probability <= bounds::chernoff_basic(n, eps).probability,
                  "kl dominates basic at eps=" + std::to_string(eps));
      }
    }
  }
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"min_bound_minus_tail", min_gap}};
  return r;
}

// Criterion 7

struct McCase {
  std::string id;
  Params params;
  std::uint64_t trials;
};

CriterionResult monte_carlo() {
  CriterionResult r{7, "monte carlo theorem checks", false, "", {}, 0.0};
  const auto start = Clock::now();
  Tracker tr;
  const std::vector<McCase> cases = {
      {"runs", Params({{"n", 1024}, {"s", 10}}), 100'000},
      {"urns", Params({{"n", 1024}, {"s", 3}}), 100'000},
      {"linear-probing", Params({{"n", 1000}, {"c", 4}, {"s", 2}}), kMonteCarloTrials},
      {"ramsey", Params({{"n", 16}, {"s", 2}}), kMonteCarloTrials},
      {"triangles", Params({{"n", 200}, {"c", 0.2}}), kMonteCarloTrials},
      {"percolation", Params({{"root_n", 8}, {"p", 0.25}, {"s", 4}}), kMonteCarloTrials},
      {"moser", Params({{"k", 8}, {"m", 32}, {"r", 7}, {"s", 30}}), 100},
  };
  for (const auto& c : cases) {
    try {
      const auto rep = experiments::run_experiment(c.id, c.params, c.trials, kSeedMonteCarlo);
      const auto& head = rep.primary();
      tr.expect(rep.verdict() == Verdict::pass, c.id + " verdict");
      r.values.emplace_back(c.id + ".empirical", head.empirical());
      r.values.emplace_back(c.id + ".bound", head.bound.probability);
      if (c.id == "moser") {
        tr.expect(rep.check("unsatisfied_result").exceed == 0, "moser assignments satisfy");
        tr.expect(rep.check("fix_count").exceed == 0, "moser fix count never reaches the threshold");
      }
    } catch (const std::exception& e) {
      tr.expect(false, c.id + ": " + e.what());
    }
  }
  const double ms = elapsed_ms(start);
  tr.expect(ms < kMonteCarloSeconds * 1000.0, "runtime under 10 min");
  r.values.emplace_back("runtime_ms", ms);
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  return r;
}

// Criterion 8

CriterionResult asymptotic_reports() {
  CriterionResult r{8, "asymptotic info reports", false, "", {}, 0.0};
  Tracker tr;
  try {
    for (std::uint64_t n : {250, 500, 1000}) {
      const auto rep = experiments::run_experiment("cuckoo", Params({{"n", static_cast<double>(n)}}),
                                                   kMonteCarloTrials, kSeedAsymptotic);
      tr.expect(rep.stat("capped") == 0.0, "cuckoo rehash cap not hit");
      r.values.emplace_back("cuckoo.n" + std::to_string(n) + ".fitted_K2", rep.stat("fitted_K2"));
      r.values.emplace_back("cuckoo.n" + std::to_string(n) + ".fitted_K2_graph", rep.stat("fitted_K2_graph"));
    }
    for (std::uint64_t n : {4096, 16384, 65536}) {
      const auto rep = experiments::run_experiment(
          "two-choice", Params({{"n", static_cast<double>(n)}, {"c", 16}}), 1000, kSeedAsymptotic);
      r.values.emplace_back("two_choice.n" + std::to_string(n) + ".fitted_d", rep.stat("fitted_d"));
      r.values.emplace_back("two_choice.n" + std::to_string(n) + ".max_load", rep.stat("max_max_load"));
    }
    const auto perm = experiments::run_experiment("permutations", Params({{"n", 1024}}), kMonteCarloTrials,
                                                  kSeedAsymptotic);
    tr.expect(perm.check("bst_height").exceed == 0, "no BST height exceedance");
    r.values.emplace_back("bst.max_height_nodes", perm.stat("max_bst_height_nodes"));
    r.values.emplace_back("bst.fitted_c", perm.stat("fitted_bst_c"));
    const auto& rec = perm.check("records_tail");
    r.values.emplace_back("records.empirical", rec.empirical());
    r.values.emplace_back("records.rate", perm.stat("records_rate"));
    const double lg = std::log2(1024.0);
    r.values.emplace_back("records.fitted_K", rec.exceed == 0 ? -INFINITY
                                                              : (std::log2(rec.empirical()) + perm.stat("records_rate") * lg) /
                                                                    std::log2(lg));
    const auto exp = experiments::run_experiment("expander", Params({{"n", 100}, {"kmax", 3}}), kMonteCarloTrials,
                                                 kSeedAsymptotic);
    tr.expect(exp.check("single_vertex").verdict == Verdict::pass, "expander single vertex within 3 sigma");
    r.values.emplace_back("expander.single_vertex_empirical", exp.check("single_vertex").empirical());
    r.values.emplace_back("expander.single_vertex_oracle", exp.stat("single_vertex_oracle"));
    r.values.emplace_back("expander.non_expanding_rate", exp.primary().empirical());
  } catch (const std::exception& e) {
    tr.expect(false, e.what());
  }
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  return r;
}

// Criterion 9

CriterionResult numeric_spots() {
  CriterionResult r{9, "numeric spot values", false, "", {}, 0.0};
  Tracker tr;
  const double h = entropy::binary_entropy(0.5);
  const double hi = bounds::bst_height_constant_check(9.943483).lhs;
  const double lo = bounds::bst_height_constant_check(9.9).lhs;
  const double beta = bounds::expander_beta();
  const double alpha = bounds::expander_alpha_threshold();
  tr.expect(h == 1.0, "H(1/2) = 1");
  tr.expect(hi > 2.0, "bst check at 9.943483 exceeds 2");
  tr.expect(lo < 2.0, "bst check at 9.9 below 2");
  tr.expect(std::abs(beta - kBetaValue) <= kBetaTolerance, "beta");
  tr.expect(std::abs(alpha - kAlphaValue) <= kAlphaTolerance, "alpha threshold");
  r.pass = tr.failures() == 0;
  r.detail = tr.describe();
  r.values = {{"H_half", h}, {"bst_lhs_9.943483", hi}, {"bst_lhs_9.9", lo}, {"beta", beta}, {"alpha_threshold", alpha}};
  return r;
}

CriterionResult smoke(const std::string& id, const Params& p, std::uint64_t trials) {
  CriterionResult r{0, "experiment " + id, false, "", {}, 0.0};
  try {
    const auto rep = experiments::run_experiment(id, p, trials, kSeedMonteCarlo);
    r.pass = rep.verdict() != Verdict::fail;
    r.detail = "verdict " + std::string(experiments::to_string(rep.verdict()));
    r.values = {{"empirical", rep.primary().empirical()}, {"bound", rep.primary().bound.probability}};
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  return r;
}

}  // namespace

bool SuiteResult::pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& c) { return c.pass; });
}

CriterionResult run_criterion(int id) {
  static const std::vector<std::function<CriterionResult()>> table = {
      codec_exactness, kraft_sums,  uniform_lemma_counting, exhaustive_checks,   witness_roundtrips,
      kl_chernoff,     monte_carlo, asymptotic_reports,     numeric_spots};
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("criteria are numbered 1 to 9");
  const auto start = Clock::now();
  CriterionResult r = table[static_cast<std::size_t>(id - 1)]();
  r.wall_ms = elapsed_ms(start);
  return r;
}

SuiteResult run_suite(std::string_view name) {
  SuiteResult s;
  s.name = std::string(name);
  if (name == "acceptance") {
    for (int id = 1; id <= kCriterionCount; ++id) s.criteria.push_back(run_criterion(id));
  } else if (name == "quick") {
    for (int id : {1, 2, 3, 5, 9}) s.criteria.push_back(run_criterion(id));
    auto timed = [&](const std::string& id, const Params& p, std::uint64_t trials) {
      const auto start = Clock::now();
      CriterionResult r = smoke(id, p, trials);
      r.wall_ms = elapsed_ms(start);
      s.criteria.push_back(std::move(r));
    };
    timed("runs", Params({{"n", 12}, {"t", 5}}), 0);
    timed("urns", Params({{"n", 5}, {"t", 3}}), 0);
    timed("moser", Params({{"k", 8}, {"m", 32}, {"r", 7}, {"s", 30}}), 20);
  } else {
    throw std::out_of_range("unknown suite: " + std::string(name) + " (expected acceptance or quick)");
  }
  return s;
}

std::string summary_line(const CriterionResult& r) {
  std::ostringstream out;
  out << "criterion " << r.id << " " << r.name << ": " << (r.pass ? "PASS" : "FAIL") << " (" << r.detail << ")";
  return out.str();
}

nlohmann::json to_json(const SuiteResult& s, bool include_timing) {
  nlohmann::json out = nlohmann::json::object();
  out["suite"] = s.name;
  out["pass"] = s.pass();
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : s.criteria) {
    nlohmann::json j = nlohmann::json::object();
    j["id"] = c.id;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    j["values"] = report::to_json(c.values);
    if (include_timing) j["wall_ms"] = report::number(c.wall_ms);
    list.push_back(std::move(j));
  }
  out["criteria"] = std::move(list);
  return out;
}

}  // namespace encbound::suite
