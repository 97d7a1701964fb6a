// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "encbound/experiments.hpp"

namespace encbound::experiments {

std::vector<std::uint64_t> random_permutation(std::uint64_t n, Rng& rng) {
  std::vector<std::uint64_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), std::uint64_t{1});
  for (std::uint64_t i = n; i > 1; --i) std::swap(sigma[i - 1], sigma[rng.below(i)]);
  return sigma;
}

std::vector<std::uint64_t> fast_swap_profile(std::span<const std::uint64_t> sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::uint64_t> tree(n + 1, 0);
  std::vector<std::uint64_t> out;
  out.reserve(n > 0 ? n - 1 : 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t v = sigma[i];
    if (v < 1 || v > n) throw std::invalid_argument("not a permutation of 1..n");
    std::uint64_t at_most = 0;
    for (std::uint64_t j = v; j > 0; j -= j & (~j + 1)) at_most += tree[j];
    if (i > 0) out.push_back(i - at_most);
    for (std::uint64_t j = v; j <= n; j += j & (~j + 1)) ++tree[j];
  }
  return out;
}

std::uint64_t count_records(std::span<const std::uint64_t> sigma) {
  std::uint64_t best = 0;
  std::uint64_t records = 0;
  for (std::uint64_t v : sigma) {
    if (v > best) {
      best = v;
      ++records;
    }
  }
  return records;
}

std::uint64_t bst_height_nodes(std::span<const std::uint64_t> sigma) {
  const std::size_t n = sigma.size();
  if (n == 0) return 0;
  constexpr std::size_t kNil = SIZE_MAX;
  std::vector<std::size_t> left(n, kNil), right(n, kNil);
  std::uint64_t height = 1;
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t u = 0;
    std::uint64_t depth = 1;
    while (true) {
      ++depth;
      auto& next = sigma[i] < sigma[u] ? left[u] : right[u];
      if (next == kNil) {
        next = i;
        break;
      }
      u = next;
    }
    height = std::max(height, depth);
  }
  return height;
}

std::uint64_t find_comparisons(std::span<const std::uint64_t> sigma, std::uint64_t k) {
  if (k < 1 || k > sigma.size()) throw std::invalid_argument("Find needs 1 <= k <= n");
  std::vector<std::uint64_t> cur(sigma.begin(), sigma.end());
  std::vector<std::uint64_t> lo, hi;
  std::uint64_t comparisons = 0;
  while (true) {
    lo.clear();
    hi.clear();
    for (std::size_t i = 1; i < cur.size(); ++i) {
      ++comparisons;
      (cur[i] > cur[0] ? hi : lo).push_back(cur[i]);
    }
    if (lo.size() >= k) {
      cur.swap(lo);
    } else if (lo.size() + 1 < k) {
      k -= lo.size() + 1;
      cur.swap(hi);
    } else {
      return comparisons;
    }
  }
}

std::vector<std::uint64_t> inversion_distribution(unsigned n) {
  if (n > 20) throw std::invalid_argument("inversion distribution limited to n <= 20");
  std::vector<std::uint64_t> dist{1};
  for (unsigned i = 2; i <= n; ++i) {
    // Inserting element i adds 0..i-1 inversions.
    std::vector<std::uint64_t> next(dist.size() + i - 1, 0);
    for (std::size_t m = 0; m < dist.size(); ++m) {
      for (unsigned a = 0; a < i; ++a) next[m + a] += dist[m];
    }
    dist.swap(next);
  }
  return dist;
}

namespace {

struct PermTally {
  std::uint64_t inv_low = 0;
  std::uint64_t records_high = 0;
  std::uint64_t bst_high = 0;
  double records_sum = 0.0;
  double height_sum = 0.0;
  double find_sum = 0.0;
  double inv_sum = 0.0;
  std::uint64_t height_max = 0;
  std::uint64_t find_max = 0;
  std::vector<std::uint64_t> records_hist;
  std::vector<std::uint64_t> height_hist;
  void merge(const PermTally& o) {
    inv_low += o.inv_low;
    records_high += o.records_high;
    bst_high += o.bst_high;
    records_sum += o.records_sum;
    height_sum += o.height_sum;
    find_sum += o.find_sum;
    inv_sum += o.inv_sum;
    height_max = std::max(height_max, o.height_max);
    find_max = std::max(find_max, o.find_max);
    merge_counts(records_hist, o.records_hist);
    merge_counts(height_hist, o.height_hist);
  }
};

void bump(std::vector<std::uint64_t>& hist, std::uint64_t value) {
  if (hist.size() <= value) hist.resize(value + 1, 0);
  ++hist[value];
}

}  // namespace

ExperimentReport sim_permutation_stats(std::uint64_t n, double alpha, double c_records, double c_bst,
                                       std::uint64_t trials, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("permutation experiment needs n >= 4");
  ExperimentReport r;
  r.experiment = "permutations";
  r.params = {{"n", static_cast<double>(n)}, {"alpha", alpha}, {"c_records", c_records}, {"c_bst", c_bst}};
  r.trials = trials;
  r.seed = seed;

  const TailBound inv = bounds::inversions_tail(n, alpha);
  const double inv_limit = *inv.threshold;
  const auto max_inv = static_cast<std::uint64_t>(std::max(0.0, std::floor(inv_limit)));
  const TailBound inv_code = bounds::inversions_encoding_bound(n, max_inv);
  const TailBound rec = bounds::records_tail(n, c_records);
  const double log_n = std::log2(static_cast<double>(n));
  const double bst_limit = bounds::robust_ceil(c_bst * log_n);
  TailBound bst = TailBound::from_savings("bst-height", log_n);
  bst.params = {{"n", static_cast<double>(n)}, {"c", c_bst}};
  bst.threshold = bst_limit;
  bst.asymptotic = true;
  if (c_bst > 2.0 / std::log2(4.0 / 3.0)) bst.extras = {{"lhs", bounds::bst_height_constant_check(c_bst).lhs}};

  auto acc = parallel_trials<PermTally>(trials, seed, [&](Rng& rng, std::uint64_t, PermTally& t) {
    const auto sigma = random_permutation(n, rng);
    const auto profile = fast_swap_profile(sigma);
    const auto inversions = std::accumulate(profile.begin(), profile.end(), std::uint64_t{0});
    const std::uint64_t records = count_records(sigma);
    const std::uint64_t height = bst_height_nodes(sigma);
    const std::uint64_t k = rng.below(n) + 1;
    const std::uint64_t comps = find_comparisons(sigma, k);
    t.inv_low += static_cast<double>(inversions) <= inv_limit ? 1 : 0;
    t.records_high += static_cast<double>(records) >= *rec.threshold ? 1 : 0;
    t.bst_high += static_cast<double>(height) >= bst_limit ? 1 : 0;
    t.records_sum += static_cast<double>(records);
    t.height_sum += static_cast<double>(height);
    t.find_sum += static_cast<double>(comps);
    t.inv_sum += static_cast<double>(inversions);
    t.height_max = std::max(t.height_max, height);
    t.find_max = std::max(t.find_max, comps);
    bump(t.records_hist, records);
    bump(t.height_hist, height);
  });

  r.checks.push_back(make_check("inversions_encoding", acc.inv_low, trials, inv_code));
  r.checks.push_back(make_check("inversions_tail", acc.inv_low, trials, inv));
  r.checks.push_back(make_check("records_tail", acc.records_high, trials, rec));
  r.checks.push_back(make_check("bst_height", acc.bst_high, trials, bst));
  const auto tt = static_cast<double>(trials);
  const auto nn = static_cast<double>(n);
  r.stats = {{"mean_inversions", acc.inv_sum / tt},
             {"mean_records", acc.records_sum / tt},
             {"records_threshold", *rec.threshold},
             {"records_rate", bounds::records_rate(c_records)},
             {"mean_bst_height_nodes", acc.height_sum / tt},
             {"max_bst_height_nodes", static_cast<double>(acc.height_max)},
             {"bst_height_limit", bst_limit},
             {"fitted_bst_c", static_cast<double>(acc.height_max) / log_n},
             {"mean_find_ratio", acc.find_sum / tt / nn},
             {"max_find_ratio", static_cast<double>(acc.find_max) / nn}};
  r.histograms.push_back({"records", acc.records_hist});
  r.histograms.push_back({"bst_height_nodes", acc.height_hist});
  return r;
}

}  // namespace encbound::experiments
