// SPDX-License-Identifier: Apache-2.0
#include "encbound/witnesses.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace encbound::witnesses {

namespace {

void require_exact_length(const BitString& code, std::size_t expected) {
  if (code.size() != expected) {
    throw DecodeError("codeword has " + std::to_string(code.size()) + " bits, expected " + std::to_string(expected));
  }
}

unsigned subset_width(std::uint64_t n, std::uint64_t k) { return ceil_log2(binomial(n, k)); }

BigUint read_rank(BitReader& in, std::uint64_t n, std::uint64_t k) {
  BigUint rank = read_big(in, subset_width(n, k));
  if (rank >= binomial(n, k)) throw DecodeError("subset rank out of range");
  return rank;
}

}  // namespace

std::optional<std::size_t> first_run(const BitString& x, std::size_t t) {
  if (t == 0) return 0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    run = x[i] ? run + 1 : 0;
    if (run == t) return i + 1 - t;
  }
  return std::nullopt;
}

std::size_t runs_length(std::size_t n, std::size_t t) {
  if (t > n) throw std::invalid_argument("run length exceeds string length");
  return ceil_log2(n) + n - t;
}

std::optional<BitString> runs_encode(const BitString& x, std::size_t t) {
  const std::size_t n = x.size();
  if (t > n || n == 0) return std::nullopt;
  auto start = first_run(x, t);
  if (!start) return std::nullopt;
  BitString out;
  bitcodes::fixed_length_encode(*start, n, out);
  for (std::size_t k = 0; k < n; ++k) {
    if (k < *start || k >= *start + t) out.push_back(x[k]);
  }
  return out;
}

BitString runs_decode(const BitString& code, std::size_t n, std::size_t t) {
  if (n == 0 || t > n) throw std::invalid_argument("need 1 <= n and t <= n");
  require_exact_length(code, runs_length(n, t));
  BitReader in(code);
  std::uint64_t start = in.read_bits(ceil_log2(n));
  if (start > n - t) throw DecodeError("run index " + std::to_string(start) + " leaves no room for the run");
  BitString x;
  for (std::size_t k = 0; k < n; ++k) x.push_back(k >= start && k < start + t ? true : in.read_bit());
  if (first_run(x, t) != start) throw DecodeError("index is not the first run");
  return x;
}

std::size_t urns_length(std::size_t n, std::size_t t) {
  if (t > n) throw std::invalid_argument("t exceeds n");
  const std::size_t w = ceil_log2(n);
  return w + subset_width(n, t) + (n - t) * w;
}

std::optional<BitString> urns_encode(std::span<const std::uint64_t> balls, std::size_t t) {
  const std::size_t n = balls.size();
  if (n == 0 || t > n) return std::nullopt;
  std::vector<std::size_t> load(n, 0);
  for (std::uint64_t b : balls) {
    if (b >= n) throw std::invalid_argument("urn index out of range");
    ++load[b];
  }
  std::size_t j = 0;
  while (j < n && load[j] < t) ++j;
  if (j == n) return std::nullopt;

  std::vector<std::uint64_t> chosen;
  std::vector<bool> in_set(n, false);
  for (std::size_t i = 0; i < n && chosen.size() < t; ++i) {
    if (balls[i] == j) {
      chosen.push_back(i);
      in_set[i] = true;
    }
  }
  BitString out;
  bitcodes::fixed_length_encode(j, n, out);
  append_big(out, bitcodes::subset_rank(n, chosen), subset_width(n, t));
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_set[i]) bitcodes::fixed_length_encode(balls[i], n, out);
  }
  return out;
}

UrnAssignment urns_decode(const BitString& code, std::size_t n, std::size_t t) {
  if (n == 0 || t > n) throw std::invalid_argument("need 1 <= n and t <= n");
  require_exact_length(code, urns_length(n, t));
  BitReader in(code);
  const std::uint64_t j = bitcodes::fixed_length_decode(in, n);
  auto chosen = bitcodes::subset_unrank(n, t, read_rank(in, n, t));
  UrnAssignment balls(n);
  std::vector<bool> in_set(n, false);
  for (auto i : chosen) {
    balls[i] = j;
    in_set[i] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!in_set[i]) balls[i] = bitcodes::fixed_length_decode(in, n);
  }
  auto again = urns_encode(balls, t);
  if (!again || *again != code) throw DecodeError("urn or ball set is not the canonical witness");
  return balls;
}

std::size_t clique_length(std::size_t n, std::size_t t, VertexListMode mode) {
  if (t > n) throw std::invalid_argument("t exceeds n");
  std::size_t list = mode == VertexListMode::indices ? t * ceil_log2(n) : subset_width(n, t);
  return 1 + list + pair_count(n) - pair_count(t);
}

BitString clique_encode(const Graph& g, const HomogeneousSet& s, VertexListMode mode) {
  const std::size_t n = g.vertex_count();
  const auto& vs = s.vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i] >= n || (i > 0 && vs[i] <= vs[i - 1])) {
      throw std::invalid_argument("vertex set must be strictly increasing and inside the graph");
    }
  }
  if (s.clique ? !g.is_clique(vs) : !g.is_independent(vs)) {
    throw std::invalid_argument("vertex set is not homogeneous in the graph");
  }
  std::vector<bool> in_set(n, false);
  for (auto v : vs) in_set[v] = true;

  BitString out;
  out.push_back(s.clique);
  if (mode == VertexListMode::indices) {
    for (auto v : vs) bitcodes::fixed_length_encode(v, n, out);
  } else {
    append_big(out, bitcodes::subset_rank(n, vs), subset_width(n, vs.size()));
  }
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!(in_set[u] && in_set[v])) out.push_back(g.has_edge(u, v));
    }
  }
  return out;
}

std::optional<BitString> clique_encode(const Graph& g, std::size_t t, VertexListMode mode) {
  auto s = find_homogeneous_set(g, t);
  if (!s) return std::nullopt;
  return clique_encode(g, *s, mode);
}

Graph clique_decode(const BitString& code, std::size_t n, std::size_t t, VertexListMode mode) {
  if (t > n) throw std::invalid_argument("t exceeds n");
  require_exact_length(code, clique_length(n, t, mode));
  BitReader in(code);
  const bool clique = in.read_bit();
  std::vector<std::uint64_t> vs;
  if (mode == VertexListMode::indices) {
    for (std::size_t i = 0; i < t; ++i) {
      vs.push_back(bitcodes::fixed_length_decode(in, n));
      if (i > 0 && vs[i] <= vs[i - 1]) throw DecodeError("vertex list must be strictly increasing");
    }
  } else {
    vs = bitcodes::subset_unrank(n, t, read_rank(in, n, t));
  }
  std::vector<bool> in_set(n, false);
  for (auto v : vs) in_set[v] = true;
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      bool edge = in_set[u] && in_set[v] ? clique : in.read_bit();
      if (edge) g.set_edge(u, v, true);
    }
  }
  return g;
}

std::uint64_t SwapProfile::total() const { return std::accumulate(swaps.begin(), swaps.end(), std::uint64_t{0}); }

void require_permutation(std::span<const std::uint64_t> sigma) {
  std::vector<bool> seen(sigma.size() + 1, false);
  for (auto v : sigma) {
    if (v < 1 || v > sigma.size() || seen[v]) throw std::invalid_argument("input is not a permutation of 1..n");
    seen[v] = true;
  }
}

SwapProfile insertion_sort_profile(std::span<const std::uint64_t> sigma) {
  require_permutation(sigma);
  const std::size_t n = sigma.size();
  // 1-based copy so the loop reads like the pseudocode.
  std::vector<std::uint64_t> s(n + 1);
  std::copy(sigma.begin(), sigma.end(), s.begin() + 1);
  SwapProfile p;
  p.swaps.assign(n > 1 ? n - 1 : 0, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    std::size_t j = i;
    while (j > 1 && s[j - 1] > s[j]) {
      std::swap(s[j], s[j - 1]);
      ++p.swaps[i - 2];
      --j;
    }
  }
  return p;
}

Permutation insertion_sort_reconstruct(const SwapProfile& profile) {
  const std::size_t n = profile.size();
  for (std::size_t i = 2; i <= n; ++i) {
    if (profile.swaps[i - 2] > i - 1) throw std::invalid_argument("m_i must lie in [0, i-1]");
  }
  std::vector<std::uint64_t> s(n + 1);
  std::iota(s.begin(), s.end(), 0);
  for (std::size_t i = n; i >= 2; --i) {
    for (std::size_t j = i - profile.swaps[i - 2] + 1; j <= i; ++j) std::swap(s[j], s[j - 1]);
  }
  return Permutation(s.begin() + 1, s.end());
}

BigUint composition_rank(std::span<const std::uint64_t> parts) {
  if (parts.size() <= 1) return 0;
  std::vector<std::uint64_t> black;
  std::uint64_t prefix = 0;
  for (std::size_t j = 0; j + 1 < parts.size(); ++j) {
    prefix += parts[j];
    black.push_back(prefix + j);
  }
  const std::uint64_t m = prefix + parts.back();
  return bitcodes::subset_rank(m + parts.size() - 1, black);
}

std::vector<std::uint64_t> composition_unrank(std::uint64_t total, std::size_t parts, const BigUint& rank) {
  if (parts == 0) throw std::invalid_argument("need at least one part");
  if (parts == 1) {
    if (rank != 0) throw DecodeError("composition rank out of range");
    return {total};
  }
  auto black = bitcodes::subset_unrank(total + parts - 1, parts - 1, rank);
  std::vector<std::uint64_t> out;
  std::uint64_t prev = 0;
  for (std::size_t j = 0; j < black.size(); ++j) {
    // Whites before black dot j, minus those already assigned.
    out.push_back(black[j] - j - prev);
    prev = black[j] - j;
  }
  out.push_back(total - prev);
  return out;
}

std::size_t inssort_length(std::size_t n, std::uint64_t m) {
  if (n <= 1) return 0;
  return ceil_log2(std::uint64_t{n} * n) + subset_width(m + n - 2, n - 2);
}

BitString inssort_encode(std::span<const std::uint64_t> sigma) {
  const std::size_t n = sigma.size();
  SwapProfile p = insertion_sort_profile(sigma);
  BitString out;
  if (n <= 1) return out;
  const std::uint64_t m = p.total();
  bitcodes::fixed_length_encode(m, std::uint64_t{n} * n, out);
  append_big(out, composition_rank(p.swaps), subset_width(m + n - 2, n - 2));
  return out;
}

Permutation inssort_decode(const BitString& code, std::size_t n) {
  if (n <= 1) {
    require_exact_length(code, 0);
    return Permutation(n, 1);
  }
  BitReader in(code);
  const std::uint64_t m = bitcodes::fixed_length_decode(in, std::uint64_t{n} * n);
  if (m > pair_count(n)) throw DecodeError("swap total exceeds n(n-1)/2");
  require_exact_length(code, inssort_length(n, m));
  SwapProfile p;
  p.swaps = composition_unrank(m, n - 1, read_rank(in, m + n - 2, n - 2));
  for (std::size_t i = 2; i <= n; ++i) {
    if (p.swaps[i - 2] > i - 1) throw DecodeError("swap count m_i exceeds i-1");
  }
  return insertion_sort_reconstruct(p);
}

}  // namespace encbound::witnesses
