// SPDX-License-Identifier: Apache-2.0
#include "encbound/graph.hpp"

#include <bit>
#include <stdexcept>

namespace encbound {

namespace {

constexpr std::size_t kMaxBruteForce = 24;

void check_brute_force(const Graph& g) {
  if (g.vertex_count() > kMaxBruteForce) throw std::invalid_argument("exhaustive search limited to n <= 24");
}

// Extends `chosen` to a clique of size t using candidates in `allowed`,
// visiting vertices in increasing order. masks[u] is u's neighbourhood.
bool extend(const std::vector<std::uint32_t>& masks, std::uint32_t chosen, std::uint32_t allowed, std::size_t need,
            std::uint32_t& out) {
  if (need == 0) {
    out = chosen;
    return true;
  }
  if (static_cast<std::size_t>(std::popcount(allowed)) < need) return false;
  while (allowed != 0) {
    if (static_cast<std::size_t>(std::popcount(allowed)) < need) return false;
    unsigned v = static_cast<unsigned>(std::countr_zero(allowed));
    allowed &= allowed - 1;
    if (extend(masks, chosen | (1U << v), allowed & masks[v], need - 1, out)) return true;
  }
  return false;
}

std::size_t grow(const std::vector<std::uint32_t>& masks, std::uint32_t allowed, std::size_t size, std::size_t best) {
  if (allowed == 0) return std::max(size, best);
  while (allowed != 0) {
    if (size + static_cast<std::size_t>(std::popcount(allowed)) <= best) return best;
    unsigned v = static_cast<unsigned>(std::countr_zero(allowed));
    allowed &= allowed - 1;
    best = grow(masks, allowed & masks[v], size + 1, best);
  }
  return best;
}

std::vector<std::uint64_t> mask_to_vertices(std::uint32_t mask) {
  std::vector<std::uint64_t> out;
  while (mask != 0) {
    out.push_back(static_cast<std::uint64_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

bool Graph::has_edge(std::size_t u, std::size_t v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U; }

void Graph::set_edge(std::size_t u, std::size_t v, bool present) {
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  auto apply = [&](std::size_t a, std::size_t b) {
    std::uint64_t bit = std::uint64_t{1} << (b % 64);
    if (present) {
      bits_[a * words_ + b / 64] |= bit;
    } else {
      bits_[a * words_ + b / 64] &= ~bit;
    }
  };
  apply(u, v);
  apply(v, u);
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

BitString Graph::pair_bits() const {
  BitString out;
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = u + 1; v < n_; ++v) out.push_back(has_edge(u, v));
  }
  return out;
}

Graph Graph::from_pair_bits(std::size_t n, const BitString& bits) {
  if (bits.size() != pair_count(n)) throw std::invalid_argument("pair bit count does not match n");
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (bits[k++]) g.set_edge(u, v, true);
    }
  }
  return g;
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.set_edge(u, v, true);
  }
  return g;
}

bool Graph::is_clique(std::span<const std::uint64_t> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || !has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

bool Graph::is_independent(std::span<const std::uint64_t> vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (vertices[i] == vertices[j] || has_edge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v) {
  // Pairs before row u: (n-1) + (n-2) + ... + (n-u).
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::optional<HomogeneousSet> find_homogeneous_set(const Graph& g, std::size_t t) {
  check_brute_force(g);
  const std::size_t n = g.vertex_count();
  if (t > n) return std::nullopt;
  const std::uint32_t all = n == 32 ? ~0U : ((1U << n) - 1);
  std::vector<std::uint32_t> masks(n), complement(n);
  for (std::size_t u = 0; u < n; ++u) {
    masks[u] = g.row_mask(u);
    complement[u] = all & ~masks[u] & ~(1U << u);
  }
  std::uint32_t found = 0;
  if (extend(masks, 0, all, t, found)) return HomogeneousSet{true, mask_to_vertices(found)};
  if (extend(complement, 0, all, t, found)) return HomogeneousSet{false, mask_to_vertices(found)};
  return std::nullopt;
}

std::size_t max_clique_size(const Graph& g) {
  check_brute_force(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint32_t> masks(n);
  for (std::size_t u = 0; u < n; ++u) masks[u] = g.row_mask(u);
  return grow(masks, n == 0 ? 0U : ((1U << n) - 1), 0, 0);
}

}  // namespace encbound
