// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "encbound/bitstring.hpp"

namespace encbound {

/// Simple undirected graph on vertices 0..n-1 stored as adjacency bitsets,
/// one row of 64-bit words per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool has_edge(std::size_t u, std::size_t v) const;
  void set_edge(std::size_t u, std::size_t v, bool present);
  std::span<const std::uint64_t> row(std::size_t u) const { return {bits_.data() + u * words_, words_}; }
  std::size_t edge_count() const;

  /// Upper-triangle pairs (u, v), u < v, in row-major order; one bit each.
  BitString pair_bits() const;
  static Graph from_pair_bits(std::size_t n, const BitString& bits);

  static Graph complete(std::size_t n);

  /// Low 32 bits of the row, for n <= 32 brute-force searches.
  std::uint32_t row_mask(std::size_t u) const { return static_cast<std::uint32_t>(bits_[u * words_]); }

  bool is_clique(std::span<const std::uint64_t> vertices) const;
  bool is_independent(std::span<const std::uint64_t> vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Number of unordered vertex pairs of an n-vertex graph.
constexpr std::uint64_t pair_count(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

/// Index of pair (u, v), u < v, in row-major upper-triangle order.
std::size_t pair_index(std::size_t n, std::size_t u, std::size_t v);

struct HomogeneousSet {
  bool clique = true;
  std::vector<std::uint64_t> vertices;
};

/// Exhaustive search for a clique (preferred) or an independent set of size t.
/// Limited to n <= 24.
std::optional<HomogeneousSet> find_homogeneous_set(const Graph& g, std::size_t t);

/// Size of the largest clique; brute force, n <= 24.
std::size_t max_clique_size(const Graph& g);

}  // namespace encbound
