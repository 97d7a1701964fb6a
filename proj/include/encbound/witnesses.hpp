// SPDX-License-Identifier: Apache-2.0
#pragma once

// Witness codecs: encoders defined exactly on a bad event, with decoders that
// reject anything outside the encoder's image.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "encbound/bitcodes.hpp"
#include "encbound/graph.hpp"

namespace encbound::witnesses {

// Runs of ones

/// First index i with x[i..i+t) all ones.
std::optional<std::size_t> first_run(const BitString& x, std::size_t t);
/// ceil(log n) + n - t.
std::size_t runs_length(std::size_t n, std::size_t t);
/// fixed_length(i, n) for the first run start i, then the bits outside the run.
std::optional<BitString> runs_encode(const BitString& x, std::size_t t);
BitString runs_decode(const BitString& code, std::size_t n, std::size_t t);

// Balls in urns

/// Urn of each ball, values in [0, n).
using UrnAssignment = std::vector<std::uint64_t>;

/// ceil(log n) + ceil(log C(n,t)) + (n - t) ceil(log n).
std::size_t urns_length(std::size_t n, std::size_t t);
std::optional<BitString> urns_encode(std::span<const std::uint64_t> balls, std::size_t t);
UrnAssignment urns_decode(const BitString& code, std::size_t n, std::size_t t);

// Cliques and independent sets

enum class VertexListMode {
  /// t indices of ceil(log n) bits each.
  indices,
  /// colex rank of the vertex set in ceil(log C(n,t)) bits.
  subset_rank,
};

std::size_t clique_length(std::size_t n, std::size_t t, VertexListMode mode = VertexListMode::indices);
/// Encodes g given a homogeneous set (vertices strictly increasing).
BitString clique_encode(const Graph& g, const HomogeneousSet& s, VertexListMode mode = VertexListMode::indices);
/// Finds a set with find_homogeneous_set and encodes it; n <= 24.
std::optional<BitString> clique_encode(const Graph& g, std::size_t t, VertexListMode mode = VertexListMode::indices);
Graph clique_decode(const BitString& code, std::size_t n, std::size_t t,
                    VertexListMode mode = VertexListMode::indices);

// Insertion sort

/// m_i for i = 2..n, stored at index i - 2.
struct SwapProfile {
  std::vector<std::uint64_t> swaps;

  std::uint64_t total() const;
  /// Length n of the permutation it describes.
  std::size_t size() const { return swaps.size() + 1; }
  bool operator==(const SwapProfile&) const = default;
};

/// Values 1..n in any order.
using Permutation = std::vector<std::uint64_t>;

void require_permutation(std::span<const std::uint64_t> sigma);
SwapProfile insertion_sort_profile(std::span<const std::uint64_t> sigma);
Permutation insertion_sort_reconstruct(const SwapProfile& profile);

/// Stars and bars: rank of (m_2..m_n) among the C(m+n-2, n-2) compositions
/// of m into n-1 parts, via the colex rank of the black-dot positions.
BigUint composition_rank(std::span<const std::uint64_t> parts);
std::vector<std::uint64_t> composition_unrank(std::uint64_t total, std::size_t parts, const BigUint& rank);

/// ceil(log n^2) + ceil(log C(m+n-2, n-2)).
std::size_t inssort_length(std::size_t n, std::uint64_t m);
BitString inssort_encode(std::span<const std::uint64_t> sigma);
Permutation inssort_decode(const BitString& code, std::size_t n);

}  // namespace encbound::witnesses
