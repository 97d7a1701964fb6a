// SPDX-License-Identifier: Apache-2.0
#pragma once

// Word-parallel bitset kernels used by the graph simulators. A scalar
// reference and an AVX2 variant exist; the variant is picked at runtime.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace encbound::kernels {

struct KernelTable {
  std::string_view name;
  /// Whether (a & b) has any set bit.
  bool (*any_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// popcount(a & b).
  std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  /// popcount(a).
  std::size_t (*popcount)(const std::uint64_t* a, std::size_t words);
  /// dst |= src.
  void (*or_into)(std::uint64_t* dst, const std::uint64_t* src, std::size_t words);
};

const KernelTable& scalar();
/// nullptr when the build or the CPU lacks AVX2.
const KernelTable* avx2();
/// Best table for this CPU. ENCBOUND_KERNELS=scalar forces the reference.
const KernelTable& active();

}  // namespace encbound::kernels
