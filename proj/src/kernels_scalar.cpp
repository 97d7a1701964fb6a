// SPDX-License-Identifier: Apache-2.0
#include <bit>

#include "encbound/kernels.hpp"

namespace encbound::kernels {

namespace {

bool any_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", any_and, popcount_and, popcount, or_into};
  return table;
}

}  // namespace encbound::kernels
