// SPDX-License-Identifier: Apache-2.0
// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include "encbound/kernels.hpp"

namespace encbound::kernels::detail {

namespace {

inline __m256i load(const std::uint64_t* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }

bool any_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    if (!_mm256_testz_si256(load(a + i), load(b + i))) return true;
  }
  for (; i < words; ++i) {
    if ((a[i] & b[i]) != 0) return true;
  }
  return false;
}

// Lane-wise popcount is not in AVX2; extract and use the scalar instruction.
inline std::size_t popcount4(__m256i v) {
  return static_cast<std::size_t>(_mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 0))) +
                                  _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 1))) +
                                  _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 2))) +
                                  _mm_popcnt_u64(static_cast<std::uint64_t>(_mm256_extract_epi64(v, 3))));
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) total += popcount4(_mm256_and_si256(load(a + i), load(b + i)));
  for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i] & b[i]));
  return total;
}

std::size_t popcount(const std::uint64_t* a, std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) total += popcount4(load(a + i));
  for (; i < words; ++i) total += static_cast<std::size_t>(_mm_popcnt_u64(a[i]));
  return total;
}

void or_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(load(dst + i), load(src + i)));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", any_and, popcount_and, popcount, or_into};
  return table;
}

}  // namespace encbound::kernels::detail
