// SPDX-License-Identifier: Apache-2.0
#include "encbound/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace encbound::kernels {

#if defined(ENCBOUND_HAVE_AVX2_TU)
namespace detail {
const KernelTable& avx2_table();
}
#endif

const KernelTable* avx2() {
#if defined(ENCBOUND_HAVE_AVX2_TU)
  static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable* chosen = [] {
    const char* forced = std::getenv("ENCBOUND_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar();
    const KernelTable* fast = avx2();
    return fast != nullptr ? fast : &scalar();
  }();
  return *chosen;
}

}  // namespace encbound::kernels
