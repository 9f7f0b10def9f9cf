#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace cyclolab::kernels {

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{"scalar", &detail::axpy_i64_scalar, &detail::mul_acc_u64_scalar};
  return table;
}

const KernelTable* avx2_table() noexcept {
#ifdef CYCLOLAB_HAVE_AVX2_KERNELS
  static const KernelTable table{"avx2", &detail::axpy_i64_avx2, &detail::mul_acc_u64_avx2};
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& active() noexcept {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* env = std::getenv("CYCLOLAB_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_table();
    if (const KernelTable* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace cyclolab::kernels
