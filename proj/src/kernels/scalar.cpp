#include "kernels_impl.hpp"

namespace cyclolab::kernels::detail {

bool axpy_i64_scalar(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                     std::int64_t s) {
  bool ok = true;
  const std::size_t n = src.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t prod;
    ok &= !__builtin_mul_overflow(src[i], s, &prod);
    ok &= !__builtin_add_overflow(dst[i], prod, &dst[i]);
  }
  return ok;
}

void mul_acc_u64_scalar(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
                        std::uint64_t s) {
  const std::size_t n = src.size();
  for (std::size_t i = 0; i < n; ++i) acc[i] += s * src[i];
}

}  // namespace cyclolab::kernels::detail
