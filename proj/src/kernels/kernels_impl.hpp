#pragma once

#include "cyclolab/kernels.hpp"

namespace cyclolab::kernels::detail {

bool axpy_i64_scalar(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                     std::int64_t s);
void mul_acc_u64_scalar(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
                        std::uint64_t s);

#if defined(__x86_64__) || defined(_M_X64)
#define CYCLOLAB_HAVE_AVX2_KERNELS 1
bool axpy_i64_avx2(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                   std::int64_t s);
void mul_acc_u64_avx2(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
                      std::uint64_t s);
#endif

}  // namespace cyclolab::kernels::detail
