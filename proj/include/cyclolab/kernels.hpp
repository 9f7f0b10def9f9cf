#pragma once

// Data-parallel inner loops shared by the integer and modular polynomial
// code. Every kernel has a portable scalar reference and, where the CPU
// supports it, an AVX2 variant. The active table is chosen once at startup;
// CYCLOLAB_SIMD=scalar in the environment forces the reference kernels.

#include <cstdint>
#include <span>
#include <string_view>

namespace cyclolab::kernels {

// dst[i] += s * src[i] over int64. Returns false if any product or sum
// overflowed, in which case dst holds unspecified values.
using AxpyI64Fn = bool (*)(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                           std::int64_t s);

// acc[i] += s * src[i] with wrapping uint64 arithmetic. Callers guarantee
// s < 2^32, src[i] < 2^32 and that the accumulators do not wrap.
using MulAccU64Fn = void (*)(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
                             std::uint64_t s);

struct KernelTable {
  std::string_view name;
  AxpyI64Fn axpy_i64;
  MulAccU64Fn mul_acc_u64;
};

const KernelTable& scalar_table() noexcept;

// nullptr when the build or the running CPU lacks AVX2.
const KernelTable* avx2_table() noexcept;

const KernelTable& active() noexcept;

inline bool axpy_i64(std::span<std::int64_t> dst, std::span<const std::int64_t> src,
                     std::int64_t s) {
  return active().axpy_i64(dst, src, s);
}

inline void mul_acc_u64(std::span<std::uint64_t> acc, std::span<const std::uint64_t> src,
                        std::uint64_t s) {
  active().mul_acc_u64(acc, src, s);
}

}  // namespace cyclolab::kernels
