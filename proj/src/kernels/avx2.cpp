#include "kernels_impl.hpp"

#ifdef CYCLOLAB_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace cyclolab::kernels::detail {

namespace {

inline bool fits_i32(std::int64_t v) { return v >= INT32_MIN && v <= INT32_MAX; }

}  // namespace

// Lanes use _mm256_mul_epi32, which is exact when both factors fit in 32
// bits. A block containing a wider source value is handed to the scalar
// path before anything in it is written.
__attribute__((target("avx2"))) bool axpy_i64_avx2(std::span<std::int64_t> dst,
                                                   std::span<const std::int64_t> src,
                                                   std::int64_t s) {
  const std::size_t n = src.size();
  if (!fits_i32(s)) return axpy_i64_scalar(dst, src, s);

  const __m256i vs = _mm256_set1_epi64x(s);
  const __m256i bias = _mm256_set1_epi64x(0x80000000LL);
  const __m256i zero = _mm256_setzero_si256();
  __m256i overflow = zero;
  bool ok = true;

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i high = _mm256_srli_epi64(_mm256_add_epi64(x, bias), 32);
    if (!_mm256_testz_si256(high, high)) {
      ok &= axpy_i64_scalar(dst.subspan(i, 4), src.subspan(i, 4), s);
      continue;
    }
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i prod = _mm256_mul_epi32(x, vs);
    const __m256i sum = _mm256_add_epi64(d, prod);
    // Signed overflow iff both operands differ in sign from the result.
    overflow = _mm256_or_si256(
        overflow, _mm256_and_si256(_mm256_xor_si256(d, sum), _mm256_xor_si256(prod, sum)));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), sum);
  }
  if (i < n) ok &= axpy_i64_scalar(dst.subspan(i), src.subspan(i), s);
  return ok && _mm256_movemask_pd(_mm256_castsi256_pd(overflow)) == 0;
}

__attribute__((target("avx2"))) void mul_acc_u64_avx2(std::span<std::uint64_t> acc,
                                                      std::span<const std::uint64_t> src,
                                                      std::uint64_t s) {
  const std::size_t n = src.size();
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i + 4));
    __m256i a0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc.data() + i));
    __m256i a1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc.data() + i + 4));
    a0 = _mm256_add_epi64(a0, _mm256_mul_epu32(x0, vs));
    a1 = _mm256_add_epi64(a1, _mm256_mul_epu32(x1, vs));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc.data() + i), a0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc.data() + i + 4), a1);
  }
  for (; i + 4 <= n; i += 4) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc.data() + i));
    a = _mm256_add_epi64(a, _mm256_mul_epu32(x, vs));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc.data() + i), a);
  }
  for (; i < n; ++i) acc[i] += s * src[i];
}

}  // namespace cyclolab::kernels::detail

#endif
