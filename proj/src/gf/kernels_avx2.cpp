// Built with -mavx2; only entered after a runtime CPU check.

#include "fpd/gf/kernels.hpp"

#include <immintrin.h>

namespace fpd::gf::kernels::detail {
namespace {

// Residues below 2^26 keep c*x + y below 2^53, so the product and the
// quotient correction are exact in double precision. The floor of
// sum * (1/p) is off by at most one; the two compares fix that.
inline __m256d reduce_pd(__m256d sum, __m256d pd, __m256d inv_p) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(sum, inv_p));
  __m256d r = _mm256_sub_pd(sum, _mm256_mul_pd(q, pd));
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

inline __m256d load4(const Elem* src) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(src)));
}

inline void store4(Elem* dst, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(dst), _mm256_cvttpd_epi32(v));
}

}  // namespace

void axpy_avx2(Elem* dst, const Elem* src, Elem c, std::size_t n, Elem p) {
  if (c == 0) return;
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256d a0 = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(cd, load4(src + i)));
    const __m256d a1 =
        _mm256_add_pd(load4(dst + i + 4), _mm256_mul_pd(cd, load4(src + i + 4)));
    store4(dst + i, reduce_pd(a0, pd, inv_p));
    store4(dst + i + 4, reduce_pd(a1, pd, inv_p));
  }
  for (; i + 4 <= n; i += 4) {
    const __m256d a = _mm256_add_pd(load4(dst + i), _mm256_mul_pd(cd, load4(src + i)));
    store4(dst + i, reduce_pd(a, pd, inv_p));
  }
  axpy_scalar(dst + i, src + i, c, n - i, p);
}

void scale_avx2(Elem* dst, Elem c, std::size_t n, Elem p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv_p = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d cd = _mm256_set1_pd(static_cast<double>(c));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    store4(dst + i, reduce_pd(_mm256_mul_pd(cd, load4(dst + i)), pd, inv_p));
  scale_scalar(dst + i, c, n - i, p);
}

}  // namespace fpd::gf::kernels::detail
