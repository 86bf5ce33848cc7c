// AVX2 variants of the arithmetic kernels. Compiled with -mavx2; selected at
// runtime only when the CPU reports AVX2 support.
#include "vdc/kernels.hpp"

#if defined(__AVX2__)

#include <immintrin.h>

namespace vdc::kernels {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(lo) + _mm_cvtsd_f64(_mm_unpackhi_pd(lo, lo));
}

Sum2 sum_gather_avx2(const double* tab_re, const double* tab_im,
                     const uint32_t* idx, size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i id = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    acc_re = _mm256_add_pd(acc_re, _mm256_i32gather_pd(tab_re, id, 8));
    acc_im = _mm256_add_pd(acc_im, _mm256_i32gather_pd(tab_im, id, 8));
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    re += tab_re[idx[i]];
    im += tab_im[idx[i]];
  }
  return {re, im};
}

Sum2 dot_gather_avx2(const double* w, const double* tab_re, const double* tab_im,
                     const uint32_t* idx, size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i id = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    __m256d wv = _mm256_loadu_pd(w + i);
    acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(wv, _mm256_i32gather_pd(tab_re, id, 8)));
    acc_im = _mm256_add_pd(acc_im, _mm256_mul_pd(wv, _mm256_i32gather_pd(tab_im, id, 8)));
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    re += w[i] * tab_re[idx[i]];
    im += w[i] * tab_im[idx[i]];
  }
  return {re, im};
}

Sum2 cdot_gather_avx2(const double* f_re, const double* f_im,
                      const double* tab_re, const double* tab_im,
                      const uint32_t* idx, size_t n) {
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m128i id = _mm_loadu_si128(reinterpret_cast<const __m128i*>(idx + i));
    __m256d tr = _mm256_i32gather_pd(tab_re, id, 8);
    __m256d ti = _mm256_i32gather_pd(tab_im, id, 8);
    __m256d fr = _mm256_loadu_pd(f_re + i);
    __m256d fi = _mm256_loadu_pd(f_im + i);
    acc_re = _mm256_add_pd(acc_re, _mm256_sub_pd(_mm256_mul_pd(fr, tr), _mm256_mul_pd(fi, ti)));
    acc_im = _mm256_add_pd(acc_im, _mm256_add_pd(_mm256_mul_pd(fr, ti), _mm256_mul_pd(fi, tr)));
  }
  double re = hsum(acc_re), im = hsum(acc_im);
  for (; i < n; ++i) {
    double tr = tab_re[idx[i]], ti = tab_im[idx[i]];
    re += f_re[i] * tr - f_im[i] * ti;
    im += f_re[i] * ti + f_im[i] * tr;
  }
  return {re, im};
}

void axpy_avx2(double a, const double* x, double* y, size_t n) {
  __m256d av = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_add_pd(yv, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

size_t argmin_avx2(const double* x, size_t n) {
  // vector pass for the value, scalar pass for the first matching index
  if (n == 0) return 0;
  size_t i = 0;
  __m256d best = _mm256_set1_pd(x[0]);
  for (; i + 4 <= n; i += 4) best = _mm256_min_pd(best, _mm256_loadu_pd(x + i));
  double m = x[0];
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  for (double v : lanes) m = v < m ? v : m;
  for (; i < n; ++i) m = x[i] < m ? x[i] : m;
  for (size_t k = 0; k < n; ++k)
    if (x[k] == m) return k;
  return 0;
}

}  // namespace

const Ops& avx2_ops() {
  static const Ops ops{sum_gather_avx2, dot_gather_avx2, cdot_gather_avx2,
                       axpy_avx2, argmin_avx2};
  return ops;
}

}  // namespace vdc::kernels

#else

namespace vdc::kernels {
const Ops& avx2_ops() { return scalar_ops(); }
}  // namespace vdc::kernels

#endif
