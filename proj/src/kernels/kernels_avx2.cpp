// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <cmath>

#include "msq/kernels.hpp"

namespace msq::kernels::avx2 {
namespace {

inline double reduce1(double v, ModParams m) {
  const double q = std::floor(v * m.pinv);
  double r = std::fma(-q, m.p, v);
  if (r < 0) r += m.p;
  if (r >= m.p) r -= m.p;
  return r;
}

inline __m256d reduce4(__m256d v, __m256d p, __m256d pinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, pinv));
  __m256d r = _mm256_fnmadd_pd(q, p, v);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), p));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, p, _CMP_GE_OQ), p));
  return r;
}

}  // namespace

void axpy_mod(double* y, const double* x, double c, std::size_t n, ModParams m) {
  const __m256d vp = _mm256_set1_pd(m.p);
  const __m256d vpinv = _mm256_set1_pd(m.pinv);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, reduce4(_mm256_fmadd_pd(vc, vx, vy), vp, vpinv));
  }
  for (; i < n; ++i) y[i] = reduce1(std::fma(c, x[i], y[i]), m);
}

void scale_mod(double* y, double c, std::size_t n, ModParams m) {
  const __m256d vp = _mm256_set1_pd(m.p);
  const __m256d vpinv = _mm256_set1_pd(m.pinv);
  const __m256d vc = _mm256_set1_pd(c);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vy = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, reduce4(_mm256_mul_pd(vc, vy), vp, vpinv));
  }
  for (; i < n; ++i) y[i] = reduce1(c * y[i], m);
}

double dot_mod(const double* x, const double* y, std::size_t n, ModParams m) {
  const __m256d vp = _mm256_set1_pd(m.p);
  const __m256d vpinv = _mm256_set1_pd(m.pinv);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d vx = _mm256_loadu_pd(x + i);
    const __m256d vy = _mm256_loadu_pd(y + i);
    acc = reduce4(_mm256_fmadd_pd(vx, vy, acc), vp, vpinv);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = 0;
  for (double lane : lanes) s = reduce1(s + lane, m);
  for (; i < n; ++i) s = reduce1(std::fma(x[i], y[i], s), m);
  return s;
}

}  // namespace msq::kernels::avx2
