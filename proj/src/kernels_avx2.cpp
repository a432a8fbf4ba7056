// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.

// AVX2+FMA variants. This translation unit is compiled with -mavx2 -mfma;
// callers must route through the dispatch table so these are only executed
// on hosts that support them.

#include "oplab/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace oplab::kern::avx2 {

namespace {

// Interleaved layout: a 256-bit lane holds two complex doubles
// [re0, im0, re1, im1]. Complex product p = a*x with broadcast scalar a:
//   even lane: ar*xr - ai*xi,  odd lane: ar*xi + ai*xr
// which is exactly fmaddsub(x, ar, swap(x)*ai).
inline __m256d cmul_broadcast(__m256d xv, __m256d ar, __m256d ai) {
  const __m256d xs = _mm256_permute_pd(xv, 0b0101);
  return _mm256_fmaddsub_pd(xv, ar, _mm256_mul_pd(xs, ai));
}

const __m256d kConjMask =
    _mm256_castsi256_pd(_mm256_set_epi64x(0x8000000000000000LL, 0,
                                          0x8000000000000000LL, 0));

}  // namespace

void caxpy(cxd* y_, cxd a, const cxd* x_, std::size_t n) {
  double* y = reinterpret_cast<double*>(y_);
  const double* x = reinterpret_cast<const double*>(x_);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const std::size_t m = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(yv, cmul_broadcast(xv, ar, ai)));
  }
  for (; i + 2 <= m; i += 2) {
    const double xr = x[i], xi = x[i + 1];
    y[i] += a.real() * xr - a.imag() * xi;
    y[i + 1] += a.real() * xi + a.imag() * xr;
  }
}

void caxpy_conj(cxd* y_, cxd a, const cxd* x_, std::size_t n) {
  double* y = reinterpret_cast<double*>(y_);
  const double* x = reinterpret_cast<const double*>(x_);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const std::size_t m = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d xv = _mm256_xor_pd(_mm256_loadu_pd(x + i), kConjMask);
    const __m256d yv = _mm256_loadu_pd(y + i);
    _mm256_storeu_pd(y + i, _mm256_add_pd(yv, cmul_broadcast(xv, ar, ai)));
  }
  for (; i + 2 <= m; i += 2) {
    const double xr = x[i], xi = -x[i + 1];
    y[i] += a.real() * xr - a.imag() * xi;
    y[i + 1] += a.real() * xi + a.imag() * xr;
  }
}

void cscale(cxd* x_, cxd a, std::size_t n) {
  double* x = reinterpret_cast<double*>(x_);
  const __m256d ar = _mm256_set1_pd(a.real());
  const __m256d ai = _mm256_set1_pd(a.imag());
  const std::size_t m = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    _mm256_storeu_pd(x + i, cmul_broadcast(xv, ar, ai));
  }
  for (; i + 2 <= m; i += 2) {
    const double xr = x[i], xi = x[i + 1];
    x[i] = a.real() * xr - a.imag() * xi;
    x[i + 1] = a.real() * xi + a.imag() * xr;
  }
}

void conj_copy(cxd* y_, const cxd* x_, std::size_t n) {
  double* y = reinterpret_cast<double*>(y_);
  const double* x = reinterpret_cast<const double*>(x_);
  const std::size_t m = 2 * n;
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_xor_pd(_mm256_loadu_pd(x + i), kConjMask));
  }
  for (; i + 2 <= m; i += 2) {
    y[i] = x[i];
    y[i + 1] = -x[i + 1];
  }
}

double norm_sq(const cxd* x_, std::size_t n) {
  const double* x = reinterpret_cast<const double*>(x_);
  const std::size_t m = 2 * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= m; i += 4) {
    const __m256d xv = _mm256_loadu_pd(x + i);
    acc = _mm256_fmadd_pd(xv, xv, acc);
  }
  double buf[4];
  _mm256_storeu_pd(buf, acc);
  double s = (buf[0] + buf[2]) + (buf[1] + buf[3]);
  for (; i < m; ++i) s += x[i] * x[i];
  return s;
}

}  // namespace oplab::kern::avx2

#endif  // x86_64
