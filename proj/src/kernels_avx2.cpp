// Copyright 2026 The qjw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2+FMA kernels. Complex doubles are interleaved (re, im), so one __m256d
// carries two complex values. Compiled with -mavx2 -mfma for this file only;
// selection happens at runtime in kernels_dispatch.cpp.

#include "qjw/kernels.hpp"

#include <immintrin.h>

namespace qjw {
namespace {

inline double hsum4(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// (a0 - a1) + (a2 - a3): pairwise signed sum used for the cross terms.
inline double hsum4_signed(__m256d v) {
  const __m256d sign = _mm256_setr_pd(-1.0, 1.0, -1.0, 1.0);
  return hsum4(_mm256_mul_pd(v, sign));
}

cplx cdotc_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_d = _mm256_setzero_pd();   // xr*yr, xi*yi pairs
  __m256d acc_x = _mm256_setzero_pd();   // xi*yr, xr*yi pairs
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    acc_d = _mm256_fmadd_pd(vx, vy, acc_d);
    acc_x = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0x5), vy, acc_x);
  }
  double re = hsum4(acc_d);          // sum xr*yr + xi*yi
  double im = hsum4_signed(acc_x);   // sum xr*yi - xi*yr
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

cplx cdotu_avx2(std::size_t n, const cplx* x, const cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  __m256d acc_d = _mm256_setzero_pd();
  __m256d acc_x = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    acc_d = _mm256_fmadd_pd(vx, vy, acc_d);
    acc_x = _mm256_fmadd_pd(_mm256_permute_pd(vx, 0x5), vy, acc_x);
  }
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum4(_mm256_mul_pd(acc_d, sign));  // sum xr*yr - xi*yi
  double im = hsum4(acc_x);                       // sum xi*yr + xr*yi
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

double ddot_avx2(std::size_t n, const double* x, const double* y) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) s += x[i] * y[i];
  return s;
}

void caxpy_avx2(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const __m256d var = _mm256_set1_pd(a.real());
  const __m256d vai = _mm256_set1_pd(a.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    __m256d vy = _mm256_loadu_pd(yd + 2 * i);
    // (ar*xr - ai*xi, ar*xi + ai*xr): addsub subtracts in even lanes.
    __m256d t = _mm256_fmadd_pd(var, vx, vy);
    vy = _mm256_addsub_pd(t, _mm256_mul_pd(vai, _mm256_permute_pd(vx, 0x5)));
    _mm256_storeu_pd(yd + 2 * i, vy);
  }
  const double ar = a.real(), ai = a.imag();
  for (; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void daxpy_avx2(std::size_t n, double a, const double* x, double* y) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(
        y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double nrm2sq_avx2(std::size_t n, const cplx* x) {
  const double* xd = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d vx = _mm256_loadu_pd(xd + 2 * i);
    acc = _mm256_fmadd_pd(vx, vx, acc);
  }
  double s = hsum4(acc);
  for (; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void cgemm_acc_avx2(std::size_t m, std::size_t k, std::size_t n,
                    const cplx* a, const cplx* b, cplx* c) {
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      if (ail == cplx{}) continue;
      const __m256d var = _mm256_set1_pd(ail.real());
      const __m256d vai = _mm256_set1_pd(ail.imag());
      const double* brow = reinterpret_cast<const double*>(b + l * n);
      double* crow = reinterpret_cast<double*>(c + i * n);
      std::size_t j = 0;
      for (; j + 2 <= n; j += 2) {
        __m256d vb = _mm256_loadu_pd(brow + 2 * j);
        __m256d vc = _mm256_loadu_pd(crow + 2 * j);
        __m256d t = _mm256_fmadd_pd(var, vb, vc);
        vc = _mm256_addsub_pd(t, _mm256_mul_pd(vai, _mm256_permute_pd(vb, 0x5)));
        _mm256_storeu_pd(crow + 2 * j, vc);
      }
      const double ar = ail.real(), ai = ail.imag();
      for (; j < n; ++j) {
        const cplx bv = b[l * n + j];
        c[i * n + j] += cplx(ar * bv.real() - ai * bv.imag(),
                             ar * bv.imag() + ai * bv.real());
      }
    }
  }
}

}  // namespace

const KernelTable* avx2_kernels_impl();

const KernelTable* avx2_kernels_impl() {
  static const KernelTable table = {
      cdotc_avx2, cdotu_avx2,  ddot_avx2,      caxpy_avx2,
      daxpy_avx2, nrm2sq_avx2, cgemm_acc_avx2, "avx2"};
  return &table;
}

}  // namespace qjw
