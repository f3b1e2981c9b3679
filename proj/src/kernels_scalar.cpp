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

// Reference kernels. Plain loops over (re, im) pairs; these define the
// semantics the SIMD variants are tested against.

#include "qjw/kernels.hpp"

namespace qjw {
namespace {

cplx cdotc_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

cplx cdotu_scalar(std::size_t n, const cplx* x, const cplx* y) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    const double yr = y[i].real(), yi = y[i].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

double ddot_scalar(std::size_t n, const double* x, const double* y) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
  return s;
}

void caxpy_scalar(std::size_t n, cplx a, const cplx* x, cplx* y) {
  const double ar = a.real(), ai = a.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[i].real(), xi = x[i].imag();
    y[i] += cplx(ar * xr - ai * xi, ar * xi + ai * xr);
  }
}

void daxpy_scalar(std::size_t n, double a, const double* x, double* y) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double nrm2sq_scalar(std::size_t n, const cplx* x) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += x[i].real() * x[i].real() + x[i].imag() * x[i].imag();
  }
  return s;
}

void cgemm_acc_scalar(std::size_t m, std::size_t k, std::size_t n,
                      const cplx* a, const cplx* b, cplx* c) {
  // i-l-j order keeps the inner loop streaming over rows of B and C.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const cplx ail = a[i * k + l];
      if (ail == cplx{}) continue;
      const double ar = ail.real(), ai = ail.imag();
      const cplx* brow = b + l * n;
      cplx* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const double br = brow[j].real(), bi = brow[j].imag();
        crow[j] += cplx(ar * br - ai * bi, ar * bi + ai * br);
      }
    }
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table = {
      cdotc_scalar, cdotu_scalar,  ddot_scalar,      caxpy_scalar,
      daxpy_scalar, nrm2sq_scalar, cgemm_acc_scalar, "scalar"};
  return table;
}

}  // namespace qjw
