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

#ifndef QJW_KERNELS_HPP
#define QJW_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string>

namespace qjw {

using cplx = std::complex<double>;

// Hot arithmetic loops used by the matrix layer. Every entry has a scalar
// reference implementation and, on x86-64, an AVX2+FMA variant selected at
// runtime. Both variants must agree to ~1 ulp-scale rounding differences;
// tests/test_kernels.cpp pins that contract.
struct KernelTable {
  // sum_i conj(x[i]) * y[i]
  cplx (*cdotc)(std::size_t n, const cplx* x, const cplx* y);
  // sum_i x[i] * y[i]   (no conjugation)
  cplx (*cdotu)(std::size_t n, const cplx* x, const cplx* y);
  // sum_i x[i] * y[i] over doubles
  double (*ddot)(std::size_t n, const double* x, const double* y);
  // y[i] += a * x[i]
  void (*caxpy)(std::size_t n, cplx a, const cplx* x, cplx* y);
  // y[i] += a * x[i] over doubles
  void (*daxpy)(std::size_t n, double a, const double* x, double* y);
  // sum_i |x[i]|^2
  double (*nrm2sq)(std::size_t n, const cplx* x);
  // C (m x n) += A (m x k) * B (k x n), all row-major contiguous.
  void (*cgemm_acc)(std::size_t m, std::size_t k, std::size_t n,
                    const cplx* a, const cplx* b, cplx* c);
  const char* name;
};

// Active table: AVX2 when the CPU supports it, else scalar. The environment
// variable QJW_KERNELS=scalar|avx2 forces a backend (avx2 falls back to
// scalar when unsupported).
const KernelTable& kernels();

const KernelTable& scalar_kernels();
// Null when this build or CPU lacks AVX2.
const KernelTable* avx2_kernels();

std::string kernel_backend_name();

}  // namespace qjw

#endif
