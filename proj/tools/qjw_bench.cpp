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

// Micro-benchmarks for the kernel backends and the closure engine.
// Not a test; numbers are for eyeballing scalar-vs-SIMD ratios.

#include <chrono>
#include <cstdio>
#include <vector>

#include "qjw/jordan.hpp"

using namespace qjw;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void bench_kernels(const KernelTable& k) {
  SeededRng rng(1);
  const std::size_t n = 2048;
  std::vector<cplx> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = cplx(rng.gaussian(), rng.gaussian());
    y[i] = cplx(rng.gaussian(), rng.gaussian());
  }
  const std::size_t reps = 200000;

  auto t0 = Clock::now();
  cplx sink = 0.0;
  for (std::size_t r = 0; r < reps; ++r) sink += k.cdotc(n, x.data(), y.data());
  const double dot_s = seconds_since(t0);

  t0 = Clock::now();
  for (std::size_t r = 0; r < reps; ++r) k.caxpy(n, cplx(1e-9, -1e-9), x.data(), y.data());
  const double axpy_s = seconds_since(t0);

  const std::size_t m = 16;
  std::vector<cplx> a(m * m), b(m * m), c(m * m);
  for (std::size_t i = 0; i < m * m; ++i) {
    a[i] = cplx(rng.gaussian(), rng.gaussian());
    b[i] = cplx(rng.gaussian(), rng.gaussian());
  }
  const std::size_t gemm_reps = 100000;
  t0 = Clock::now();
  for (std::size_t r = 0; r < gemm_reps; ++r)
    k.cgemm_acc(m, m, m, a.data(), b.data(), c.data());
  const double gemm_s = seconds_since(t0);

  const double dot_gflops = 8.0 * n * reps / dot_s * 1e-9;
  const double axpy_gflops = 8.0 * n * reps / axpy_s * 1e-9;
  const double gemm_gflops = 8.0 * m * m * m * gemm_reps / gemm_s * 1e-9;
  std::printf("%-8s cdotc %7.2f GF/s   caxpy %7.2f GF/s   cgemm16 %7.2f GF/s\n",
              k.name, dot_gflops, axpy_gflops, gemm_gflops);
  if (std::abs(sink) < 0.0) std::printf("?");  // keep the accumulator alive
}

void bench_closure() {
  EmbeddedEjc q2 = standard_embedding(parse_descriptor("quat:2"));
  auto t0 = Clock::now();
  TensorResult r = canonical_tensor(q2, q2);
  std::printf("closure  M2(H) (.) M2(H): dim %zu identified %s in %.3fs\n",
              r.dim, r.identified.str().c_str(), seconds_since(t0));
}

}  // namespace

int main() {
  std::printf("active backend: %s\n", kernel_backend_name().c_str());
  bench_kernels(scalar_kernels());
  if (const KernelTable* simd = avx2_kernels()) bench_kernels(*simd);
  bench_closure();
  return 0;
}
