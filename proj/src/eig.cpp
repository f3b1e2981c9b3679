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

// Spectral routines ride on LAPACK (zheev/dsyev/zgesvd); this file owns the
// deterministic ordering and phase conventions layered on top.

#include "qjw/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qjw {
namespace {

constexpr double kTieTol = 1e-9;

// Rotate the column so its largest-magnitude entry is real positive.
void fix_phase(Mat& vecs, std::size_t col) {
  const std::size_t n = vecs.rows();
  std::size_t imax = 0;
  double amax = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(vecs(i, col));
    if (a > amax + 1e-14) {
      amax = a;
      imax = i;
    }
  }
  if (amax <= 0.0) return;
  const cplx phase = std::abs(vecs(imax, col)) / vecs(imax, col);
  for (std::size_t i = 0; i < n; ++i) vecs(i, col) *= phase;
}

bool column_lex_less(const Mat& vecs, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < vecs.rows(); ++i) {
    const cplx va = vecs(i, a), vb = vecs(i, b);
    if (std::abs(va.real() - vb.real()) > 1e-12) return va.real() < vb.real();
    if (std::abs(va.imag() - vb.imag()) > 1e-12) return va.imag() < vb.imag();
  }
  return false;
}

EigResult canonicalize(std::vector<double> vals, Mat vecs) {
  const std::size_t n = vals.size();
  for (std::size_t j = 0; j < n; ++j) fix_phase(vecs, j);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (std::abs(vals[a] - vals[b]) > kTieTol) return vals[a] > vals[b];
    return column_lex_less(vecs, a, b);
  });
  EigResult r;
  r.values.resize(n);
  r.vectors = Mat(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    r.values[j] = vals[order[j]];
    for (std::size_t i = 0; i < n; ++i) r.vectors(i, j) = vecs(i, order[j]);
  }
  return r;
}

}  // namespace

EigResult hermitian_eig(const Mat& a) {
  require_hermitian(a, "hermitian_eig");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Mat work = a;
  std::vector<double> vals(a.rows());
  const lapack_int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'U', n,
                                        work.data(), n, vals.data());
  require(info == 0, "hermitian_eig: zheev failed");
  return canonicalize(std::move(vals), std::move(work));
}

std::vector<double> hermitian_eigvals(const Mat& a) {
  require_hermitian(a, "hermitian_eigvals");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  Mat work = a;
  std::vector<double> vals(a.rows());
  const lapack_int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'N', 'U', n,
                                        work.data(), n, vals.data());
  require(info == 0, "hermitian_eigvals: zheev failed");
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

double min_eigenvalue(const Mat& a) {
  auto vals = hermitian_eigvals(a);
  return vals.back();
}

bool is_psd(const Mat& a, double tol) {
  return is_hermitian(a) && min_eigenvalue(a) >= -tol;
}

SvdResult svd(const Mat& a) {
  const lapack_int m = static_cast<lapack_int>(a.rows());
  const lapack_int n = static_cast<lapack_int>(a.cols());
  const lapack_int k = std::min(m, n);
  Mat work = a;
  SvdResult r;
  r.singular_values.resize(k);
  r.u = Mat(a.rows(), k);
  r.vt = Mat(k, a.cols());
  std::vector<double> superb(std::max<lapack_int>(1, k - 1));
  const lapack_int info = LAPACKE_zgesvd(
      LAPACK_ROW_MAJOR, 'S', 'S', m, n, work.data(), n, r.singular_values.data(),
      r.u.data(), k, r.vt.data(), n, superb.data());
  require(info == 0, "svd: zgesvd failed");
  return r;
}

EigResult symmetric_eig(const Mat& a) {
  require(a.square(), "symmetric_eig: not square");
  const std::size_t n = a.rows();
  std::vector<double> real(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      require(std::abs(a(i, j).imag()) < 1e-12, "symmetric_eig: complex input");
      real[i * n + j] = a(i, j).real();
    }
  std::vector<double> vals(n);
  const lapack_int info =
      LAPACKE_dsyev(LAPACK_ROW_MAJOR, 'V', 'U', static_cast<lapack_int>(n),
                    real.data(), static_cast<lapack_int>(n), vals.data());
  require(info == 0, "symmetric_eig: dsyev failed");
  Mat vecs(n, n);
  for (std::size_t i = 0; i < n * n; ++i) vecs.data()[i] = real[i];
  return canonicalize(std::move(vals), std::move(vecs));
}

}  // namespace qjw
