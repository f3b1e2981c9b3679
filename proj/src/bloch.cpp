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

#include "qjw/bloch.hpp"

#include <cmath>

namespace qjw {

BlochVector state_to_bloch(const Mat& rho) {
  require_hermitian(rho, "state_to_bloch");
  const std::size_t d = rho.rows();
  require(std::abs(rho.trace() - cplx(1.0)) < 1e-8, "state_to_bloch: trace != 1");
  require(min_eigenvalue(rho) > -tol::psd, "state_to_bloch: input not PSD");
  Mat b = rho * cplx(static_cast<double>(d));
  b -= Mat::identity(d);
  return {d, std::move(b)};
}

Mat bloch_to_state(const BlochVector& b) {
  Mat rho = b.op + Mat::identity(b.dim);
  rho *= 1.0 / static_cast<double>(b.dim);
  return rho;
}

double bloch_inner(const BlochVector& b1, const BlochVector& b2) {
  require(b1.dim == b2.dim, "bloch_inner: dimension mismatch");
  const double d = static_cast<double>(b1.dim);
  return hs_inner(b1.op, b2.op).real() / (d * (d - 1.0));
}

double bloch_norm(const BlochVector& b) {
  const double d = static_cast<double>(b.dim);
  const double f = b.op.norm_fro();
  return f / std::sqrt(d * (d - 1.0));
}

Mat bloch_projector_apply(const Mat& x) {
  require(x.square(), "bloch_projector_apply: not square");
  const std::size_t d = x.rows();
  Mat out = x;
  const cplx t = x.trace() / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) out(i, i) -= t;
  return out;
}

bool in_bloch_body(const BlochVector& b, double tol_psd) {
  return min_eigenvalue(bloch_to_state(b)) >= -tol_psd;
}

std::vector<Mat> seeded_traceless_basis(std::size_t d, SeededRng& rng) {
  std::vector<Mat> basis = gell_mann_basis(d);
  const std::size_t m = basis.size();
  // random real orthogonal mixing of coefficients (Gram matrices invariant)
  std::vector<double> o(m * m);
  for (auto& v : o) v = rng.gaussian();
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      double c = 0.0;
      for (std::size_t i = 0; i < m; ++i) c += o[i * m + k] * o[i * m + j];
      for (std::size_t i = 0; i < m; ++i) o[i * m + j] -= c * o[i * m + k];
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < m; ++i) nrm += o[i * m + j] * o[i * m + j];
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < m; ++i) o[i * m + j] /= nrm;
  }
  std::vector<Mat> rotated;
  rotated.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    Mat acc(d, d);
    for (std::size_t b = 0; b < m; ++b)
      kernels().caxpy(acc.size(), o[b * m + a], basis[b].data(), acc.data());
    rotated.push_back(std::move(acc));
  }
  return rotated;
}

std::vector<BlochVector> regular_simplex(std::size_t n, double kappa,
                                         std::size_t d, std::uint64_t seed) {
  require(d >= 2, "regular_simplex: d must be >= 2");
  require(n >= 2 && n <= d * d, "regular_simplex: need 2 <= n <= d^2");
  require(kappa > 0.0, "regular_simplex: kappa must be positive");

  // Vertex coordinates: kappa*sqrt(n/(n-1)) (e_a - 1/n) in the hyperplane
  // orthogonal to (1,...,1), expressed in the Helmert basis w_r.
  const double scale = kappa * std::sqrt(static_cast<double>(n) / (n - 1.0));
  std::vector<double> coords((n - 1) * n, 0.0);  // coords[a*n + j]
  for (std::size_t a = 0; a < n - 1; ++a) {
    const double c = 1.0 / std::sqrt(static_cast<double>((a + 1) * (a + 2)));
    for (std::size_t j = 0; j < n; ++j) {
      double w = 0.0;
      if (j <= a) w = c;
      else if (j == a + 1) w = -c * static_cast<double>(a + 1);
      // w_a . (e_j - 1/n) = w_a[j] since w_a sums to zero
      coords[a * n + j] = scale * w;
    }
  }

  SeededRng rng(seed);
  std::vector<Mat> dirs = seeded_traceless_basis(d, rng);
  const double unit = std::sqrt(static_cast<double>(d) * (d - 1.0));
  std::vector<BlochVector> out;
  out.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat b(d, d);
    for (std::size_t a = 0; a < n - 1; ++a) {
      const double c = coords[a * n + j] * unit;
      if (c != 0.0) kernels().caxpy(b.size(), c, dirs[a].data(), b.data());
    }
    out.push_back({d, std::move(b)});
  }
  return out;
}

bool purity_test(const Mat& rho, double tol_purity) {
  require_hermitian(rho, "purity_test");
  require(std::abs(rho.trace() - cplx(1.0)) < 1e-8, "purity_test: trace != 1");
  const Mat rho2 = matmul(rho, rho);
  const double t2 = rho2.trace().real();
  const double t3 = hs_inner(rho, rho2).real();  // Tr(rho^3), rho Hermitian
  return std::abs(t2 - 1.0) <= tol_purity && std::abs(t3 - 1.0) <= tol_purity;
}

}  // namespace qjw
