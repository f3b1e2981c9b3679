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

#include "qjw/entangle.hpp"

#include <cmath>

namespace qjw {

namespace {

// Reshape a ket on H_d (x) H_d into the d x d coefficient matrix M with
// psi = sum_rs M_rs e_r (x) e_s.
Mat ket_matrix(const Mat& psi, std::size_t d) {
  require(psi.cols() == 1 && psi.rows() == d * d, "ket_matrix: bad ket shape");
  Mat m(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) m(r, s) = psi(r * d + s, 0);
  return m;
}

void require_unit_ket(const Mat& psi, const char* who) {
  const double n = psi.norm_fro();
  require(std::abs(n - 1.0) < 1e-8, std::string(who) + ": ket not normalized");
}

}  // namespace

SchmidtDecomposition schmidt(const Mat& psi, std::size_t d) {
  require_unit_ket(psi, "schmidt");
  const Mat m = ket_matrix(psi, d);
  SvdResult s = svd(m);
  SchmidtDecomposition out;
  out.dim = d;
  out.coeffs = s.singular_values;
  out.left = std::move(s.u);
  // psi = sum_k sigma_k u_k (x) f_k with f_k[s] = (V^dagger)_{k,s}
  out.right = Mat(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t sidx = 0; sidx < d; ++sidx) out.right(sidx, k) = s.vt(k, sidx);
  return out;
}

double concurrence_pure(const Mat& psi, std::size_t d) {
  require_unit_ket(psi, "concurrence_pure");
  const Mat m = ket_matrix(psi, d);
  const Mat red = matmul(m, m.adjoint());  // Tr_2 |psi><psi|
  const double purity = hs_inner(red, red).real();
  const double v = 2.0 - 2.0 * purity;
  return std::sqrt(std::max(0.0, v));
}

Mat product_povm_probs(const Mat& psi, const Povm& povm) {
  const std::size_t d = povm.dim;
  require_unit_ket(psi, "product_povm_probs");
  const Mat m = ket_matrix(psi, d);
  const Mat mdag = m.adjoint();
  const std::size_t n = povm.effects.size();
  // <psi| A (x) B |psi> = Tr(A M B^T M^dagger)
  std::vector<Mat> right;  // M E_b^T M^dagger
  right.reserve(n);
  for (const auto& e : povm.effects)
    right.push_back(matmul(matmul(m, e.transpose()), mdag));
  Mat probs(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      probs(a, b) = hs_inner(povm.effects[a], right[b]).real();
  return probs;
}

double pvec_norm(const Mat& probs) {
  double s = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    const double p = probs.data()[i].real();
    s += p * p;
  }
  return std::sqrt(s);
}

double concurrence_from_design(double pnorm, double ks, double ka) {
  require(ks > ka && ka >= 0.0, "concurrence_from_design: requires ks > ka >= 0");
  const double num = ks * ks - pnorm * pnorm;
  require(num > -1e-10 * ks * ks,
          "concurrence_from_design: |p| exceeds ks beyond tolerance");
  const double c2 = 4.0 * std::max(0.0, num) / (ks * ks - ka * ka);
  return std::sqrt(c2);
}

WitnessPair witnesses_from_design(const ConicalDesign& design) {
  const std::size_t d = design.dim;
  WitnessPair w;
  w.dim = d;
  w.kplus = design.kplus;
  w.kminus = design.kminus;
  w.n = Mat(d * d, d * d);
  for (const auto& a : design.ops) w.n += kron(a, a);
  w.n_pt = partial_transpose(w.n, d, d);
  Mat model = Mat::identity(d * d) * cplx(w.kplus);
  model += swap_operator(d) * cplx(w.kminus);
  w.build_residual = (w.n - model).norm_fro();
  // closed-form extrema over product / arbitrary states
  w.s_minus = w.kplus;
  w.s_plus = w.kplus + w.kminus;
  w.e_minus = w.kplus - w.kminus;
  w.e_plus_pt = w.kplus + static_cast<double>(d) * w.kminus;
  return w;
}

WitnessVerdicts witness_tests(const Mat& rho, const ConicalDesign& design,
                              double tol_abs) {
  const std::size_t d = design.dim;
  require(rho.square() && rho.rows() == d * d, "witness_tests: state dimension");
  require_hermitian(rho, "witness_tests");
  const WitnessPair w = witnesses_from_design(design);
  WitnessVerdicts v;
  v.tr_n = hs_inner(w.n, rho).real();
  v.tr_npt = hs_inner(w.n_pt, rho).real();
  v.lin_below = v.tr_n < w.s_minus - tol_abs;
  v.lin_above = v.tr_npt > w.s_plus + tol_abs;
  const Mat rho1 = partial_trace(rho, d, d, 2);
  const Mat rho2 = partial_trace(rho, d, d, 1);
  const double p1 = hs_inner(rho1, rho1).real();
  const double p2 = hs_inner(rho2, rho2).real();
  v.quad_rhs = w.kminus * std::sqrt(std::max(0.0, 1.0 - p1) * std::max(0.0, 1.0 - p2));
  const Mat prod = kron(rho1, rho2);
  v.quad_lhs_n = std::abs(hs_inner(w.n, rho - prod).real());
  v.quad_lhs_npt = std::abs(hs_inner(w.n_pt, rho - prod).real());
  v.quad_n = v.quad_lhs_n > v.quad_rhs + tol_abs;
  v.quad_npt = v.quad_lhs_npt > v.quad_rhs + tol_abs;
  return v;
}

Mat werner_state(std::size_t d, double p) {
  require(d >= 2, "werner_state: d must be >= 2");
  require(p >= 0.0 && p <= 1.0, "werner_state: p must lie in [0, 1]");
  const double dd = static_cast<double>(d);
  Mat rho = projector_sym(d) * cplx(2.0 * (1.0 - p) / (dd * (dd + 1.0)));
  rho += projector_asym(d) * cplx(2.0 * p / (dd * (dd - 1.0)));
  return rho;
}

Mat isotropic_state(std::size_t d, double fidelity) {
  require(d >= 2, "isotropic_state: d must be >= 2");
  require(fidelity >= 0.0 && fidelity <= 1.0, "isotropic_state: F must lie in [0, 1]");
  const double dd = static_cast<double>(d);
  const Mat phi = max_entangled_ket(d);
  const Mat proj = matmul(phi, phi.adjoint());
  Mat rho = (Mat::identity(d * d) - proj) * cplx((1.0 - fidelity) / (dd * dd - 1.0));
  rho += proj * cplx(fidelity);
  return rho;
}

WernerBridge werner_from_design(const ConicalDesign& design) {
  const std::size_t d = design.dim;
  const double dd = static_cast<double>(d);
  Mat raw(d * d, d * d);
  for (const auto& a : design.ops) raw += kron(a, a);
  const double norm = raw.trace().real();
  raw *= 1.0 / norm;
  WernerBridge out;
  // match the antisymmetric coefficient: ka/norm = 2p/(d(d-1))
  out.p = design.ka * dd * (dd - 1.0) / (2.0 * norm);
  out.residual = (raw - werner_state(d, out.p)).norm_fro();
  out.in_decomposition_regime = out.p <= (dd - 1.0) / (2.0 * dd) + 1e-12;
  return out;
}

}  // namespace qjw
