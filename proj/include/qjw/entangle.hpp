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

#ifndef QJW_ENTANGLE_HPP
#define QJW_ENTANGLE_HPP

#include "qjw/designs.hpp"

namespace qjw {

struct SchmidtDecomposition {
  std::size_t dim = 0;
  std::vector<double> coeffs;  // descending, sum of squares 1
  Mat left;                    // columns e_j
  Mat right;                   // columns f_j
};

// psi = sum_j lambda_j e_j (x) f_j for a unit ket on H_d (x) H_d.
SchmidtDecomposition schmidt(const Mat& psi, std::size_t d);

// sqrt(2 - 2 Tr((Tr_2 |psi><psi|)^2)); equals sqrt(2 - 2 sum lambda^4).
double concurrence_pure(const Mat& psi, std::size_t d);

// p_{ab} = <psi| E_a (x) E_b |psi> for a product of two copies of a POVM.
// Row index a, column index b; entries are real.
Mat product_povm_probs(const Mat& psi, const Povm& povm);

double pvec_norm(const Mat& probs);

// C = 2 sqrt((ks^2 - |p|^2)/(ks^2 - ka^2)); negatives within tolerance of
// zero are clamped (|p| can exceed ks by rounding on near-product states).
double concurrence_from_design(double pnorm, double ks, double ka);

// N = sum E (x) E = k+ 1 + k- W and its partial transpose, along with the
// separable / global extrema of both.
struct WitnessPair {
  std::size_t dim = 0;
  Mat n;
  Mat n_pt;
  double kplus = 0, kminus = 0;
  double s_minus = 0;   // inf over product states of <N>
  double s_plus = 0;    // sup over product states of <N> (and of <N_PT>)
  double e_minus = 0;   // inf over all states of <N>
  double e_plus_pt = 0; // sup over all states of <N_PT>
  double build_residual = 0;
};
WitnessPair witnesses_from_design(const ConicalDesign& design);

struct WitnessVerdicts {
  double tr_n = 0, tr_npt = 0;
  bool lin_below = false;  // Tr(rho N)    < s- : entangled
  bool lin_above = false;  // Tr(rho N_PT) > s+ : entangled
  double quad_lhs_n = 0, quad_lhs_npt = 0, quad_rhs = 0;
  bool quad_n = false, quad_npt = false;
};
// Linear detection from below/above plus the quadratic criteria
// |Tr(N(rho - rho1 (x) rho2))| <= k- sqrt((1-Tr rho1^2)(1-Tr rho2^2)).
WitnessVerdicts witness_tests(const Mat& rho, const ConicalDesign& design,
                              double tol_abs = 1e-12);

// rho_W = 2(1-p)/(d(d+1)) Pi_sym + 2p/(d(d-1)) Pi_asym; entangled iff p > 1/2.
Mat werner_state(std::size_t d, double p);
// rho_I = (1-F)/(d^2-1) (1 - |Phi+><Phi+|) + F |Phi+><Phi+|.
Mat isotropic_state(std::size_t d, double fidelity);

struct WernerBridge {
  double p = 0;
  double residual = 0;            // vs werner_state(d, p) after normalization
  bool in_decomposition_regime = false;  // p <= (d-1)/(2d)
};
// Normalized sum A (x) A read as a Werner state.
WernerBridge werner_from_design(const ConicalDesign& design);

}  // namespace qjw

#endif
