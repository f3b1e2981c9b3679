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

#ifndef QJW_DESIGNS_HPP
#define QJW_DESIGNS_HPP

#include <string>
#include <vector>

#include "qjw/bloch.hpp"
#include "qjw/linalg.hpp"

namespace qjw {

struct Povm {
  std::size_t dim = 0;
  std::vector<Mat> effects;
};

// Validates PSD effects summing to the identity.
Povm make_povm(std::size_t dim, std::vector<Mat> effects);

// A finite set {A_j} of nonzero PSD operators whose second tensor moment is
// k_s Pi_sym + k_a Pi_asym. Cached alongside: k_+- = (k_s +- k_a)/2, the
// traces t_j, their RMS t, and the contraction parameter kappa (the
// trace-weighted RMS Bloch norm).
struct ConicalDesign {
  std::size_t dim = 0;
  std::vector<Mat> ops;
  double ks = 0, ka = 0, kplus = 0, kminus = 0;
  std::vector<double> traces;
  double t_rms = 0;
  double kappa = 0;

  std::size_t count() const { return ops.size(); }
};

// Solve the 2x2 linear system from sum (Tr A_j)^2 and sum Tr(A_j^2):
//   sum (Tr A_j)^2  = k_s d(d+1)/2 + k_a d(d-1)/2
//   sum Tr(A_j^2)   = k_s d(d+1)/2 - k_a d(d-1)/2
std::pair<double, double> design_constants(const std::vector<Mat>& ops);

// Populate cached constants; does not verify the design conditions.
ConicalDesign make_design(std::size_t dim, std::vector<Mat> ops);

struct ConditionCheck {
  std::string name;
  double residual = 0;  // relative to k_s
  bool pass = false;
};

// Residuals for the five equivalent characterizations, each scaled by k_s,
// plus the constants extracted independently from three of them.
struct DesignReport {
  std::size_t dim = 0, count = 0;
  double ks = 0, ka = 0;
  double kplus_from_iii = 0, kminus_from_iii = 0;
  double kplus_from_v = 0, kminus_from_v = 0;
  std::vector<ConditionCheck> conditions;  // (i) .. (v)
  bool spanning = false;
  bool pass = false;
  std::string failure;
};

// Checks, in order:
//   (i)   invariance of sum A (x) A under 50 seeded Haar conjugations
//   (ii)  sum A (x) A        = k_s Pi_sym + k_a Pi_asym
//   (iii) sum A (x) conj(A)  = k_+ 1 + d k_- |Phi+><Phi+|
//   (iv)  sum |A>><<conj(A)| = k_+ |1>><<1| + k_- T
//   (v)   sum |A>><<A|       = k_+ |1>><<1| + k_- I
// Spanning holds iff k_- > 1e-8 k_+.
DesignReport verify_design(const std::vector<Mat>& ops, double tol_rel = 1e-9,
                           std::uint64_t seed = 12, std::size_t n_unitaries = 50);

// d^2 effects E_a = (B_a + 1)/d^2 over a (d^2, kappa)-regular simplex.
// Constructible for kappa <= 1/(d-1); larger kappa is accepted but the PSD
// check may reject it.
ConicalDesign build_sim(std::size_t d, double kappa, std::uint64_t seed);

// d(d+1) effects in d+1 bands of mutually orthogonal (d, eta)-regular
// simplices, E = (B + 1)/(d(d+1)).
ConicalDesign build_mum(std::size_t d, double eta, std::uint64_t seed);

// d^2 unit-rank projectors with Tr(pi_a pi_b) = (d delta + 1)/(d+1).
// Built-in for d in {2, 3}: the Bloch tetrahedron, and the fiducial orbit
// of (0, 1, -1)/sqrt(2) under the Weyl-Heisenberg group.
std::vector<Mat> build_sic(std::size_t d);

// d(d+1) unit-rank projectors forming d+1 mutually unbiased bases;
// d prime, d <= 7.
std::vector<Mat> build_mub(std::size_t d);

struct ProjectiveCheck {
  bool pass = false;
  double value = 0;   // sum of squared pairwise traces
  double target = 0;  // 2 n^2 / (d (d+1))
};
ProjectiveCheck is_projective_2design(const std::vector<Mat>& projectors,
                                      double tol_rel = 1e-9);

// E_j = A_j d t_j / (n t^2); a POVM for every conical 2-design.
Povm design_povm(const ConicalDesign& design);

struct ExpandResult {
  std::vector<double> coeffs;
  Mat reconstruction;
  double residual;
};
// L = sum_j c_j A_j with c_j = (Tr(A_j L) - k_+ Tr(A_j) Tr(L)/(d k_+ + k_-))/k_-.
// Throws when the reconstruction residual exceeds max_residual (a non-design
// input).
ExpandResult expand_operator(const Mat& l, const ConicalDesign& design,
                             double max_residual = 1e-6);

struct PurityProbe {
  double quad = 0, quad_target = 0;
  double cube = 0, cube_target = 0;
  bool pure = false;
};
// Purity from projective 2-design POVM statistics: rho is pure iff
// sum p^2 = 2d/(n(d+1)) and the weighted triple overlap hits (d+7)/(d+1)^3.
PurityProbe purity_from_probs(const std::vector<double>& probs,
                              const std::vector<Mat>& projectors,
                              double tol_abs = 1e-8);

// Candidate homogeneous design projector: real symmetric n x n, idempotent,
// trace d^2-1, zero row sums, constant diagonal (d^2-1)/n bounding the
// off-diagonal entries.
struct CandidateProjector {
  std::size_t n = 0;
  std::size_t d = 0;
  Mat p;
};

CandidateProjector make_candidate_projector(std::size_t d, Mat p,
                                            double tol_abs = 1e-9);

// Gram of a regular d^2-vertex simplex: 1 - J/n.
CandidateProjector simplex_projector(std::size_t d);
// Block diagonal of d+1 orthogonal d-vertex simplex Grams.
CandidateProjector mum_block_projector(std::size_t d);

// Gram(B)/lambda for a homogeneous design; lambda = n d kappa^2/(d+1).
std::pair<CandidateProjector, double> homogeneous_gram(const ConicalDesign& design,
                                                       double tol_abs = 1e-8);

// Inball construction: B_j = sqrt(nd/((d+1)(d-1)^2)) sum_a u_{a,j} D_a over
// the rank basis u of P, giving kappa = 1/(d-1); A_j = (1 + B_j) t/d.
ConicalDesign build_from_projector(const CandidateProjector& p, double trace_t,
                                   std::uint64_t seed);

// 1-design lift: constant Bloch norms, sum B_j = 0, and
// sum |B><B| = lambda Pi_Bloch.
bool lift_check(const ConicalDesign& design, double tol_rel = 1e-8);

struct MinimalPovmCheck {
  bool is_sim = false;
  double kappa = 0;
  double sim_residual = 0;  // vs the SIM pairwise-trace law
};
// A POVM of cardinality d^2 is a conical 2-design iff it is a SIM.
MinimalPovmCheck minimal_povm_is_sim(const Povm& povm, double tol_rel = 1e-9);

}  // namespace qjw

#endif
