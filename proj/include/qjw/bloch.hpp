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

#ifndef QJW_BLOCH_HPP
#define QJW_BLOCH_HPP

#include <vector>

#include "qjw/linalg.hpp"

namespace qjw {

// The generalized Bloch representation: rho = (B + 1)/d with B traceless
// Hermitian. The traceless subspace carries the scaled inner product
// <B1|B2> = Tr(B1 B2)/(d(d-1)), under which the inball has radius 1/(d-1)
// and the outball radius 1, states sitting between the two.
struct BlochVector {
  std::size_t dim = 0;
  Mat op;  // traceless Hermitian
};

struct BlochGeometry {
  std::size_t dim;
  double r_in() const { return 1.0 / static_cast<double>(dim - 1); }
  static constexpr double r_out = 1.0;
};

// B = d*rho - 1. Requires unit trace and positive semidefiniteness.
BlochVector state_to_bloch(const Mat& rho);

// (B + 1)/d
Mat bloch_to_state(const BlochVector& b);

double bloch_inner(const BlochVector& b1, const BlochVector& b2);
double bloch_norm(const BlochVector& b);

// x - Tr(x) 1/d; idempotent, kills the identity.
Mat bloch_projector_apply(const Mat& x);

// Membership in the Bloch body: (B + 1)/d PSD within tol::psd.
bool in_bloch_body(const BlochVector& b, double tol_psd = tol::psd);

// An (n, kappa)-regular simplex in the traceless subspace:
// <B_a|B_b> = kappa^2 (n delta_ab - 1)/(n - 1), sum zero, span dim n-1.
// The seed fixes the orientation; the Gram matrix does not depend on it.
std::vector<BlochVector> regular_simplex(std::size_t n, double kappa,
                                         std::size_t d, std::uint64_t seed);

// Tr(rho^2) and Tr(rho^3) both within tol of 1.
bool purity_test(const Mat& rho, double tol_purity = 1e-9);

// Orthonormal (Hilbert-Schmidt) basis of the traceless Hermitian subspace,
// rotated by a seeded random orthogonal transformation.
std::vector<Mat> seeded_traceless_basis(std::size_t d, SeededRng& rng);

}  // namespace qjw

#endif
