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

#ifndef QJW_LINALG_HPP
#define QJW_LINALG_HPP

#include <vector>

#include "qjw/eig.hpp"
#include "qjw/matrix.hpp"
#include "qjw/rng.hpp"

namespace qjw {

// Default tolerances. Doubles comfortably cover the <= 256-dimensional
// problems here; these track conditioning at that scale.
namespace tol {
inline constexpr double herm = 1e-10;     // relative, vs Frobenius norm
inline constexpr double orth = 1e-9;
inline constexpr double rank = 1e-8;      // relative singular value cutoff
inline constexpr double eig = 1e-9;
inline constexpr double unitary = 1e-12;
inline constexpr double psd = 1e-9;
}  // namespace tol

// ---- bipartite utilities on H_d (x) H_d ----

// Tr over factor `side` (1 or 2) of an operator on a d_left*d_right space.
Mat partial_trace(const Mat& x, std::size_t d_left, std::size_t d_right, int side);

// id (x) transpose relative to the computational basis.
Mat partial_transpose(const Mat& x, std::size_t d_left, std::size_t d_right);

Mat swap_operator(std::size_t d);
Mat projector_sym(std::size_t d);
Mat projector_asym(std::size_t d);
// |Phi+> as a d^2 x 1 column.
Mat max_entangled_ket(std::size_t d);

struct CanonicalOperators {
  Mat swap;
  Mat pi_sym;
  Mat pi_asym;
  Mat phi_plus;  // ket
};
CanonicalOperators canonical_operators(std::size_t d);

// ---- operator bases ----

// The n^2-1 traceless orthonormal Hermitian matrices G_{r,s}; appending
// 1/sqrt(n) completes an orthonormal basis of the self-adjoint part.
std::vector<Mat> gell_mann_basis(std::size_t n);

// k anticommuting self-adjoint unitaries of size 2^floor(k/2):
// v_p v_q + v_q v_p = 2 delta_{pq} 1.
std::vector<Mat> spin_generators(std::size_t k);

// ---- quaternionic matrices ----

// a = Gamma1 + Gamma2 j with complex n x n Gamma blocks.
struct QuatMat {
  std::size_t n = 0;
  Mat gamma1;
  Mat gamma2;

  // self-adjoint iff Gamma1 = Gamma1^dagger and Gamma2 = -Gamma2^T
  bool self_adjoint(double tol_scale = 1e-10) const;
};

// Quaternionic Pauli matrices q_0 ... q_5 (n = 2).
std::vector<QuatMat> quaternionic_paulis();

// Block embedding [[G1, G2], [-conj(G2), conj(G1)]] into M_{2n}(C);
// a Jordan monomorphism on self-adjoint inputs.
Mat symplectic_embed(const QuatMat& q);

// The symplectic form J = [[0, 1], [-1, 0]] on C^{2n}.
Mat symplectic_form(std::size_t n);

// ---- randomness ----

Mat haar_unitary(std::size_t d, SeededRng& rng);
Mat random_ket(std::size_t d, SeededRng& rng);            // d x 1, unit norm
Mat random_hermitian(std::size_t d, SeededRng& rng);
Mat random_density(std::size_t d, SeededRng& rng);        // full rank
Mat random_pure_density(std::size_t d, SeededRng& rng);

// ---- operator subspaces ----

enum class ScalarField { Real, Complex };

// Orthonormal basis of matrices inside a (possibly block direct sum)
// ambient *-algebra, under the Hilbert-Schmidt inner product. When the tag
// is Real, every basis element is self-adjoint and coefficients are real.
struct OperatorSubspace {
  BlockShape ambient;
  std::vector<BlockMat> basis;
  ScalarField field = ScalarField::Real;

  std::size_t dim() const { return basis.size(); }
  BlockMat project(const BlockMat& x) const;
  double residual(const BlockMat& x) const;
  bool contains(const BlockMat& x, double tol_abs) const {
    return residual(x) <= tol_abs;
  }
};

// Modified Gram-Schmidt with one re-orthogonalization pass; inputs with
// residual <= tol::rank * (largest input norm) are dropped.
OperatorSubspace orthonormalize(const std::vector<BlockMat>& span,
                                const BlockShape& ambient, ScalarField field);

// Convenience for a single dense ambient M_n(C).
OperatorSubspace orthonormalize_real(const std::vector<Mat>& span,
                                     std::size_t ambient_dim);

// Incremental orthonormal span over flattened block matrices; the workhorse
// behind the closure engines. Keeps rows contiguous so projections run
// through the dispatched dot/axpy kernels.
class SpanBuilder {
 public:
  SpanBuilder(const BlockShape& ambient, ScalarField field);

  // Returns true when x enlarged the span.
  bool add(const BlockMat& x);
  // Projection residual (Frobenius) without adding.
  double residual(const BlockMat& x) const;

  std::size_t dim() const { return nrows_; }
  BlockMat row(std::size_t i) const;
  OperatorSubspace finish() const;

  const BlockShape& ambient() const { return ambient_; }

 private:
  void flatten(const BlockMat& x, cplx* out) const;
  double project_out(cplx* v) const;  // returns remaining norm

  BlockShape ambient_;
  ScalarField field_;
  std::size_t flat_len_ = 0;
  std::size_t nrows_ = 0;
  std::vector<cplx> rows_;
  mutable std::vector<cplx> scratch_;
  double drop_scale_ = 1.0;
};

BlockMat unflatten(const BlockShape& shape, const cplx* v);
std::vector<cplx> flatten_block(const BlockMat& x);

}  // namespace qjw

#endif
