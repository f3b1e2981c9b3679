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

#ifndef QJW_JORDAN_HPP
#define QJW_JORDAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "qjw/linalg.hpp"

namespace qjw {

// Composite formation with the exceptional algebra is impossible; callers
// can tell this apart from ordinary usage errors.
struct ExceptionalFactorError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// ---- descriptors ----

enum class SimpleKind { RealSym, ComplexHerm, QuatHerm, Spin, Exceptional };

struct SimpleTag {
  SimpleKind kind;
  std::size_t n;  // matrix size, or k for Spin

  std::size_t real_dim() const;
  std::size_t rank() const;
  std::string str() const;
  bool operator==(const SimpleTag& o) const { return kind == o.kind && n == o.n; }
};

struct EjaDescriptor {
  std::vector<SimpleTag> summands;

  std::size_t real_dim() const;
  bool has_exceptional() const;
  std::string str() const;
  bool operator==(const EjaDescriptor& o) const { return summands == o.summands; }
};

// "real:3", "complex:2", "quat:2", "spin:4", "R", "octonion"; direct sums
// joined with '+'.
EjaDescriptor parse_descriptor(const std::string& text);

// ---- spin factor arithmetic ----

// lambda0 (+) vec in R (+) R^k.
struct SpinElement {
  std::size_t k = 0;
  double scalar = 0;
  std::vector<double> vec;
};

// (a0 b0 + a.b) (+) (a0 b + b0 a)
SpinElement spin_product(const SpinElement& a, const SpinElement& b);

// scalar*1 + sum vec[p] v_{p+1} over the standard generators.
Mat spin_embed(const SpinElement& a);

// ---- involutions ----

// Every involution in play factors as X |-> S (X after block permutation)^T
// S^{-1}: plain transpose (S = 1), the symplectic map -J X^T J (S = J), the
// swap-transpose on M (+) M, solved conjugators for spin envelopes, and
// tensor/direct-sum composites of these.
class Involution {
 public:
  static Involution transpose(const BlockShape& shape);
  static Involution symplectic(std::size_t n);  // ambient M_{2n}(C)
  static Involution swap_transpose(std::size_t n);  // ambient M_n (+) M_n
  static Involution conjugation(const BlockShape& shape,
                                std::vector<std::size_t> perm, BlockMat s,
                                std::string label);
  static Involution tensor_of(const Involution& a, const Involution& b);
  static Involution direct_sum_of(const std::vector<Involution>& parts);

  const BlockShape& ambient() const { return shape_; }
  BlockMat apply(const BlockMat& x) const;
  // The induced involution on the conjugate algebra.
  Involution conjugated() const;
  const std::string& str() const { return label_; }

 private:
  Involution() = default;
  BlockShape shape_;
  std::vector<std::size_t> perm_;  // source block index per output block
  BlockMat s_, s_inv_;
  std::string label_;
};

// S with S g^T = g S for all generators (unique up to scale when the
// generators act irreducibly); normalized unitary. Empty when no solution.
std::optional<Mat> solve_conjugator(const std::vector<Mat>& fixed_gens);

// ---- embedded algebras ----

struct EmbeddedEjc {
  EjaDescriptor desc;
  BlockShape ambient;
  std::vector<BlockMat> generators;  // real spanning set, self-adjoint
  BlockMat unit;
};

// Standard representations: RealSym/ComplexHerm by inclusion into M_n,
// QuatHerm symplectically into M_{2n}, Spin(k) via the anticommuting
// generators in M_{2^floor(k/2)}. Direct sums embed blockwise.
EmbeddedEjc standard_embedding(const EjaDescriptor& desc);

// ---- closures ----

// Smallest Jordan subalgebra containing the generators: breadth-first
// product adjunction with incremental re-orthonormalization. Throws when
// max_rounds is exceeded.
OperatorSubspace jordan_closure(const std::vector<BlockMat>& gens,
                                const BlockShape& ambient,
                                std::size_t max_rounds = 64);

// Smallest C*-subalgebra: complex span closed under associative products
// and adjoints.
OperatorSubspace cstar_closure(const std::vector<BlockMat>& gens,
                               const BlockShape& ambient,
                               std::size_t max_rounds = 64);

// ---- identification ----

struct IdentifyOptions {
  std::uint64_t seed = 5;
  double cluster_gap = 1e-6;
};

// Split a Jordan-closed unital subspace into simple summands via central
// idempotents and classify each by its (dimension, rank) pair. Spin/matrix
// coincidences at rank 2 resolve to the matrix tags (dims 3, 4, 6).
// Throws when a summand matches no Jordan-von Neumann-Wigner entry.
EjaDescriptor identify_eja(const OperatorSubspace& sub,
                           const IdentifyOptions& opts = {});

// ---- canonical tensor product ----

struct TensorResult {
  OperatorSubspace closure;
  EjaDescriptor identified;
  std::size_t dim = 0;
};

// Jordan closure of pairwise tensors of the embedded generators, followed
// by identification.
TensorResult canonical_tensor(const EmbeddedEjc& a, const EmbeddedEjc& b,
                              const IdentifyOptions& opts = {});

// Expected product of two simple Jordan matrix algebras under their
// standard embeddings (nullopt when a factor is a plain spin factor).
std::optional<SimpleTag> predicted_canonical_tensor(const SimpleTag& a,
                                                    const SimpleTag& b);

// ---- fixed points ----

// Orthonormal basis of the self-adjoint fixed points of an involution.
OperatorSubspace fixed_point_subalg(const Involution& inv);

// ---- reversibility ----

struct ReversibilityResult {
  bool reversible = true;
  std::vector<std::size_t> witness;  // 1-based generator indices
  double witness_residual = 0;
};

// Tests pi(a_1)...pi(a_m) + reverse against the Jordan closure, exhaustive
// for words up to length 4, seeded sampling beyond.
ReversibilityResult check_reversible(const EmbeddedEjc& ejc,
                                     std::size_t max_word_len,
                                     std::uint64_t seed = 17,
                                     std::size_t samples_per_len = 1000);

// ---- quadratic representation ----

// U_a as a superoperator on row-major vec: U_a(x) = a x a.
Mat quadratic_rep(const Mat& a);
// 2 L_a^2 - L_{a^2} with L_a the Jordan multiplication operator; equals
// quadratic_rep for self-adjoint a.
Mat quadratic_rep_from_l(const Mat& a);

// ---- composite properties ----

struct CompositeReport {
  double res_projection = 0;  // p (x) q idempotent
  double res_inner = 0;       // <a(x)x|b(x)y> = <a|b><x|y>
  double res_commute = 0;     // [L_{a(x)u}, L_{u(x)b}] on the closure
  double res_main_eq = 0;     // (a(x)u).(x(x)y) = (a.x)(x)y
  bool pass = false;
};
CompositeReport composite_property_suite(const EmbeddedEjc& a, const EmbeddedEjc& b,
                                         std::uint64_t seed = 23,
                                         double tol_abs = 1e-10);

// ---- universal envelopes ----

struct UniversalEnvelope {
  EjaDescriptor desc;
  BlockShape shape;
  std::vector<BlockMat> generators;  // canonical embedding of a basis
  BlockMat unit;
  std::optional<Involution> involution;
  // complex dimension of the C*-closure of the generators, when verified
  std::optional<std::size_t> verified_generated_dim;
};

// The enveloping C*-algebra table: M_n(C) for RealSym(n); a doubled copy
// for ComplexHerm(n) via a (+) a^T; M_{2n}(C) for QuatHerm(n >= 3); the
// doubled M_4(C) for QuatHerm(2); Clifford shapes for Spin(k). Direct sums
// concatenate. Exceptional factors are rejected outright. Generation is
// verified by C*-closure for factor sizes n <= 3 (k <= 6 for spin).
UniversalEnvelope universal_envelope(const EjaDescriptor& desc);

struct UniversalTensorResult {
  bool skipped = false;
  std::string note;
  EjaDescriptor identified;
  std::size_t dim = 0;
};

// Jordan closure of psi_A (x) psi_B inside C*u(A) (x) C*u(B). The two-quabit
// case exceeds the default budget and requires allow_long.
UniversalTensorResult universal_tensor(const SimpleTag& a, const SimpleTag& b,
                                       bool allow_long,
                                       const IdentifyOptions& opts = {});

// ---- compact structure ----

struct CompactStructure {
  BlockMat epsilon;           // sum e (x) conj(e) over an orthonormal basis
  bool epsilon_psd = false;
  double pairing_residual = 0;   // <a (x) conj(b), eps> vs Tr(a b*)
  double snake_residual = 0;     // (eta (x) id)(a (x) eps) = a
  double snake_residual_bar = 0; // mirror on the conjugate side
  double involution_residual = 0;  // Phi (x) conj(Phi) fixes eps
};
CompactStructure compact_structure(const BlockShape& shape,
                                   const std::optional<Involution>& inv,
                                   std::uint64_t seed = 29,
                                   std::size_t samples = 50);

// ---- completely-Jordan-preserving checks ----

// phi as a matrix acting on flattened block elements.
struct LinearMap {
  BlockShape from, to;
  Mat matrix;  // (flat_to) x (flat_from)

  BlockMat apply(const BlockMat& x) const;
  // (phi (x) id)(x) for x living on kron(from, partner).
  BlockMat apply_tensor_id(const BlockShape& partner, const BlockMat& x) const;
  static LinearMap identity(const BlockShape& shape);
  // x |-> Tr(a^dagger x), a functional onto the trivial algebra C.
  static LinearMap state_functional(const BlockShape& shape, const BlockMat& a);
};

struct CjpVerdict {
  bool completely_positive = false;
  double choi_min_eig = 0;
  bool intertwines = false;
  double intertwine_residual = 0;
  bool jordan_preserving = true;
  double worst_partner_residual = 0;
  bool pass = false;
};

// Complete positivity via blockwise Choi matrices, intertwining of the two
// involutions, and Jordan preservation (phi (x) id maps A (.) C into B (.) C)
// against each supplied partner.
CjpVerdict cjp_intertwiner_check(const LinearMap& phi, const EmbeddedEjc& a,
                                 const EmbeddedEjc& b,
                                 const std::optional<Involution>& inv_a,
                                 const std::optional<Involution>& inv_b,
                                 const std::vector<EmbeddedEjc>& partners,
                                 double tol_abs = 1e-9);

}  // namespace qjw

#endif
