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

#include "qjw/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace qjw {

Mat partial_trace(const Mat& x, std::size_t d_left, std::size_t d_right, int side) {
  require(x.square() && x.rows() == d_left * d_right,
          "partial_trace: dimension does not match declared factors");
  require(side == 1 || side == 2, "partial_trace: side must be 1 or 2");
  if (side == 2) {
    Mat out(d_left, d_left);
    for (std::size_t i = 0; i < d_left; ++i)
      for (std::size_t j = 0; j < d_left; ++j) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < d_right; ++k)
          s += x(i * d_right + k, j * d_right + k);
        out(i, j) = s;
      }
    return out;
  }
  Mat out(d_right, d_right);
  for (std::size_t i = 0; i < d_right; ++i)
    for (std::size_t j = 0; j < d_right; ++j) {
      cplx s = 0.0;
      for (std::size_t k = 0; k < d_left; ++k)
        s += x(k * d_right + i, k * d_right + j);
      out(i, j) = s;
    }
  return out;
}

Mat partial_transpose(const Mat& x, std::size_t d_left, std::size_t d_right) {
  require(x.square() && x.rows() == d_left * d_right,
          "partial_transpose: dimension does not match declared factors");
  Mat out(x.rows(), x.cols());
  for (std::size_t i = 0; i < d_left; ++i)
    for (std::size_t j = 0; j < d_left; ++j)
      for (std::size_t k = 0; k < d_right; ++k)
        for (std::size_t l = 0; l < d_right; ++l)
          out(i * d_right + l, j * d_right + k) = x(i * d_right + k, j * d_right + l);
  return out;
}

Mat swap_operator(std::size_t d) {
  Mat w(d * d, d * d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = 0; s < d; ++s) w(s * d + r, r * d + s) = 1.0;
  return w;
}

Mat projector_sym(std::size_t d) {
  Mat p = swap_operator(d);
  p += Mat::identity(d * d);
  p *= 0.5;
  return p;
}

Mat projector_asym(std::size_t d) {
  Mat p = Mat::identity(d * d);
  p -= swap_operator(d);
  p *= 0.5;
  return p;
}

Mat max_entangled_ket(std::size_t d) {
  Mat k(d * d, 1);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t r = 0; r < d; ++r) k(r * d + r, 0) = a;
  return k;
}

CanonicalOperators canonical_operators(std::size_t d) {
  require(d >= 1, "canonical_operators: d must be >= 1");
  return {swap_operator(d), projector_sym(d), projector_asym(d),
          max_entangled_ket(d)};
}

std::vector<Mat> gell_mann_basis(std::size_t n) {
  require(n >= 2, "gell_mann_basis: n must be >= 2");
  std::vector<Mat> out;
  out.reserve(n * n - 1);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      if (r < s) {  // (E_rs + E_sr)/sqrt(2)
        Mat g(n, n);
        g(r, s) = inv_sqrt2;
        g(s, r) = inv_sqrt2;
        out.push_back(std::move(g));
      } else if (s < r) {  // i(E_rs - E_sr)/sqrt(2)
        Mat g(n, n);
        g(r, s) = cplx(0.0, inv_sqrt2);
        g(s, r) = cplx(0.0, -inv_sqrt2);
        out.push_back(std::move(g));
      } else if (r + 1 < n) {  // diagonal, r = s != n
        Mat g(n, n);
        const double c = 1.0 / std::sqrt(static_cast<double>((r + 1) * (r + 2)));
        for (std::size_t k = 0; k <= r; ++k) g(k, k) = c;
        g(r + 1, r + 1) = -c * static_cast<double>(r + 1);
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

namespace {

Mat pauli(char which) {
  Mat m(2, 2);
  switch (which) {
    case 'o': m(0, 0) = 1.0; m(1, 1) = 1.0; break;
    case 'z': m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 'x': m(0, 1) = 1.0; m(1, 0) = 1.0; break;
    case 'y': m(0, 1) = cplx(0.0, -1.0); m(1, 0) = cplx(0.0, 1.0); break;
    default: require(false, "pauli: bad tag");
  }
  return m;
}

Mat kron_chain(const std::vector<char>& tags) {
  Mat out = pauli(tags[0]);
  for (std::size_t i = 1; i < tags.size(); ++i) out = kron(out, pauli(tags[i]));
  return out;
}

}  // namespace

std::vector<Mat> spin_generators(std::size_t k) {
  require(k >= 2, "spin_generators: k must be >= 2");
  const std::size_t m = k / 2;  // matrices live in M_{2^m}(C)
  std::vector<Mat> out;
  out.reserve(k);
  for (std::size_t p = 1; p <= k; ++p) {
    if (p == k && (k % 2 == 1)) {
      out.push_back(kron_chain(std::vector<char>(m, 'y')));
      continue;
    }
    const std::size_t q = (p + 1) / 2;  // ceil(p/2)
    std::vector<char> tags;
    for (std::size_t i = 0; i + 1 < q; ++i) tags.push_back('y');
    tags.push_back(p % 2 == 1 ? 'z' : 'x');
    for (std::size_t i = q; i < m; ++i) tags.push_back('o');
    out.push_back(kron_chain(tags));
  }
  return out;
}

bool QuatMat::self_adjoint(double tol_scale) const {
  if (!is_hermitian(gamma1, tol_scale)) return false;
  const double tol = tol_scale * std::max(1.0, gamma2.norm_fro());
  Mat anti = gamma2 + gamma2.transpose();
  return anti.max_abs() <= tol;
}

std::vector<QuatMat> quaternionic_paulis() {
  Mat z2(2, 2);
  Mat g_real(2, 2);     // [[0,-1],[1,0]]
  g_real(0, 1) = -1.0;
  g_real(1, 0) = 1.0;
  std::vector<QuatMat> q(6);
  q[0] = {2, pauli('o'), z2};
  q[1] = {2, pauli('z'), z2};
  q[2] = {2, pauli('x'), z2};
  q[3] = {2, pauli('y'), z2};
  q[4] = {2, z2, g_real};
  q[5] = {2, z2, pauli('y')};
  return q;
}

Mat symplectic_embed(const QuatMat& q) {
  require(q.self_adjoint(), "symplectic_embed: input not self-adjoint");
  const std::size_t n = q.n;
  Mat out(2 * n, 2 * n);
  const Mat g2c = q.gamma2.conj();
  const Mat g1c = q.gamma1.conj();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out(i, j) = q.gamma1(i, j);
      out(i, n + j) = q.gamma2(i, j);
      out(n + i, j) = -g2c(i, j);
      out(n + i, n + j) = g1c(i, j);
    }
  return out;
}

Mat symplectic_form(std::size_t n) {
  Mat j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

Mat haar_unitary(std::size_t d, SeededRng& rng) {
  require(d >= 1, "haar_unitary: d must be >= 1");
  // QR of a complex Ginibre matrix; Gram-Schmidt yields positive diagonal R,
  // which is exactly the phase convention making Q Haar.
  Mat z(d, d);
  for (std::size_t i = 0; i < d * d; ++i)
    z.data()[i] = cplx(rng.gaussian(), rng.gaussian());
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      cplx c = 0.0;
      for (std::size_t i = 0; i < d; ++i) c += std::conj(z(i, k)) * z(i, j);
      for (std::size_t i = 0; i < d; ++i) z(i, j) -= c * z(i, k);
    }
    double nrm = 0.0;
    for (std::size_t i = 0; i < d; ++i) nrm += std::norm(z(i, j));
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < d; ++i) z(i, j) /= nrm;
  }
  return z;
}

Mat random_ket(std::size_t d, SeededRng& rng) {
  Mat k(d, 1);
  double nrm = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    k(i, 0) = cplx(rng.gaussian(), rng.gaussian());
    nrm += std::norm(k(i, 0));
  }
  nrm = std::sqrt(nrm);
  for (std::size_t i = 0; i < d; ++i) k(i, 0) /= nrm;
  return k;
}

Mat random_hermitian(std::size_t d, SeededRng& rng) {
  Mat a(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    a(i, i) = rng.gaussian();
    for (std::size_t j = i + 1; j < d; ++j) {
      const cplx v(rng.gaussian(), rng.gaussian());
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return a;
}

Mat random_density(std::size_t d, SeededRng& rng) {
  Mat g(d, d);
  for (std::size_t i = 0; i < d * d; ++i)
    g.data()[i] = cplx(rng.gaussian(), rng.gaussian());
  Mat rho = matmul(g, g.adjoint());
  rho *= 1.0 / rho.trace().real();
  return rho;
}

Mat random_pure_density(std::size_t d, SeededRng& rng) {
  Mat k = random_ket(d, rng);
  return matmul(k, k.adjoint());
}

// ---- subspaces ----

BlockMat OperatorSubspace::project(const BlockMat& x) const {
  BlockMat acc(ambient);
  for (const auto& b : basis) {
    cplx c = hs_inner(b, x);
    if (field == ScalarField::Real) c = c.real();
    acc += b * c;
  }
  return acc;
}

double OperatorSubspace::residual(const BlockMat& x) const {
  BlockMat r = x - project(x);
  return r.norm_fro();
}

SpanBuilder::SpanBuilder(const BlockShape& ambient, ScalarField field)
    : ambient_(ambient), field_(field) {
  for (auto s : ambient.sizes) flat_len_ += s * s;
  scratch_.resize(flat_len_);
}

void SpanBuilder::flatten(const BlockMat& x, cplx* out) const {
  require(x.shape() == ambient_, "SpanBuilder: ambient shape mismatch");
  std::size_t off = 0;
  for (std::size_t i = 0; i < x.nblocks(); ++i) {
    const Mat& b = x.block(i);
    std::copy(b.data(), b.data() + b.size(), out + off);
    off += b.size();
  }
}

double SpanBuilder::project_out(cplx* v) const {
  const auto& k = kernels();
  for (std::size_t r = 0; r < nrows_; ++r) {
    const cplx* row = rows_.data() + r * flat_len_;
    cplx c = k.cdotc(flat_len_, row, v);
    if (field_ == ScalarField::Real) c = c.real();
    if (c != cplx{}) k.caxpy(flat_len_, -c, row, v);
  }
  return std::sqrt(k.nrm2sq(flat_len_, v));
}

bool SpanBuilder::add(const BlockMat& x) {
  flatten(x, scratch_.data());
  const double input_norm = std::sqrt(kernels().nrm2sq(flat_len_, scratch_.data()));
  if (input_norm == 0.0) return false;
  drop_scale_ = std::max(drop_scale_, input_norm);
  double nrm = project_out(scratch_.data());
  if (nrm <= tol::rank * drop_scale_) return false;
  // one re-orthogonalization pass keeps the basis orthonormal to working
  // precision even for nearly dependent inputs
  for (auto& v : scratch_) v /= nrm;
  nrm = project_out(scratch_.data());
  if (nrm <= tol::orth) return false;
  rows_.resize((nrows_ + 1) * flat_len_);
  cplx* dst = rows_.data() + nrows_ * flat_len_;
  for (std::size_t i = 0; i < flat_len_; ++i) dst[i] = scratch_[i] / nrm;
  ++nrows_;
  return true;
}

double SpanBuilder::residual(const BlockMat& x) const {
  flatten(x, scratch_.data());
  return project_out(scratch_.data());
}

BlockMat unflatten(const BlockShape& shape, const cplx* v) {
  BlockMat out(shape);
  std::size_t off = 0;
  for (std::size_t i = 0; i < out.nblocks(); ++i) {
    Mat& b = out.block(i);
    std::copy(v + off, v + off + b.size(), b.data());
    off += b.size();
  }
  return out;
}

BlockMat SpanBuilder::row(std::size_t i) const {
  require(i < nrows_, "SpanBuilder::row: index out of range");
  return unflatten(ambient_, rows_.data() + i * flat_len_);
}

std::vector<cplx> flatten_block(const BlockMat& x) {
  std::vector<cplx> out;
  for (std::size_t i = 0; i < x.nblocks(); ++i) {
    const Mat& b = x.block(i);
    out.insert(out.end(), b.data(), b.data() + b.size());
  }
  return out;
}

OperatorSubspace SpanBuilder::finish() const {
  OperatorSubspace sub;
  sub.ambient = ambient_;
  sub.field = field_;
  sub.basis.reserve(nrows_);
  for (std::size_t r = 0; r < nrows_; ++r)
    sub.basis.push_back(unflatten(ambient_, rows_.data() + r * flat_len_));
  return sub;
}

OperatorSubspace orthonormalize(const std::vector<BlockMat>& span,
                                const BlockShape& ambient, ScalarField field) {
  SpanBuilder sb(ambient, field);
  for (const auto& x : span) sb.add(x);
  return sb.finish();
}

OperatorSubspace orthonormalize_real(const std::vector<Mat>& span,
                                     std::size_t ambient_dim) {
  BlockShape shape{{ambient_dim}};
  std::vector<BlockMat> blocks;
  blocks.reserve(span.size());
  for (const auto& m : span) {
    require(m.square() && m.rows() == ambient_dim,
            "orthonormalize_real: ambient dimension mismatch");
    require_hermitian(m, "orthonormalize_real");
    blocks.push_back(BlockMat::dense(m));
  }
  return orthonormalize(blocks, shape, ScalarField::Real);
}

}  // namespace qjw
