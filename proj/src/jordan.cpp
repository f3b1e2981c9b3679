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

#include "qjw/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qjw {

// ---- descriptors ----

std::size_t SimpleTag::real_dim() const {
  switch (kind) {
    case SimpleKind::RealSym: return n * (n + 1) / 2;
    case SimpleKind::ComplexHerm: return n * n;
    case SimpleKind::QuatHerm: return n * (2 * n - 1);
    case SimpleKind::Spin: return n + 1;
    case SimpleKind::Exceptional: return 27;
  }
  return 0;
}

std::size_t SimpleTag::rank() const {
  switch (kind) {
    case SimpleKind::Spin: return 2;
    case SimpleKind::Exceptional: return 3;
    default: return n;
  }
}

std::string SimpleTag::str() const {
  std::ostringstream os;
  switch (kind) {
    case SimpleKind::RealSym:
      if (n == 1) return "R";
      os << "M" << n << "(R)sa";
      break;
    case SimpleKind::ComplexHerm: os << "M" << n << "(C)sa"; break;
    case SimpleKind::QuatHerm: os << "M" << n << "(H)sa"; break;
    case SimpleKind::Spin: os << "V" << n; break;
    case SimpleKind::Exceptional: os << "M3(O)sa"; break;
  }
  return os.str();
}

std::size_t EjaDescriptor::real_dim() const {
  std::size_t t = 0;
  for (const auto& s : summands) t += s.real_dim();
  return t;
}

bool EjaDescriptor::has_exceptional() const {
  for (const auto& s : summands)
    if (s.kind == SimpleKind::Exceptional) return true;
  return false;
}

std::string EjaDescriptor::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < summands.size(); ++i) {
    if (i) os << " + ";
    os << summands[i].str();
  }
  return os.str();
}

EjaDescriptor parse_descriptor(const std::string& text) {
  EjaDescriptor desc;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t plus = text.find('+', pos);
    std::string tok = text.substr(pos, plus == std::string::npos ? plus : plus - pos);
    pos = plus == std::string::npos ? text.size() : plus + 1;
    // trim
    while (!tok.empty() && tok.front() == ' ') tok.erase(tok.begin());
    while (!tok.empty() && tok.back() == ' ') tok.pop_back();
    if (tok.empty()) continue;
    if (tok == "R" || tok == "r") {
      desc.summands.push_back({SimpleKind::RealSym, 1});
      continue;
    }
    if (tok == "octonion" || tok == "exceptional") {
      desc.summands.push_back({SimpleKind::Exceptional, 3});
      continue;
    }
    const std::size_t colon = tok.find(':');
    require(colon != std::string::npos,
            "parse_descriptor: expected kind:n in '" + tok + "'");
    const std::string kind = tok.substr(0, colon);
    const std::size_t n = std::stoul(tok.substr(colon + 1));
    if (kind == "real") desc.summands.push_back({SimpleKind::RealSym, n});
    else if (kind == "complex") desc.summands.push_back({SimpleKind::ComplexHerm, n});
    else if (kind == "quat") desc.summands.push_back({SimpleKind::QuatHerm, n});
    else if (kind == "spin") desc.summands.push_back({SimpleKind::Spin, n});
    else require(false, "parse_descriptor: unknown kind '" + kind + "'");
  }
  require(!desc.summands.empty(), "parse_descriptor: empty descriptor");
  return desc;
}

// ---- spin arithmetic ----

SpinElement spin_product(const SpinElement& a, const SpinElement& b) {
  require(a.k == b.k, "spin_product: cardinality mismatch");
  SpinElement out;
  out.k = a.k;
  double dot = 0.0;
  for (std::size_t i = 0; i < a.k; ++i) dot += a.vec[i] * b.vec[i];
  out.scalar = a.scalar * b.scalar + dot;
  out.vec.resize(a.k);
  for (std::size_t i = 0; i < a.k; ++i)
    out.vec[i] = a.scalar * b.vec[i] + b.scalar * a.vec[i];
  return out;
}

Mat spin_embed(const SpinElement& a) {
  const auto gens = spin_generators(a.k);
  Mat out = Mat::identity(gens[0].rows()) * cplx(a.scalar);
  for (std::size_t p = 0; p < a.k; ++p)
    kernels().caxpy(out.size(), a.vec[p], gens[p].data(), out.data());
  return out;
}

// ---- involutions ----

Involution Involution::transpose(const BlockShape& shape) {
  Involution inv;
  inv.shape_ = shape;
  inv.perm_.resize(shape.sizes.size());
  for (std::size_t i = 0; i < inv.perm_.size(); ++i) inv.perm_[i] = i;
  inv.s_ = BlockMat::identity(shape);
  inv.s_inv_ = inv.s_;
  inv.label_ = "transpose";
  return inv;
}

Involution Involution::symplectic(std::size_t n) {
  Involution inv;
  inv.shape_ = BlockShape{{2 * n}};
  inv.perm_ = {0};
  const Mat j = symplectic_form(n);
  inv.s_ = BlockMat::dense(j);
  inv.s_inv_ = BlockMat::dense(-j);  // J^{-1} = -J
  inv.label_ = "symplectic";
  return inv;
}

Involution Involution::swap_transpose(std::size_t n) {
  Involution inv;
  inv.shape_ = BlockShape{{n, n}};
  inv.perm_ = {1, 0};
  inv.s_ = BlockMat::identity(inv.shape_);
  inv.s_inv_ = inv.s_;
  inv.label_ = "swap-transpose";
  return inv;
}

Involution Involution::conjugation(const BlockShape& shape,
                                   std::vector<std::size_t> perm, BlockMat s,
                                   std::string label) {
  Involution inv;
  inv.shape_ = shape;
  inv.perm_ = std::move(perm);
  // unitary conjugators only: S^{-1} = S^dagger
  inv.s_inv_ = s.adjoint();
  inv.s_ = std::move(s);
  inv.label_ = std::move(label);
  return inv;
}

BlockMat Involution::apply(const BlockMat& x) const {
  require(x.shape() == shape_, "Involution::apply: ambient mismatch");
  BlockMat out(shape_);
  for (std::size_t i = 0; i < out.nblocks(); ++i) {
    const Mat t = x.block(perm_[i]).transpose();
    out.block(i) = matmul(matmul(s_.block(i), t), s_inv_.block(i));
  }
  return out;
}

Involution Involution::tensor_of(const Involution& a, const Involution& b) {
  Involution inv;
  inv.shape_ = kron_shape(a.shape_, b.shape_);
  const std::size_t nb = b.shape_.sizes.size();
  std::vector<Mat> s_blocks, si_blocks;
  for (std::size_t i = 0; i < a.shape_.sizes.size(); ++i)
    for (std::size_t j = 0; j < nb; ++j) {
      inv.perm_.push_back(a.perm_[i] * nb + b.perm_[j]);
      s_blocks.push_back(kron(a.s_.block(i), b.s_.block(j)));
      si_blocks.push_back(kron(a.s_inv_.block(i), b.s_inv_.block(j)));
    }
  inv.s_ = BlockMat(inv.shape_, std::move(s_blocks));
  inv.s_inv_ = BlockMat(inv.shape_, std::move(si_blocks));
  inv.label_ = a.label_ + " (x) " + b.label_;
  return inv;
}

Involution Involution::direct_sum_of(const std::vector<Involution>& parts) {
  require(!parts.empty(), "Involution::direct_sum_of: empty");
  Involution inv;
  std::vector<Mat> s_blocks, si_blocks;
  std::size_t offset = 0;
  for (const auto& p : parts) {
    for (std::size_t i = 0; i < p.shape_.sizes.size(); ++i) {
      inv.shape_.sizes.push_back(p.shape_.sizes[i]);
      inv.perm_.push_back(offset + p.perm_[i]);
      s_blocks.push_back(p.s_.block(i));
      si_blocks.push_back(p.s_inv_.block(i));
    }
    offset += p.shape_.sizes.size();
  }
  inv.s_ = BlockMat(inv.shape_, std::move(s_blocks));
  inv.s_inv_ = BlockMat(inv.shape_, std::move(si_blocks));
  inv.label_ = "direct-sum";
  return inv;
}

Involution Involution::conjugated() const {
  Involution inv = *this;
  inv.s_ = s_.conj();
  inv.s_inv_ = s_inv_.conj();
  inv.label_ = "conj(" + label_ + ")";
  return inv;
}

std::optional<Mat> solve_conjugator_pairs(
    const std::vector<std::pair<Mat, Mat>>& pairs) {
  // Find S with S src^T = tgt S for every (tgt, src) pair; complex-linear
  // in S, solved as the least singular vector of the constraint matrix.
  require(!pairs.empty(), "solve_conjugator: no constraints");
  const std::size_t n = pairs[0].first.rows();
  const std::size_t nn = n * n;
  Mat con(pairs.size() * nn, nn);
  for (std::size_t g = 0; g < pairs.size(); ++g) {
    const Mat& tgt = pairs[g].first;
    const Mat& src = pairs[g].second;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t row = g * nn + i * n + j;
        // (S src^T)_{ij} - (tgt S)_{ij} = sum_v S_{iv} src_{jv} - sum_u tgt_{iu} S_{uj}
        for (std::size_t v = 0; v < n; ++v) con(row, i * n + v) += src(j, v);
        for (std::size_t u = 0; u < n; ++u) con(row, u * n + j) -= tgt(i, u);
      }
  }
  SvdResult s = svd(con);
  const double smallest = s.singular_values.back();
  if (smallest > 1e-8 * std::max(1.0, s.singular_values.front())) return std::nullopt;
  Mat cand(n, n);
  for (std::size_t i = 0; i < nn; ++i)
    cand.data()[i] = std::conj(s.vt(nn - 1, i));  // right singular vector
  // normalize to a unitary: S^dagger S must be a positive scalar
  Mat gram = matmul(cand.adjoint(), cand);
  const double scale = gram.trace().real() / static_cast<double>(n);
  Mat dev = gram - Mat::identity(n) * cplx(scale);
  if (dev.norm_fro() > 1e-8 * scale * static_cast<double>(n)) return std::nullopt;
  cand *= 1.0 / std::sqrt(scale);
  return cand;
}

std::optional<Mat> solve_conjugator(const std::vector<Mat>& fixed_gens) {
  std::vector<std::pair<Mat, Mat>> pairs;
  pairs.reserve(fixed_gens.size());
  for (const auto& g : fixed_gens) pairs.emplace_back(g, g);
  return solve_conjugator_pairs(pairs);
}

// ---- standard embeddings ----

namespace {

std::vector<Mat> real_sym_basis(std::size_t n) {
  std::vector<Mat> out;
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t r = 0; r < n; ++r) {
    Mat e(n, n);
    e(r, r) = 1.0;
    out.push_back(std::move(e));
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      Mat e(n, n);
      e(r, c) = s;
      e(c, r) = s;
      out.push_back(std::move(e));
    }
  return out;
}

std::vector<Mat> complex_herm_basis(std::size_t n) {
  std::vector<Mat> out;
  if (n == 1) {
    out.push_back(Mat::identity(1));
    return out;
  }
  out = gell_mann_basis(n);
  out.push_back(Mat::identity(n) * cplx(1.0 / std::sqrt(static_cast<double>(n))));
  return out;
}

std::vector<Mat> quat_herm_embedded_basis(std::size_t n) {
  std::vector<Mat> out;
  const double s = 1.0 / std::sqrt(2.0);
  auto embed = [&](Mat g1, Mat g2) {
    QuatMat q{n, std::move(g1), std::move(g2)};
    out.push_back(symplectic_embed(q));
  };
  for (std::size_t r = 0; r < n; ++r) {
    Mat g1(n, n);
    g1(r, r) = 1.0;
    embed(std::move(g1), Mat(n, n));
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r + 1; c < n; ++c) {
      Mat sym(n, n), anti(n, n);
      sym(r, c) = s;
      sym(c, r) = s;
      anti(r, c) = s;
      anti(c, r) = -s;
      Mat im_sym(n, n);
      im_sym(r, c) = cplx(0.0, s);
      im_sym(c, r) = cplx(0.0, -s);
      embed(sym, Mat(n, n));                       // real part
      embed(im_sym, Mat(n, n));                    // i component
      embed(Mat(n, n), anti);                      // j component
      Mat anti_i = anti * cplx(0.0, 1.0);          // k component
      embed(Mat(n, n), std::move(anti_i));
    }
  return out;
}

std::vector<Mat> single_summand_generators(const SimpleTag& tag) {
  switch (tag.kind) {
    case SimpleKind::RealSym: return real_sym_basis(tag.n);
    case SimpleKind::ComplexHerm: return complex_herm_basis(tag.n);
    case SimpleKind::QuatHerm: return quat_herm_embedded_basis(tag.n);
    case SimpleKind::Spin: {
      std::vector<Mat> out = spin_generators(tag.n);
      out.insert(out.begin(), Mat::identity(out[0].rows()));
      return out;
    }
    case SimpleKind::Exceptional:
      throw ExceptionalFactorError(
          "no composite with the exceptional algebra M3(O)sa exists; it has "
          "no representation in a complex *-algebra");
  }
  return {};
}

std::size_t standard_ambient_size(const SimpleTag& tag) {
  switch (tag.kind) {
    case SimpleKind::RealSym:
    case SimpleKind::ComplexHerm: return tag.n;
    case SimpleKind::QuatHerm: return 2 * tag.n;
    case SimpleKind::Spin: return std::size_t{1} << (tag.n / 2);
    case SimpleKind::Exceptional: return 0;
  }
  return 0;
}

}  // namespace

EmbeddedEjc standard_embedding(const EjaDescriptor& desc) {
  if (desc.has_exceptional())
    throw ExceptionalFactorError(
        "no composite with the exceptional algebra M3(O)sa exists; it has no "
        "representation in a complex *-algebra");
  EmbeddedEjc out;
  out.desc = desc;
  for (const auto& tag : desc.summands)
    out.ambient.sizes.push_back(standard_ambient_size(tag));
  const std::size_t nb = desc.summands.size();
  for (std::size_t i = 0; i < nb; ++i) {
    for (auto& g : single_summand_generators(desc.summands[i])) {
      BlockMat b(out.ambient);
      b.block(i) = std::move(g);
      out.generators.push_back(std::move(b));
    }
  }
  out.unit = BlockMat::identity(out.ambient);
  return out;
}

// ---- closures ----

namespace {

enum class ClosureKind { Jordan, CStar };

OperatorSubspace closure_engine(const std::vector<BlockMat>& gens,
                                const BlockShape& ambient, ClosureKind kind,
                                std::size_t max_rounds) {
  require(!gens.empty(), "closure: no generators");
  const ScalarField field =
      kind == ClosureKind::Jordan ? ScalarField::Real : ScalarField::Complex;
  SpanBuilder sb(ambient, field);
  std::vector<BlockMat> basis;
  std::vector<std::size_t> frontier;
  auto adjoin = [&](const BlockMat& x) -> bool {
    if (!sb.add(x)) return false;
    basis.push_back(sb.row(sb.dim() - 1));
    frontier.push_back(sb.dim() - 1);
    return true;
  };
  for (const auto& g : gens) {
    require(g.shape() == ambient, "closure: generator ambient mismatch");
    if (kind == ClosureKind::Jordan)
      require(is_hermitian(g), "jordan_closure: generator not self-adjoint");
    adjoin(g);
    if (kind == ClosureKind::CStar) adjoin(g.adjoint());
  }
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    require(++rounds <= max_rounds, "closure: round cap exceeded");
    std::vector<std::size_t> wave;
    wave.swap(frontier);
    for (std::size_t k : wave) {
      for (std::size_t j = 0; j <= k; ++j) {
        if (kind == ClosureKind::Jordan) {
          adjoin(jordan_product(basis[k], basis[j]));
        } else {
          const BlockMat p = matmul(basis[k], basis[j]);
          adjoin(p);
          adjoin(p.adjoint());
          if (j != k) {
            const BlockMat q = matmul(basis[j], basis[k]);
            adjoin(q);
            adjoin(q.adjoint());
          }
        }
      }
    }
  }
  return sb.finish();
}

}  // namespace

OperatorSubspace jordan_closure(const std::vector<BlockMat>& gens,
                                const BlockShape& ambient, std::size_t max_rounds) {
  return closure_engine(gens, ambient, ClosureKind::Jordan, max_rounds);
}

OperatorSubspace cstar_closure(const std::vector<BlockMat>& gens,
                               const BlockShape& ambient, std::size_t max_rounds) {
  return closure_engine(gens, ambient, ClosureKind::CStar, max_rounds);
}

// ---- identification ----

namespace {

BlockMat random_element(const OperatorSubspace& sub, SeededRng& rng) {
  BlockMat acc(sub.ambient);
  for (const auto& b : sub.basis) acc += b * cplx(rng.gaussian());
  return acc;
}

struct BlockEig {
  double value;
  std::size_t block;
  std::size_t col;
};

// Eigenvalues of a self-adjoint block matrix, with provenance.
std::vector<BlockEig> block_eigs(const BlockMat& x, std::vector<EigResult>* out_eigs) {
  std::vector<BlockEig> all;
  for (std::size_t b = 0; b < x.nblocks(); ++b) {
    EigResult e = hermitian_eig(x.block(b));
    for (std::size_t c = 0; c < e.values.size(); ++c)
      all.push_back({e.values[c], b, c});
    if (out_eigs) out_eigs->push_back(std::move(e));
  }
  std::sort(all.begin(), all.end(),
            [](const BlockEig& a, const BlockEig& b) { return a.value < b.value; });
  return all;
}

std::vector<std::vector<BlockEig>> cluster_eigs(const std::vector<BlockEig>& sorted,
                                                double gap) {
  std::vector<std::vector<BlockEig>> clusters;
  for (const auto& e : sorted) {
    if (clusters.empty() || e.value - clusters.back().back().value > gap)
      clusters.emplace_back();
    clusters.back().push_back(e);
  }
  return clusters;
}

// Number of distinct eigenvalue clusters of a random element, restricted to
// the range of the summand unit.
std::size_t summand_rank(const OperatorSubspace& summand, const BlockMat& unit,
                         SeededRng& rng, double gap) {
  std::size_t best = 0;
  for (int trial = 0; trial < 3; ++trial) {
    BlockMat x = random_element(summand, rng);
    x *= 1.0 / x.norm_fro();
    // push the complement of the summand far away, then ignore it
    double vmax = 0.0;
    for (const auto& e : block_eigs(x, nullptr)) vmax = std::max(vmax, std::abs(e.value));
    const double shift = 2.0 * vmax + 1.0;
    BlockMat shifted = x + unit * cplx(shift);
    std::vector<BlockEig> eigs = block_eigs(shifted, nullptr);
    eigs.erase(std::remove_if(eigs.begin(), eigs.end(),
                              [&](const BlockEig& e) { return e.value < 0.5; }),
               eigs.end());
    best = std::max(best, cluster_eigs(eigs, gap).size());
  }
  return best;
}

SimpleTag classify_summand(std::size_t dim, std::size_t rank) {
  if (rank == 1) {
    require(dim == 1, "identify_eja: rank-1 summand with dim != 1");
    return {SimpleKind::RealSym, 1};
  }
  if (rank == 2) {
    // spin factors; the V2/V3/V5 coincidences resolve to matrix tags
    if (dim == 3) return {SimpleKind::RealSym, 2};
    if (dim == 4) return {SimpleKind::ComplexHerm, 2};
    if (dim == 6) return {SimpleKind::QuatHerm, 2};
    require(dim >= 3, "identify_eja: rank-2 summand with dim < 3");
    return {SimpleKind::Spin, dim - 1};
  }
  if (dim == rank * (rank + 1) / 2) return {SimpleKind::RealSym, rank};
  if (dim == rank * rank) return {SimpleKind::ComplexHerm, rank};
  if (dim == rank * (2 * rank - 1)) return {SimpleKind::QuatHerm, rank};
  std::ostringstream os;
  os << "identify_eja: summand with dim " << dim << " and rank " << rank
     << " matches no simple Euclidean Jordan algebra";
  require(false, os.str());
  return {};
}

bool tag_less(const SimpleTag& a, const SimpleTag& b) {
  if (a.kind != b.kind) return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  return a.n < b.n;
}

// Real nullspace of the stacked commutator constraints [x, y_m] = 0 for x
// restricted to the subspace.
std::vector<std::vector<double>> center_coefficients(const OperatorSubspace& sub,
                                                     const std::vector<BlockMat>& ys) {
  const std::size_t dim = sub.dim();
  std::vector<std::vector<cplx>> cols;
  cols.reserve(dim);
  std::size_t flat_len = 0;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<cplx> col;
    for (const auto& y : ys) {
      BlockMat comm = matmul(sub.basis[i], y) - matmul(y, sub.basis[i]);
      auto f = flatten_block(comm);
      col.insert(col.end(), f.begin(), f.end());
    }
    flat_len = col.size();
    cols.push_back(std::move(col));
  }
  // real (2*flat_len) x dim matrix, nullspace via dgesvd
  const std::size_t rows = 2 * flat_len;
  std::vector<double> a(rows * dim);
  for (std::size_t j = 0; j < dim; ++j)
    for (std::size_t r = 0; r < flat_len; ++r) {
      a[(2 * r) * dim + j] = cols[j][r].real();
      a[(2 * r + 1) * dim + j] = cols[j][r].imag();
    }
  const lapack_int m_i = static_cast<lapack_int>(rows);
  const lapack_int n_i = static_cast<lapack_int>(dim);
  const lapack_int k = std::min(m_i, n_i);
  std::vector<double> svals(k), u(1), vt(dim * dim), superb(std::max(1, k - 1));
  lapack_int info = LAPACKE_dgesvd(LAPACK_ROW_MAJOR, 'N', 'A', m_i, n_i, a.data(),
                                   n_i, svals.data(), u.data(), 1, vt.data(), n_i,
                                   superb.data());
  require(info == 0, "identify_eja: center SVD failed");
  const double cutoff = 1e-7 * std::max(1.0, svals.front());
  std::vector<std::vector<double>> null_vecs;
  for (std::size_t r = 0; r < dim; ++r) {
    const double s = r < svals.size() ? svals[r] : 0.0;
    if (s <= cutoff) {
      std::vector<double> v(dim);
      for (std::size_t j = 0; j < dim; ++j) v[j] = vt[r * dim + j];
      null_vecs.push_back(std::move(v));
    }
  }
  return null_vecs;
}

}  // namespace

EjaDescriptor identify_eja(const OperatorSubspace& sub, const IdentifyOptions& opts) {
  require(sub.dim() > 0, "identify_eja: empty subspace");
  require(sub.field == ScalarField::Real, "identify_eja: expected a real subspace");
  SeededRng rng(opts.seed);
  const BlockMat id = BlockMat::identity(sub.ambient);
  require(sub.residual(id) < 1e-7 * id.norm_fro(),
          "identify_eja: ambient identity is not the algebra unit");

  std::vector<BlockMat> probes = {random_element(sub, rng), random_element(sub, rng)};
  auto center = center_coefficients(sub, probes);
  require(!center.empty(), "identify_eja: center computation failed");

  std::vector<SimpleTag> tags;
  if (center.size() == 1) {
    const std::size_t rank = summand_rank(sub, id, rng, opts.cluster_gap);
    tags.push_back(classify_summand(sub.dim(), rank));
  } else {
    // random central element; its eigenvalue clusters carve out the ideals
    BlockMat z(sub.ambient);
    for (const auto& v : center) {
      const double w = rng.gaussian();
      for (std::size_t i = 0; i < sub.dim(); ++i) z += sub.basis[i] * cplx(w * v[i]);
    }
    z *= 1.0 / z.norm_fro();
    std::vector<EigResult> eigs;
    const auto clusters = cluster_eigs(block_eigs(z, &eigs), opts.cluster_gap);
    require(clusters.size() == center.size(),
            "identify_eja: central element clusters disagree with center dim");
    for (const auto& cluster : clusters) {
      BlockMat proj(sub.ambient);
      for (const auto& e : cluster) {
        const EigResult& be = eigs[e.block];
        Mat& blk = proj.block(e.block);
        const std::size_t n = blk.rows();
        for (std::size_t r = 0; r < n; ++r)
          for (std::size_t c = 0; c < n; ++c)
            blk(r, c) += be.vectors(r, e.col) * std::conj(be.vectors(c, e.col));
      }
      require(sub.residual(proj) < 1e-6 * std::max(1.0, proj.norm_fro()),
              "identify_eja: central projection left the algebra");
      SpanBuilder sb(sub.ambient, ScalarField::Real);
      for (const auto& b : sub.basis) sb.add(matmul(matmul(proj, b), proj));
      OperatorSubspace summand = sb.finish();
      const std::size_t rank = summand_rank(summand, proj, rng, opts.cluster_gap);
      tags.push_back(classify_summand(summand.dim(), rank));
    }
  }
  std::sort(tags.begin(), tags.end(), tag_less);
  return {std::move(tags)};
}

// ---- canonical tensor product ----

TensorResult canonical_tensor(const EmbeddedEjc& a, const EmbeddedEjc& b,
                              const IdentifyOptions& opts) {
  if (a.desc.has_exceptional() || b.desc.has_exceptional())
    throw ExceptionalFactorError(
        "no composite with the exceptional algebra M3(O)sa exists");
  const BlockShape ambient = kron_shape(a.ambient, b.ambient);
  std::vector<BlockMat> gens;
  gens.reserve(a.generators.size() * b.generators.size());
  for (const auto& ga : a.generators)
    for (const auto& gb : b.generators) gens.push_back(kron(ga, gb));
  TensorResult res;
  res.closure = jordan_closure(gens, ambient);
  res.dim = res.closure.dim();
  res.identified = identify_eja(res.closure, opts);
  return res;
}

std::optional<SimpleTag> predicted_canonical_tensor(const SimpleTag& a,
                                                    const SimpleTag& b) {
  auto as_matrix = [](const SimpleTag& t) -> std::optional<SimpleTag> {
    if (t.kind == SimpleKind::Spin) {
      if (t.n == 2) return SimpleTag{SimpleKind::RealSym, 2};
      if (t.n == 3) return SimpleTag{SimpleKind::ComplexHerm, 2};
      if (t.n == 5) return SimpleTag{SimpleKind::QuatHerm, 2};
      return std::nullopt;
    }
    if (t.kind == SimpleKind::Exceptional) return std::nullopt;
    return t;
  };
  auto ma = as_matrix(a), mb = as_matrix(b);
  if (!ma || !mb) return std::nullopt;
  if (ma->kind == SimpleKind::RealSym && ma->n == 1) return mb;
  if (mb->kind == SimpleKind::RealSym && mb->n == 1) return ma;
  const std::size_t nm = ma->n * mb->n;
  const auto k1 = ma->kind, k2 = mb->kind;
  auto has = [&](SimpleKind k) { return k1 == k || k2 == k; };
  auto both = [&](SimpleKind k) { return k1 == k && k2 == k; };
  if (both(SimpleKind::RealSym)) return SimpleTag{SimpleKind::RealSym, nm};
  if (both(SimpleKind::QuatHerm)) return SimpleTag{SimpleKind::RealSym, 4 * nm};
  if (has(SimpleKind::ComplexHerm) && has(SimpleKind::QuatHerm))
    return SimpleTag{SimpleKind::ComplexHerm, 2 * nm};
  if (has(SimpleKind::ComplexHerm)) return SimpleTag{SimpleKind::ComplexHerm, nm};
  return SimpleTag{SimpleKind::QuatHerm, nm};  // RealSym (.) QuatHerm
}

// ---- fixed points ----

namespace {

std::vector<BlockMat> ambient_hermitian_basis(const BlockShape& shape) {
  std::vector<BlockMat> out;
  for (std::size_t b = 0; b < shape.sizes.size(); ++b) {
    const std::size_t n = shape.sizes[b];
    std::vector<Mat> locals = n > 1 ? complex_herm_basis(n)
                                    : std::vector<Mat>{Mat::identity(1)};
    for (auto& h : locals) {
      BlockMat x(shape);
      x.block(b) = std::move(h);
      out.push_back(std::move(x));
    }
  }
  return out;
}

}  // namespace

OperatorSubspace fixed_point_subalg(const Involution& inv) {
  SpanBuilder sb(inv.ambient(), ScalarField::Real);
  for (const auto& h : ambient_hermitian_basis(inv.ambient())) {
    BlockMat sym = h + inv.apply(h);
    sb.add(sym);
  }
  return sb.finish();
}

// ---- reversibility ----

ReversibilityResult check_reversible(const EmbeddedEjc& ejc,
                                     std::size_t max_word_len, std::uint64_t seed,
                                     std::size_t samples_per_len) {
  require(max_word_len >= 2, "check_reversible: max_word_len must be >= 2");
  OperatorSubspace span = jordan_closure(ejc.generators, ejc.ambient);
  // words over the unit are redundant; drop generators proportional to it
  std::vector<BlockMat> alphabet;
  for (const auto& g : ejc.generators) {
    const cplx overlap = hs_inner(ejc.unit, g);
    BlockMat dev = g - ejc.unit * (overlap / hs_inner(ejc.unit, ejc.unit));
    if (dev.norm_fro() > 1e-10 * std::max(1.0, g.norm_fro())) alphabet.push_back(g);
  }
  const std::size_t g = alphabet.size();
  SeededRng rng(seed);
  ReversibilityResult res;

  auto test_word = [&](const std::vector<std::size_t>& word) -> bool {
    BlockMat fwd = alphabet[word[0]];
    for (std::size_t i = 1; i < word.size(); ++i)
      fwd = matmul(fwd, alphabet[word[i]]);
    BlockMat rev = alphabet[word.back()];
    for (std::size_t i = word.size() - 1; i-- > 0;)
      rev = matmul(rev, alphabet[word[i]]);
    BlockMat sym = fwd + rev;
    const double norm = sym.norm_fro();
    if (norm < 1e-12) return true;
    const double resid = span.residual(sym);
    if (resid > 1e-8 * std::max(1.0, norm)) {
      res.reversible = false;
      res.witness.clear();
      for (auto w : word) res.witness.push_back(w + 1);
      res.witness_residual = resid;
      return false;
    }
    return true;
  };

  for (std::size_t m = 2; m <= max_word_len; ++m) {
    double total = std::pow(static_cast<double>(g), static_cast<double>(m));
    if (m <= 4 && total <= 20000.0) {
      // lexicographic from the left, so the first witness reads naturally
      std::vector<std::size_t> word(m, 0);
      while (true) {
        if (!test_word(word)) return res;
        std::size_t pos = m;
        while (pos > 0 && ++word[pos - 1] == g) word[--pos] = 0;
        if (pos == 0) break;
      }
    } else {
      for (std::size_t s = 0; s < samples_per_len; ++s) {
        std::vector<std::size_t> word(m);
        for (auto& w : word) w = rng.index(g);
        if (!test_word(word)) return res;
      }
    }
  }
  return res;
}

// ---- quadratic representation ----

Mat quadratic_rep(const Mat& a) {
  require_hermitian(a, "quadratic_rep");
  return kron(a, a.transpose());
}

Mat quadratic_rep_from_l(const Mat& a) {
  require_hermitian(a, "quadratic_rep_from_l");
  const std::size_t n = a.rows();
  const Mat id = Mat::identity(n);
  Mat l = kron(a, id) + kron(id, a.transpose());
  l *= 0.5;
  const Mat a2 = matmul(a, a);
  Mat l2 = kron(a2, id) + kron(id, a2.transpose());
  l2 *= 0.5;
  return matmul(l, l) * cplx(2.0) - l2;
}

// ---- composite properties ----

namespace {

// A spectral cluster projector of a random algebra element; stays inside
// the algebra because it is a polynomial in that element.
BlockMat random_cluster_projector(const OperatorSubspace& sub, SeededRng& rng) {
  BlockMat x = random_element(sub, rng);
  x *= 1.0 / x.norm_fro();
  std::vector<EigResult> eigs;
  auto clusters = cluster_eigs(block_eigs(x, &eigs), 1e-6);
  const auto& cluster = clusters.front();
  BlockMat proj(sub.ambient);
  for (const auto& e : cluster) {
    const EigResult& be = eigs[e.block];
    Mat& blk = proj.block(e.block);
    for (std::size_t r = 0; r < blk.rows(); ++r)
      for (std::size_t c = 0; c < blk.cols(); ++c)
        blk(r, c) += be.vectors(r, e.col) * std::conj(be.vectors(c, e.col));
  }
  return proj;
}

}  // namespace

CompositeReport composite_property_suite(const EmbeddedEjc& a, const EmbeddedEjc& b,
                                         std::uint64_t seed, double tol_abs) {
  SeededRng rng(seed);
  const BlockShape ambient = kron_shape(a.ambient, b.ambient);
  std::vector<BlockMat> gens;
  for (const auto& ga : a.generators)
    for (const auto& gb : b.generators) gens.push_back(kron(ga, gb));
  OperatorSubspace closure = jordan_closure(gens, ambient);
  OperatorSubspace span_a = jordan_closure(a.generators, a.ambient);
  OperatorSubspace span_b = jordan_closure(b.generators, b.ambient);

  CompositeReport rep;
  for (int trial = 0; trial < 5; ++trial) {
    const BlockMat p = random_cluster_projector(span_a, rng);
    const BlockMat q = random_cluster_projector(span_b, rng);
    const BlockMat t = kron(p, q);
    rep.res_projection = std::max(rep.res_projection,
                                  (jordan_product(t, t) - t).norm_fro());
    rep.res_projection = std::max(rep.res_projection, closure.residual(t));

    const BlockMat a1 = random_element(span_a, rng), a2 = random_element(span_a, rng);
    const BlockMat x1 = random_element(span_b, rng), x2 = random_element(span_b, rng);
    const cplx lhs = hs_inner(kron(a1, x1), kron(a2, x2));
    const cplx rhs = hs_inner(a1, a2) * hs_inner(x1, x2);
    rep.res_inner = std::max(rep.res_inner, std::abs(lhs - rhs));

    const BlockMat au = kron(a1, b.unit);
    const BlockMat ub = kron(a.unit, x1);
    rep.res_main_eq = std::max(
        rep.res_main_eq,
        (jordan_product(au, kron(a2, x2)) - kron(jordan_product(a1, a2), x2))
            .norm_fro());

    // L operators materialized on the closure basis
    const std::size_t dim = closure.dim();
    Mat l1(dim, dim), l2(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      const BlockMat c1 = jordan_product(au, closure.basis[j]);
      const BlockMat c2 = jordan_product(ub, closure.basis[j]);
      for (std::size_t i = 0; i < dim; ++i) {
        l1(i, j) = hs_inner(closure.basis[i], c1);
        l2(i, j) = hs_inner(closure.basis[i], c2);
      }
    }
    rep.res_commute =
        std::max(rep.res_commute, (matmul(l1, l2) - matmul(l2, l1)).norm_fro());
  }
  rep.pass = rep.res_projection < tol_abs && rep.res_inner < tol_abs &&
             rep.res_commute < tol_abs && rep.res_main_eq < tol_abs;
  return rep;
}

// ---- universal envelopes ----

namespace {

struct EnvelopeFactor {
  BlockShape shape;
  std::vector<BlockMat> gens;
  std::optional<Involution> inv;
};

// Canonical involution on a doubled envelope M (+) M fixing the given
// embedded generators. Depending on the symmetry of the last generator the
// right form is either blockwise conjugated transposition (the V5 pattern)
// or the swapped variant (the V3 pattern); try both.
std::optional<Involution> doubled_envelope_involution(
    const BlockShape& shape, const std::vector<BlockMat>& gens) {
  std::vector<std::pair<Mat, Mat>> plain, swapped;
  for (const auto& g : gens) {
    plain.emplace_back(g.block(0), g.block(0));
    plain.emplace_back(g.block(1), g.block(1));
    swapped.emplace_back(g.block(0), g.block(1));
  }
  if (auto s = solve_conjugator_pairs(plain))
    return Involution::conjugation(shape, {0, 1}, BlockMat(shape, {*s, *s}),
                                   "blockwise-conjugation");
  if (auto s = solve_conjugator_pairs(swapped))
    return Involution::conjugation(shape, {1, 0}, BlockMat(shape, {*s, *s}),
                                   "swap-conjugation");
  return std::nullopt;
}

EnvelopeFactor envelope_factor(const SimpleTag& tag) {
  EnvelopeFactor f;
  switch (tag.kind) {
    case SimpleKind::Exceptional:
      throw ExceptionalFactorError(
          "no composite with the exceptional algebra M3(O)sa exists; it "
          "admits no enveloping complex *-algebra");
    case SimpleKind::RealSym: {
      f.shape = BlockShape{{tag.n}};
      for (auto& g : real_sym_basis(tag.n)) f.gens.push_back(BlockMat::dense(g));
      f.inv = Involution::transpose(f.shape);
      break;
    }
    case SimpleKind::ComplexHerm: {
      f.shape = BlockShape{{tag.n, tag.n}};
      for (auto& g : complex_herm_basis(tag.n)) {
        BlockMat x(f.shape);
        x.block(0) = g;
        x.block(1) = g.transpose();
        f.gens.push_back(std::move(x));
      }
      f.inv = Involution::swap_transpose(tag.n);
      break;
    }
    case SimpleKind::QuatHerm: {
      if (tag.n >= 3) {
        f.shape = BlockShape{{2 * tag.n}};
        for (auto& g : quat_herm_embedded_basis(tag.n))
          f.gens.push_back(BlockMat::dense(g));
        f.inv = Involution::symplectic(tag.n);
      } else {
        // C*u(M_2(H)sa) doubles M_4(C); the five anticommuting symmetries go
        // in with a sign flip on the last one in the second copy.
        require(tag.n == 2, "universal_envelope: QuatHerm(1) not supported");
        f.shape = BlockShape{{4, 4}};
        const auto v = spin_generators(5);
        auto push = [&](const Mat& top, const Mat& bottom) {
          BlockMat x(f.shape);
          x.block(0) = top;
          x.block(1) = bottom;
          f.gens.push_back(std::move(x));
        };
        push(Mat::identity(4), Mat::identity(4));
        for (std::size_t p = 0; p < 4; ++p) push(v[p], v[p]);
        push(v[4], -v[4]);
        f.inv = doubled_envelope_involution(f.shape, f.gens);
      }
      break;
    }
    case SimpleKind::Spin: {
      const std::size_t k = tag.n;
      const std::size_t m = std::size_t{1} << (k / 2);
      const auto v = spin_generators(k);
      if (k % 2 == 0) {
        f.shape = BlockShape{{m}};
        f.gens.push_back(BlockMat::dense(Mat::identity(m)));
        for (const auto& g : v) f.gens.push_back(BlockMat::dense(g));
        std::vector<Mat> fixed = v;
        fixed.push_back(Mat::identity(m));
        if (auto s = solve_conjugator(fixed))
          f.inv = Involution::conjugation(f.shape, {0},
                                          BlockMat(f.shape, {*s}), "conjugation");
      } else {
        f.shape = BlockShape{{m, m}};
        auto push = [&](const Mat& top, const Mat& bottom) {
          BlockMat x(f.shape);
          x.block(0) = top;
          x.block(1) = bottom;
          f.gens.push_back(std::move(x));
        };
        push(Mat::identity(m), Mat::identity(m));
        for (std::size_t p = 0; p + 1 < k; ++p) push(v[p], v[p]);
        push(v[k - 1], -v[k - 1]);
        f.inv = doubled_envelope_involution(f.shape, f.gens);
      }
      break;
    }
  }
  return f;
}

bool envelope_small_enough_to_verify(const SimpleTag& tag) {
  if (tag.kind == SimpleKind::Spin) return tag.n <= 6;
  return tag.n <= 3;
}

}  // namespace

UniversalEnvelope universal_envelope(const EjaDescriptor& desc) {
  if (desc.has_exceptional())
    throw ExceptionalFactorError(
        "no composite with the exceptional algebra M3(O)sa exists; it admits "
        "no enveloping complex *-algebra");
  UniversalEnvelope env;
  env.desc = desc;
  std::vector<EnvelopeFactor> factors;
  bool all_inv = true, verify = true;
  for (const auto& tag : desc.summands) {
    factors.push_back(envelope_factor(tag));
    all_inv = all_inv && factors.back().inv.has_value();
    verify = verify && envelope_small_enough_to_verify(tag);
  }
  std::size_t block_offset = 0;
  for (const auto& f : factors) {
    env.shape.sizes.insert(env.shape.sizes.end(), f.shape.sizes.begin(),
                           f.shape.sizes.end());
    block_offset += f.shape.sizes.size();
  }
  block_offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.gens) {
      BlockMat x(env.shape);
      for (std::size_t i = 0; i < g.nblocks(); ++i) x.block(block_offset + i) = g.block(i);
      env.generators.push_back(std::move(x));
    }
    block_offset += f.shape.sizes.size();
  }
  env.unit = BlockMat::identity(env.shape);
  if (all_inv) {
    std::vector<Involution> invs;
    for (const auto& f : factors) invs.push_back(*f.inv);
    env.involution = invs.size() == 1 ? invs[0] : Involution::direct_sum_of(invs);
  }
  if (verify) {
    OperatorSubspace closed = cstar_closure(env.generators, env.shape);
    require(closed.dim() == env.shape.algebra_dim(),
            "universal_envelope: embedding fails to generate the ambient");
    env.verified_generated_dim = closed.dim();
  }
  return env;
}

UniversalTensorResult universal_tensor(const SimpleTag& a, const SimpleTag& b,
                                       bool allow_long, const IdentifyOptions& opts) {
  UniversalEnvelope ea = universal_envelope({{a}});
  UniversalEnvelope eb = universal_envelope({{b}});
  const BlockShape ambient = kron_shape(ea.shape, eb.shape);
  UniversalTensorResult res;
  if (ambient.algebra_dim() > 600 && !allow_long) {
    res.skipped = true;
    res.note = "ambient " + ambient.str() + " exceeds the default budget; rerun with --long";
    return res;
  }
  std::vector<BlockMat> gens;
  for (const auto& ga : ea.generators)
    for (const auto& gb : eb.generators) gens.push_back(kron(ga, gb));
  OperatorSubspace closure = jordan_closure(gens, ambient);
  res.dim = closure.dim();
  res.identified = identify_eja(closure, opts);
  return res;
}

// ---- compact structure ----

CompactStructure compact_structure(const BlockShape& shape,
                                   const std::optional<Involution>& inv,
                                   std::uint64_t seed, std::size_t samples) {
  SeededRng rng(seed);
  // Hilbert-Schmidt orthonormal basis: matrix units per block.
  std::vector<BlockMat> units;
  for (std::size_t b = 0; b < shape.sizes.size(); ++b)
    for (std::size_t r = 0; r < shape.sizes[b]; ++r)
      for (std::size_t c = 0; c < shape.sizes[b]; ++c) {
        BlockMat e(shape);
        e.block(b)(r, c) = 1.0;
        units.push_back(std::move(e));
      }
  const BlockShape big = kron_shape(shape, shape);
  CompactStructure cs{BlockMat(big), false, 0, 0, 0, 0};
  for (const auto& e : units) cs.epsilon += kron(e, e.conj());

  double min_eig = 0.0;
  for (std::size_t b = 0; b < cs.epsilon.nblocks(); ++b)
    min_eig = std::min(min_eig, min_eigenvalue(cs.epsilon.block(b)));
  cs.epsilon_psd = min_eig >= -tol::psd;

  auto random_block = [&](const BlockShape& s) {
    BlockMat x(s);
    for (std::size_t b = 0; b < s.sizes.size(); ++b)
      for (std::size_t i = 0; i < x.block(b).size(); ++i)
        x.block(b).data()[i] = cplx(rng.gaussian(), rng.gaussian());
    return x;
  };

  for (std::size_t t = 0; t < samples; ++t) {
    const BlockMat a = random_block(shape);
    const BlockMat b = random_block(shape);
    // <a (x) conj(b), eps> = Tr(a^dagger b)
    const cplx lhs = hs_inner(kron(a, b.conj()), cs.epsilon);
    cs.pairing_residual =
        std::max(cs.pairing_residual, std::abs(lhs - hs_inner(a, b)));
    // snake: contracting a against eps reproduces a
    BlockMat snaked(shape), snaked_bar(shape);
    for (const auto& e : units) {
      const cplx c1 = hs_inner(cs.epsilon, kron(a, e.conj()));
      snaked += e * c1;
      const cplx c2 = hs_inner(cs.epsilon, kron(e, a.conj()));
      snaked_bar += e * c2;
    }
    cs.snake_residual = std::max(cs.snake_residual, (snaked - a).norm_fro());
    cs.snake_residual_bar =
        std::max(cs.snake_residual_bar, (snaked_bar - a.conj()).norm_fro());
  }

  if (inv) {
    require(inv->ambient() == shape, "compact_structure: involution ambient mismatch");
    const Involution big_inv = Involution::tensor_of(*inv, inv->conjugated());
    cs.involution_residual = (big_inv.apply(cs.epsilon) - cs.epsilon).norm_fro();
  }
  return cs;
}

// ---- completely-Jordan-preserving checks ----

BlockMat LinearMap::apply(const BlockMat& x) const {
  const auto flat = flatten_block(x);
  require(flat.size() == matrix.cols(), "LinearMap::apply: shape mismatch");
  std::vector<cplx> out(matrix.rows());
  for (std::size_t i = 0; i < matrix.rows(); ++i)
    out[i] = kernels().cdotu(flat.size(), &matrix(i, 0), flat.data());
  return unflatten(to, out.data());
}

BlockMat LinearMap::apply_tensor_id(const BlockShape& partner,
                                    const BlockMat& x) const {
  require(x.shape() == kron_shape(from, partner),
          "LinearMap::apply_tensor_id: ambient mismatch");
  BlockMat out(kron_shape(to, partner));
  const std::size_t npart = partner.sizes.size();
  for (std::size_t j = 0; j < npart; ++j) {
    const std::size_t m = partner.sizes[j];
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t q = 0; q < m; ++q) {
        // slice (p, q) across the from-blocks
        BlockMat slice(from);
        for (std::size_t i = 0; i < from.sizes.size(); ++i) {
          const Mat& src = x.block(i * npart + j);
          Mat& dst = slice.block(i);
          const std::size_t n = from.sizes[i];
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) dst(r, c) = src(r * m + p, c * m + q);
        }
        const BlockMat mapped = apply(slice);
        for (std::size_t k = 0; k < to.sizes.size(); ++k) {
          const Mat& src = mapped.block(k);
          Mat& dst = out.block(k * npart + j);
          const std::size_t n = to.sizes[k];
          for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) dst(r * m + p, c * m + q) = src(r, c);
        }
      }
  }
  return out;
}

LinearMap LinearMap::identity(const BlockShape& shape) {
  LinearMap lm;
  lm.from = shape;
  lm.to = shape;
  lm.matrix = Mat::identity(shape.algebra_dim());
  return lm;
}

LinearMap LinearMap::state_functional(const BlockShape& shape, const BlockMat& a) {
  LinearMap lm;
  lm.from = shape;
  lm.to = BlockShape{{1}};
  const auto flat = flatten_block(a);
  lm.matrix = Mat(1, flat.size());
  for (std::size_t i = 0; i < flat.size(); ++i) lm.matrix(0, i) = std::conj(flat[i]);
  return lm;
}

CjpVerdict cjp_intertwiner_check(const LinearMap& phi, const EmbeddedEjc& a,
                                 const EmbeddedEjc& b,
                                 const std::optional<Involution>& inv_a,
                                 const std::optional<Involution>& inv_b,
                                 const std::vector<EmbeddedEjc>& partners,
                                 double tol_abs) {
  require(phi.from == a.ambient && phi.to == b.ambient,
          "cjp_intertwiner_check: map/algebra ambient mismatch");
  CjpVerdict v;

  // complete positivity: blockwise Choi matrices
  v.choi_min_eig = 0.0;
  const std::size_t n_to = phi.to.total_dim();
  for (std::size_t blk = 0; blk < phi.from.sizes.size(); ++blk) {
    const std::size_t n = phi.from.sizes[blk];
    Mat choi(n_to * n, n_to * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t s = 0; s < n; ++s) {
        BlockMat unit(phi.from);
        unit.block(blk)(r, s) = 1.0;
        const Mat img = phi.apply(unit).to_dense();
        for (std::size_t i = 0; i < n_to; ++i)
          for (std::size_t j = 0; j < n_to; ++j)
            choi(i * n + r, j * n + s) += img(i, j);
      }
    v.choi_min_eig = std::min(v.choi_min_eig, min_eigenvalue(choi));
  }
  v.completely_positive = v.choi_min_eig >= -tol::psd;

  // intertwining
  if (inv_a && inv_b) {
    double worst = 0.0;
    for (const auto& h : ambient_hermitian_basis(phi.from)) {
      const BlockMat lhs = phi.apply(inv_a->apply(h));
      const BlockMat rhs = inv_b->apply(phi.apply(h));
      worst = std::max(worst, (lhs - rhs).norm_fro());
    }
    v.intertwine_residual = worst;
    v.intertwines = worst < tol_abs;
  } else {
    v.intertwines = true;
  }

  // Jordan preservation against each partner
  for (const auto& c : partners) {
    std::vector<BlockMat> gens_ac, gens_bc;
    for (const auto& ga : a.generators)
      for (const auto& gc : c.generators) gens_ac.push_back(kron(ga, gc));
    for (const auto& gb : b.generators)
      for (const auto& gc : c.generators) gens_bc.push_back(kron(gb, gc));
    OperatorSubspace ac = jordan_closure(gens_ac, kron_shape(a.ambient, c.ambient));
    OperatorSubspace bc = jordan_closure(gens_bc, kron_shape(b.ambient, c.ambient));
    double worst = 0.0;
    for (const auto& basis_elem : ac.basis) {
      const BlockMat img = phi.apply_tensor_id(c.ambient, basis_elem);
      worst = std::max(worst, bc.residual(img));
    }
    v.worst_partner_residual = std::max(v.worst_partner_residual, worst);
  }
  v.jordan_preserving = v.worst_partner_residual < tol_abs;
  v.pass = v.completely_positive && v.intertwines && v.jordan_preserving;
  return v;
}

}  // namespace qjw
