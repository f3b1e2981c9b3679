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

#include "qjw/designs.hpp"

#include <algorithm>
#include <cmath>

namespace qjw {

namespace {

// vec of a d x d operator, row-major; |A>> columns for superoperator work.
Mat vec_of(const Mat& a) {
  Mat v(a.size(), 1);
  std::copy(a.data(), a.data() + a.size(), v.data());
  return v;
}

void check_design_inputs(const std::vector<Mat>& ops, const char* who) {
  require(!ops.empty(), std::string(who) + ": empty operator list");
  const std::size_t d = ops[0].rows();
  for (const auto& a : ops) {
    require(a.square() && a.rows() == d, std::string(who) + ": dimension mismatch");
    require_hermitian(a, who);
    require(a.norm_fro() > 0.0, std::string(who) + ": zero operator");
    require(min_eigenvalue(a) > -tol::psd, std::string(who) + ": operator not PSD");
  }
}

}  // namespace

Povm make_povm(std::size_t dim, std::vector<Mat> effects) {
  require(!effects.empty(), "make_povm: no effects");
  Mat sum(dim, dim);
  for (const auto& e : effects) {
    require(e.square() && e.rows() == dim, "make_povm: dimension mismatch");
    require_hermitian(e, "make_povm");
    require(min_eigenvalue(e) > -tol::psd, "make_povm: effect not PSD");
    sum += e;
  }
  sum -= Mat::identity(dim);
  require(sum.max_abs() < 1e-8, "make_povm: effects do not sum to identity");
  return {dim, std::move(effects)};
}

std::pair<double, double> design_constants(const std::vector<Mat>& ops) {
  require(!ops.empty(), "design_constants: empty operator list");
  const double d = static_cast<double>(ops[0].rows());
  double s1 = 0.0, s2 = 0.0;
  for (const auto& a : ops) {
    const double tr = a.trace().real();
    s1 += tr * tr;
    const double f = a.norm_fro();
    s2 += f * f;  // Tr(A^2) for Hermitian A
  }
  const double ks = (s1 + s2) / (d * (d + 1.0));
  const double ka = d > 1.5 ? (s1 - s2) / (d * (d - 1.0)) : ks;
  return {ks, ka};
}

ConicalDesign make_design(std::size_t dim, std::vector<Mat> ops) {
  check_design_inputs(ops, "make_design");
  ConicalDesign des;
  des.dim = dim;
  const double d = static_cast<double>(dim);
  auto [ks, ka] = design_constants(ops);
  des.ks = ks;
  des.ka = ka;
  des.kplus = (ks + ka) / 2.0;
  des.kminus = (ks - ka) / 2.0;
  double t2_sum = 0.0, tk_sum = 0.0;
  for (const auto& a : ops) {
    const double tj = a.trace().real();
    des.traces.push_back(tj);
    t2_sum += tj * tj;
    // kappa_j^2 = |B_j|_Bloch^2 with B_j = d A_j / t_j - 1
    const double f2 = a.norm_fro() * a.norm_fro();
    const double kj2 = (d * d * f2 / (tj * tj) - d) / (d * (d - 1.0));
    tk_sum += tj * tj * kj2;
  }
  const double n = static_cast<double>(ops.size());
  des.t_rms = std::sqrt(t2_sum / n);
  des.kappa = std::sqrt(tk_sum / t2_sum);
  des.ops = std::move(ops);
  return des;
}

DesignReport verify_design(const std::vector<Mat>& ops, double tol_rel,
                           std::uint64_t seed, std::size_t n_unitaries) {
  check_design_inputs(ops, "verify_design");
  const std::size_t d = ops[0].rows();
  const double dd = static_cast<double>(d);

  DesignReport rep;
  rep.dim = d;
  rep.count = ops.size();
  auto [ks, ka] = design_constants(ops);
  rep.ks = ks;
  rep.ka = ka;
  const double kp = (ks + ka) / 2.0, km = (ks - ka) / 2.0;

  // second tensor moment
  Mat n2(d * d, d * d);
  for (const auto& a : ops) n2 += kron(a, a);

  // (ii)
  {
    Mat target = projector_sym(d) * cplx(ks) + projector_asym(d) * cplx(ka);
    rep.conditions.push_back(
        {"(ii) sum A(x)A = ks Pi_sym + ka Pi_asym", (n2 - target).norm_fro() / ks, false});
  }

  // (i): invariance under seeded Haar conjugations
  {
    SeededRng rng(seed);
    double worst = 0.0;
    for (std::size_t u = 0; u < n_unitaries; ++u) {
      const Mat uu = haar_unitary(d, rng);
      Mat conj_moment(d * d, d * d);
      for (const auto& a : ops) {
        const Mat au = matmul(matmul(uu, a), uu.adjoint());
        conj_moment += kron(au, au);
      }
      worst = std::max(worst, (conj_moment - n2).norm_fro() / ks);
    }
    rep.conditions.insert(rep.conditions.begin(),
                          {"(i) unitary invariance of sum A(x)A", worst, false});
  }

  // (iii)
  {
    Mat n3(d * d, d * d);
    for (const auto& a : ops) n3 += kron(a, a.conj());
    const Mat phi = max_entangled_ket(d);
    Mat target = Mat::identity(d * d) * cplx(kp);
    target += matmul(phi, phi.adjoint()) * cplx(dd * km);
    rep.conditions.push_back(
        {"(iii) sum A(x)conj(A) = k+ 1 + d k- |Phi+><Phi+|",
         (n3 - target).norm_fro() / ks, false});
    const double trace = n3.trace().real();
    const double f = hs_inner(matmul(phi, phi.adjoint()), n3).real();
    rep.kplus_from_iii = (trace - f) / (dd * dd - 1.0);
    rep.kminus_from_iii = (f - rep.kplus_from_iii) / dd;
  }

  // (iv): the transpose-map form, obtained from (iii) by Choi inversion
  {
    Mat s4(d * d, d * d);
    for (const auto& a : ops) {
      const Mat v = vec_of(a);
      // |A>><<conj(A)| has matrix vec(A) vec(A)^T (no conjugation)
      Mat outer = matmul(v, v.transpose());
      s4 += outer;
    }
    Mat target(d * d, d * d);
    const Mat id_vec = vec_of(Mat::identity(d));
    target += matmul(id_vec, id_vec.transpose()) * cplx(kp);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t s = 0; s < d; ++s) target(r * d + s, s * d + r) += km;
    rep.conditions.push_back(
        {"(iv) sum |A>><<conj A| = k+ |1>><<1| + k- T", (s4 - target).norm_fro() / ks,
         false});
  }

  // (v)
  {
    Mat s5(d * d, d * d);
    for (const auto& a : ops) {
      const Mat v = vec_of(a);
      s5 += matmul(v, v.adjoint());
    }
    Mat target = Mat::identity(d * d) * cplx(km);
    const Mat id_vec = vec_of(Mat::identity(d));
    target += matmul(id_vec, id_vec.adjoint()) * cplx(kp);
    rep.conditions.push_back(
        {"(v) sum |A>><<A| = k+ |1>><<1| + k- I", (s5 - target).norm_fro() / ks, false});
    const double trace = s5.trace().real();
    const Mat id_unit = id_vec * cplx(1.0 / std::sqrt(dd));
    const double f = hs_inner(id_unit, matmul(s5, id_unit)).real();
    rep.kplus_from_v = (f - (trace - f) / (dd * dd - 1.0)) / dd;
    rep.kminus_from_v = (trace - dd * rep.kplus_from_v) / (dd * dd);
  }

  rep.spanning = km > 1e-8 * kp;
  rep.pass = rep.spanning;
  for (auto& c : rep.conditions) {
    c.pass = c.residual < tol_rel;
    if (!c.pass) {
      rep.pass = false;
      if (rep.failure.empty()) rep.failure = c.name;
    }
  }
  if (!rep.spanning && rep.failure.empty()) rep.failure = "spanning (k_s > k_a)";
  return rep;
}

ConicalDesign build_sim(std::size_t d, double kappa, std::uint64_t seed) {
  require(d >= 2, "build_sim: d must be >= 2");
  require(kappa > 0.0 && kappa <= 1.0, "build_sim: kappa must lie in (0, 1]");
  const auto simplex = regular_simplex(d * d, kappa, d, seed);
  std::vector<Mat> effects;
  effects.reserve(simplex.size());
  const double inv = 1.0 / static_cast<double>(d * d);
  for (const auto& b : simplex) {
    Mat e = b.op + Mat::identity(d);
    e *= inv;
    require(min_eigenvalue(e) > -tol::psd,
            "build_sim: effect not PSD (kappa too large for this orientation)");
    effects.push_back(std::move(e));
  }
  return make_design(d, std::move(effects));
}

ConicalDesign build_mum(std::size_t d, double eta, std::uint64_t seed) {
  require(d >= 2, "build_mum: d must be >= 2");
  require(eta > 0.0 && eta <= 1.0, "build_mum: eta must lie in (0, 1]");
  SeededRng rng(seed);
  std::vector<Mat> dirs = seeded_traceless_basis(d, rng);  // d^2 - 1 of them

  // d+1 bands; band b spans dirs[b(d-1) .. b(d-1)+d-2] and holds a
  // (d, eta)-regular simplex built from the same Helmert coordinates as
  // regular_simplex.
  const std::size_t n_band = d;
  const double scale = eta * std::sqrt(static_cast<double>(n_band) / (n_band - 1.0));
  const double unit = std::sqrt(static_cast<double>(d) * (d - 1.0));
  std::vector<Mat> effects;
  effects.reserve(d * (d + 1));
  for (std::size_t b = 0; b <= d; ++b) {
    for (std::size_t j = 0; j < n_band; ++j) {
      Mat blochop(d, d);
      for (std::size_t a = 0; a + 1 < n_band; ++a) {
        const double c = 1.0 / std::sqrt(static_cast<double>((a + 1) * (a + 2)));
        double w = 0.0;
        if (j <= a) w = c;
        else if (j == a + 1) w = -c * static_cast<double>(a + 1);
        const double coeff = scale * w * unit;
        if (coeff != 0.0)
          kernels().caxpy(blochop.size(), coeff, dirs[b * (d - 1) + a].data(),
                          blochop.data());
      }
      Mat e = blochop + Mat::identity(d);
      e *= 1.0 / static_cast<double>(d * (d + 1));
      require(min_eigenvalue(e) > -tol::psd,
              "build_mum: effect not PSD (eta too large for this orientation)");
      effects.push_back(std::move(e));
    }
  }
  return make_design(d, std::move(effects));
}

std::vector<Mat> build_sic(std::size_t d) {
  if (d == 2) {
    // Bloch tetrahedron
    const double s = 1.0 / std::sqrt(3.0);
    const double verts[4][3] = {
        {s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    std::vector<Mat> out;
    for (const auto& v : verts) {
      Mat pi(2, 2);
      pi(0, 0) = 0.5 * (1.0 + v[2]);
      pi(1, 1) = 0.5 * (1.0 - v[2]);
      pi(0, 1) = 0.5 * cplx(v[0], -v[1]);
      pi(1, 0) = 0.5 * cplx(v[0], v[1]);
      out.push_back(std::move(pi));
    }
    return out;
  }
  if (d == 3) {
    // Weyl-Heisenberg orbit of the fiducial (0, 1, -1)/sqrt(2)
    Mat fid(3, 1);
    fid(1, 0) = 1.0 / std::sqrt(2.0);
    fid(2, 0) = -1.0 / std::sqrt(2.0);
    const cplx omega = std::exp(cplx(0.0, 2.0 * M_PI / 3.0));
    std::vector<Mat> out;
    for (std::size_t j = 0; j < 3; ++j) {
      for (std::size_t k = 0; k < 3; ++k) {
        Mat psi(3, 1);
        for (std::size_t r = 0; r < 3; ++r)
          psi((r + j) % 3, 0) = std::pow(omega, static_cast<double>(k * r)) * fid(r, 0);
        out.push_back(matmul(psi, psi.adjoint()));
      }
    }
    return out;
  }
  require(false, "build_sic: only d in {2, 3} ship with the library");
  return {};
}

std::vector<Mat> build_mub(std::size_t d) {
  require(d == 2 || d == 3 || d == 5 || d == 7,
          "build_mub: d must be a prime <= 7");
  std::vector<Mat> out;
  auto push_ket = [&](const Mat& psi) { out.push_back(matmul(psi, psi.adjoint())); };
  // computational basis
  for (std::size_t r = 0; r < d; ++r) {
    Mat e(d, 1);
    e(r, 0) = 1.0;
    push_ket(e);
  }
  if (d == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    Mat xp(2, 1), xm(2, 1), yp(2, 1), ym(2, 1);
    xp(0, 0) = s; xp(1, 0) = s;
    xm(0, 0) = s; xm(1, 0) = -s;
    yp(0, 0) = s; yp(1, 0) = cplx(0.0, s);
    ym(0, 0) = s; ym(1, 0) = cplx(0.0, -s);
    push_ket(xp); push_ket(xm); push_ket(yp); push_ket(ym);
    return out;
  }
  // odd prime: bases b = 0..d-1 with components w^(b r^2 + a r)/sqrt(d)
  const cplx omega = std::exp(cplx(0.0, 2.0 * M_PI / static_cast<double>(d)));
  const double nrm = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t b = 0; b < d; ++b) {
    for (std::size_t a = 0; a < d; ++a) {
      Mat psi(d, 1);
      for (std::size_t r = 0; r < d; ++r) {
        const std::size_t phase = (b * r * r + a * r) % d;
        psi(r, 0) = nrm * std::pow(omega, static_cast<double>(phase));
      }
      push_ket(psi);
    }
  }
  return out;
}

ProjectiveCheck is_projective_2design(const std::vector<Mat>& projectors,
                                      double tol_rel) {
  require(!projectors.empty(), "is_projective_2design: empty list");
  const std::size_t d = projectors[0].rows();
  const std::size_t n = projectors.size();
  require(n >= d * d, "is_projective_2design: need n >= d^2");
  for (const auto& pi : projectors) {
    require_hermitian(pi, "is_projective_2design");
    require(std::abs(pi.trace() - cplx(1.0)) < 1e-8 &&
                (matmul(pi, pi) - pi).norm_fro() < 1e-8,
            "is_projective_2design: input not a unit-rank projector");
  }
  double value = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double t = hs_inner(projectors[a], projectors[b]).real();
      value += t * t;
    }
  ProjectiveCheck chk;
  chk.value = value;
  chk.target = 2.0 * static_cast<double>(n) * static_cast<double>(n) /
               (static_cast<double>(d) * (d + 1.0));
  chk.pass = std::abs(value - chk.target) <= tol_rel * chk.target;
  return chk;
}

Povm design_povm(const ConicalDesign& design) {
  const double n = static_cast<double>(design.count());
  const double d = static_cast<double>(design.dim);
  const double t2 = design.t_rms * design.t_rms;
  std::vector<Mat> effects;
  effects.reserve(design.count());
  for (std::size_t j = 0; j < design.count(); ++j)
    effects.push_back(design.ops[j] * cplx(d * design.traces[j] / (n * t2)));
  return make_povm(design.dim, std::move(effects));
}

ExpandResult expand_operator(const Mat& l, const ConicalDesign& design,
                             double max_residual) {
  require(l.square() && l.rows() == design.dim, "expand_operator: dimension mismatch");
  const double d = static_cast<double>(design.dim);
  const double denom = d * design.kplus + design.kminus;
  const cplx trl = l.trace();
  ExpandResult res;
  res.reconstruction = Mat(design.dim, design.dim);
  for (std::size_t j = 0; j < design.count(); ++j) {
    const double c = (hs_inner(design.ops[j], l).real() -
                      design.kplus * design.traces[j] * trl.real() / denom) /
                     design.kminus;
    res.coeffs.push_back(c);
    res.reconstruction += design.ops[j] * cplx(c);
  }
  res.residual = (l - res.reconstruction).norm_fro();
  require(res.residual <= max_residual * std::max(1.0, l.norm_fro()),
          "expand_operator: reconstruction failed (not a conical 2-design?)");
  return res;
}

PurityProbe purity_from_probs(const std::vector<double>& probs,
                              const std::vector<Mat>& projectors,
                              double tol_abs) {
  require(probs.size() == projectors.size(),
          "purity_from_probs: probs/projector count mismatch");
  const double n = static_cast<double>(probs.size());
  const double d = static_cast<double>(projectors[0].rows());
  PurityProbe probe;
  for (double p : probs) probe.quad += p * p;
  probe.quad_target = 2.0 * d / (n * (d + 1.0));
  // triple sum p_a p_b p_c Tr(pi_a pi_b pi_c) = Tr(R^3), R = sum p_a pi_a
  Mat r(projectors[0].rows(), projectors[0].cols());
  for (std::size_t a = 0; a < probs.size(); ++a) r += projectors[a] * cplx(probs[a]);
  const Mat r2 = matmul(r, r);
  probe.cube = hs_inner(r, r2).real();
  probe.cube_target = (d + 7.0) / std::pow(d + 1.0, 3.0);
  probe.pure = std::abs(probe.quad - probe.quad_target) <= tol_abs &&
               std::abs(probe.cube - probe.cube_target) <= tol_abs;
  return probe;
}

CandidateProjector make_candidate_projector(std::size_t d, Mat p, double tol_abs) {
  require(p.square(), "candidate projector must be square");
  const std::size_t n = p.rows();
  require(n >= d * d, "candidate projector needs n >= d^2");
  const double want_diag = static_cast<double>(d * d - 1) / static_cast<double>(n);
  double row_sum_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    cplx row = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      require(std::abs(p(i, j).imag()) < tol_abs, "candidate projector must be real");
      require(std::abs(p(i, j) - p(j, i)) < tol_abs,
              "candidate projector must be symmetric");
      require(p(i, j).real() <= want_diag + tol_abs,
              "candidate projector entries must not exceed (d^2-1)/n");
      row += p(i, j);
    }
    row_sum_max = std::max(row_sum_max, std::abs(row));
    require(std::abs(p(i, i).real() - want_diag) < tol_abs,
            "candidate projector diagonal must equal (d^2-1)/n");
  }
  require(row_sum_max < tol_abs, "candidate projector rows must sum to zero");
  require((matmul(p, p) - p).norm_fro() < tol_abs * static_cast<double>(n),
          "candidate projector must be idempotent");
  require(std::abs(p.trace().real() - static_cast<double>(d * d - 1)) < tol_abs,
          "candidate projector trace must equal d^2 - 1");
  return {n, d, std::move(p)};
}

CandidateProjector simplex_projector(std::size_t d) {
  const std::size_t n = d * d;
  Mat p(n, n);
  const double off = -1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = (i == j ? 1.0 + off : off);
  return make_candidate_projector(d, std::move(p));
}

CandidateProjector mum_block_projector(std::size_t d) {
  const std::size_t n = d * (d + 1);
  Mat p(n, n);
  const double off = -1.0 / static_cast<double>(d);
  for (std::size_t b = 0; b <= d; ++b)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        p(b * d + i, b * d + j) = (i == j ? 1.0 + off : off);
  return make_candidate_projector(d, std::move(p));
}

std::pair<CandidateProjector, double> homogeneous_gram(const ConicalDesign& design,
                                                       double tol_abs) {
  const std::size_t n = design.count();
  const double d = static_cast<double>(design.dim);
  // homogeneity: constant traces and constant Bloch norms
  for (std::size_t j = 0; j < n; ++j)
    require(std::abs(design.traces[j] - design.traces[0]) < tol_abs,
            "homogeneous_gram: traces not constant");
  std::vector<Mat> blochs;
  blochs.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat b = design.ops[j] * cplx(d / design.traces[j]);
    b -= Mat::identity(design.dim);
    blochs.push_back(std::move(b));
  }
  const double norm0 = blochs[0].norm_fro();
  for (const auto& b : blochs)
    require(std::abs(b.norm_fro() - norm0) < tol_abs * std::max(1.0, norm0),
            "homogeneous_gram: Bloch norms not constant");

  Mat gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = hs_inner(blochs[i], blochs[j]).real();
  const double lambda = gram.trace().real() / static_cast<double>(design.dim * design.dim - 1);
  gram *= 1.0 / lambda;
  auto cand = make_candidate_projector(design.dim, std::move(gram), 1e-7);
  const double kappa_rec =
      std::sqrt(lambda * (d + 1.0) / (static_cast<double>(n) * d));
  require(std::abs(kappa_rec - design.kappa) < 1e-7,
          "homogeneous_gram: recovered kappa mismatch");
  return {std::move(cand), lambda};
}

ConicalDesign build_from_projector(const CandidateProjector& cand, double trace_t,
                                   std::uint64_t seed) {
  const std::size_t n = cand.n, d = cand.d;
  require(trace_t > 0.0, "build_from_projector: trace must be positive");
  // rank basis of P
  EigResult eig = symmetric_eig(cand.p);
  std::vector<std::size_t> ones;
  for (std::size_t i = 0; i < eig.values.size(); ++i)
    if (eig.values[i] > 0.5) ones.push_back(i);
  require(ones.size() == d * d - 1, "build_from_projector: rank != d^2 - 1");

  SeededRng rng(seed);
  std::vector<Mat> dirs = seeded_traceless_basis(d, rng);
  const double factor = std::sqrt(static_cast<double>(n * d) /
                                  ((d + 1.0) * (d - 1.0) * (d - 1.0)));
  std::vector<Mat> ops;
  ops.reserve(n);
  for (std::size_t j = 0; j < n; ++j) {
    Mat b(d, d);
    for (std::size_t a = 0; a < ones.size(); ++a) {
      const double u = eig.vectors(j, ones[a]).real();
      if (u != 0.0) kernels().caxpy(b.size(), factor * u, dirs[a].data(), b.data());
    }
    b += Mat::identity(d);
    b *= trace_t / static_cast<double>(d);
    require(min_eigenvalue(b) > -tol::psd, "build_from_projector: element not PSD");
    ops.push_back(std::move(b));
  }
  return make_design(d, std::move(ops));
}

bool lift_check(const ConicalDesign& design, double tol_rel) {
  const std::size_t d = design.dim, n = design.count();
  const double dd = static_cast<double>(d);
  std::vector<Mat> blochs;
  for (std::size_t j = 0; j < n; ++j) {
    Mat b = design.ops[j] * cplx(dd / design.traces[j]);
    b -= Mat::identity(d);
    blochs.push_back(std::move(b));
  }
  const double norm0 = blochs[0].norm_fro();
  for (const auto& b : blochs)
    if (std::abs(b.norm_fro() - norm0) > tol_rel * std::max(1.0, norm0)) return false;
  Mat sum(d, d);
  for (const auto& b : blochs) sum += b;
  if (sum.norm_fro() > tol_rel * norm0 * std::sqrt(static_cast<double>(n)))
    return false;
  // sum |B><B| = lambda (I - |1>><<1|/d) as a superoperator
  Mat s(d * d, d * d);
  for (const auto& b : blochs) {
    const Mat v = vec_of(b);
    s += matmul(v, v.adjoint());
  }
  const double lambda = s.trace().real() / static_cast<double>(d * d - 1);
  Mat target = Mat::identity(d * d) * cplx(lambda);
  const Mat id_vec = vec_of(Mat::identity(d));
  target -= matmul(id_vec, id_vec.adjoint()) * cplx(lambda / dd);
  return (s - target).norm_fro() <= tol_rel * lambda * dd;
}

MinimalPovmCheck minimal_povm_is_sim(const Povm& povm, double tol_rel) {
  const std::size_t d = povm.dim;
  require(povm.effects.size() == d * d,
          "minimal_povm_is_sim: POVM cardinality must be d^2");
  for (const auto& e : povm.effects)
    require(e.norm_fro() > 1e-12, "minimal_povm_is_sim: zero effects are disallowed");
  MinimalPovmCheck chk;
  DesignReport rep = verify_design(povm.effects, tol_rel);
  if (!rep.pass) return chk;
  chk.is_sim = true;
  const double dd = static_cast<double>(d);
  const double km = (rep.ks - rep.ka) / 2.0;
  chk.kappa = std::sqrt(km * dd * (dd + 1.0));
  // pairwise traces against the SIM law at the extracted kappa
  const double k2 = chk.kappa * chk.kappa;
  for (std::size_t a = 0; a < povm.effects.size(); ++a)
    for (std::size_t b = 0; b < povm.effects.size(); ++b) {
      const double got = hs_inner(povm.effects[a], povm.effects[b]).real();
      const double want =
          (dd * dd * k2 * (a == b ? 1.0 : 0.0) + dd + 1.0 - k2) /
          (dd * dd * dd * (dd + 1.0));
      chk.sim_residual = std::max(chk.sim_residual, std::abs(got - want));
    }
  chk.is_sim = chk.sim_residual < 1e-8;
  return chk;
}

}  // namespace qjw
