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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qjw/linalg.hpp"

using namespace qjw;

namespace {

Mat sigma(char which) {
  Mat m(2, 2);
  switch (which) {
    case 'z': m(0, 0) = 1; m(1, 1) = -1; break;
    case 'x': m(0, 1) = 1; m(1, 0) = 1; break;
    case 'y': m(0, 1) = cplx(0, -1); m(1, 0) = cplx(0, 1); break;
  }
  return m;
}

}  // namespace

TEST_CASE("kron of identities and of Pauli matrices") {
  CHECK(distance_max(kron(Mat::identity(2), Mat::identity(3)), Mat::identity(6)) == 0.0);

  // sigma_x (x) sigma_z, multiplied out 2x2-blockwise by hand
  Mat k = kron(sigma('x'), sigma('z'));
  Mat want(4, 4);
  want(0, 2) = 1;
  want(1, 3) = -1;
  want(2, 0) = 1;
  want(3, 1) = -1;
  CHECK(distance_max(k, want) < 1e-15);
}

TEST_CASE("kron trace multiplicativity and associativity") {
  SeededRng rng(1);
  for (int t = 0; t < 100; ++t) {
    const Mat a = random_hermitian(3, rng), b = random_hermitian(2, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-12);
  }
  const Mat a = random_hermitian(2, rng), b = random_hermitian(3, rng),
            c = random_hermitian(2, rng);
  // entries are products of the same three scalars; reassociation costs
  // at most one rounding step each
  CHECK(distance_max(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
  // mixed-product property
  const Mat u = random_hermitian(2, rng), v = random_hermitian(3, rng);
  CHECK(distance_max(matmul(kron(a, b), kron(u, v)),
                     kron(matmul(a, u), matmul(b, v))) < 1e-12);
}

TEST_CASE("hs_inner on the Gell-Mann basis") {
  auto gm = gell_mann_basis(3);
  REQUIRE(gm.size() == 8);
  // unit norm, including G_{1,2}
  for (const auto& g : gm) CHECK(std::abs(hs_inner(g, g) - cplx(1.0)) < 1e-14);
  // all 36 distinct pairs orthogonal
  for (std::size_t i = 0; i < gm.size(); ++i)
    for (std::size_t j = 0; j < gm.size(); ++j)
      if (i != j) CHECK(std::abs(hs_inner(gm[i], gm[j])) < 1e-14);
  for (std::size_t d : {2, 3, 5})
    CHECK(std::abs(hs_inner(Mat::identity(d), Mat::identity(d)) -
                   cplx(static_cast<double>(d))) < 1e-14);
  CHECK(gell_mann_basis(4).size() == 15);
  // traceless
  for (const auto& g : gell_mann_basis(4)) CHECK(std::abs(g.trace()) < 1e-14);
  CHECK_THROWS(hs_inner(Mat(2, 2), Mat(3, 3)));
}

TEST_CASE("partial trace") {
  SeededRng rng(2);
  const Mat rho = random_density(3, rng);
  const Mat s = random_hermitian(3, rng);
  CHECK(distance_max(partial_trace(kron(rho, s), 3, 3, 2), rho * s.trace()) < 1e-12);
  CHECK(distance_max(partial_trace(kron(rho, s), 3, 3, 1), s * rho.trace()) < 1e-12);
  // Tr_2 W = 1_d
  CHECK(distance_max(partial_trace(swap_operator(2), 2, 2, 2), Mat::identity(2)) <
        1e-14);
  // linearity
  const Mat x = random_hermitian(9, rng), y = random_hermitian(9, rng);
  CHECK(distance_max(partial_trace(x + y, 3, 3, 2),
                     partial_trace(x, 3, 3, 2) + partial_trace(y, 3, 3, 2)) < 1e-12);
  CHECK_THROWS(partial_trace(Mat::identity(6), 6, 6, 2));
}

TEST_CASE("partial transpose") {
  SeededRng rng(3);
  const Mat rho = random_density(2, rng);
  const Mat s = random_hermitian(2, rng);
  CHECK(distance_max(partial_transpose(kron(rho, s), 2, 2), kron(rho, s.transpose())) <
        1e-14);
  for (std::size_t d : {2, 3}) {
    // W^PT = d |Phi+><Phi+|
    const Mat phi = max_entangled_ket(d);
    CHECK(distance_max(partial_transpose(swap_operator(d), d, d),
                       matmul(phi, phi.adjoint()) * cplx(static_cast<double>(d))) <
          1e-14);
  }
  for (int t = 0; t < 100; ++t) {
    const Mat x = random_hermitian(9, rng);
    CHECK(distance_max(partial_transpose(partial_transpose(x, 3, 3), 3, 3), x) == 0.0);
  }
}

TEST_CASE("canonical operators") {
  auto ops2 = canonical_operators(2);
  CHECK(std::abs(ops2.pi_sym.trace() - cplx(3.0)) < 1e-14);
  CHECK(std::abs(ops2.pi_asym.trace() - cplx(1.0)) < 1e-14);
  auto ops3 = canonical_operators(3);
  CHECK(distance_max(ops3.pi_sym + ops3.pi_asym, Mat::identity(9)) < 1e-14);

  SeededRng rng(4);
  for (int t = 0; t < 10; ++t) {
    const Mat psi = random_ket(3, rng), phi = random_ket(3, rng);
    CHECK(distance_max(matmul(ops3.swap, kron(psi, phi)), kron(phi, psi)) < 1e-14);
  }

  for (std::size_t d : {2, 3, 4}) {
    auto ops = canonical_operators(d);
    CHECK(matmul(ops.pi_sym, ops.pi_asym).max_abs() < 1e-14);
    CHECK(distance_max(matmul(ops.pi_sym, ops.pi_sym), ops.pi_sym) < 1e-14);
    CHECK(distance_max(matmul(ops.pi_asym, ops.pi_asym), ops.pi_asym) < 1e-14);
    CHECK(distance_max(matmul(ops.swap, ops.swap), Mat::identity(d * d)) < 1e-14);
    // projectors commute with U (x) U
    for (int t = 0; t < 5; ++t) {
      const Mat u = haar_unitary(d, rng);
      const Mat uu = kron(u, u);
      CHECK((matmul(uu, ops.pi_sym) - matmul(ops.pi_sym, uu)).max_abs() < 1e-10);
      CHECK((matmul(uu, ops.pi_asym) - matmul(ops.pi_asym, uu)).max_abs() < 1e-10);
    }
  }
}

TEST_CASE("gell-mann n=2 recovers the scaled Pauli set") {
  auto gm = gell_mann_basis(2);
  REQUIRE(gm.size() == 3);
  // emitted in (r, s) order: the diagonal element first, then the
  // symmetric and antisymmetric off-diagonal pair
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(distance_max(gm[0], sigma('z') * cplx(s)) < 1e-15);
  CHECK(distance_max(gm[1], sigma('x') * cplx(s)) < 1e-15);
  CHECK(distance_max(gm[2], sigma('y') * cplx(s)) < 1e-15);
}

TEST_CASE("spin generators") {
  auto v3 = spin_generators(3);
  REQUIRE(v3.size() == 3);
  CHECK(distance_max(v3[0], sigma('z')) == 0.0);
  CHECK(distance_max(v3[1], sigma('x')) == 0.0);
  CHECK(distance_max(v3[2], sigma('y')) == 0.0);

  auto v5 = spin_generators(5);
  REQUIRE(v5.size() == 5);
  CHECK(distance_max(v5[0], kron(sigma('z'), Mat::identity(2))) == 0.0);
  CHECK(distance_max(v5[1], kron(sigma('x'), Mat::identity(2))) == 0.0);
  CHECK(distance_max(v5[2], kron(sigma('y'), sigma('z'))) == 0.0);
  CHECK(distance_max(v5[3], kron(sigma('y'), sigma('x'))) == 0.0);
  CHECK(distance_max(v5[4], kron(sigma('y'), sigma('y'))) == 0.0);

  for (std::size_t k = 2; k <= 7; ++k) {
    auto v = spin_generators(k);
    REQUIRE(v.size() == k);
    const std::size_t m = v[0].rows();
    CHECK(m == (std::size_t{1} << (k / 2)));
    for (std::size_t p = 0; p < k; ++p) {
      CHECK(is_hermitian(v[p]));
      for (std::size_t q = 0; q < k; ++q) {
        Mat anti = matmul(v[p], v[q]) + matmul(v[q], v[p]);
        Mat want = Mat::identity(m) * cplx(p == q ? 2.0 : 0.0);
        CHECK(distance_max(anti, want) < 1e-14);
      }
    }
  }
}

TEST_CASE("symplectic embedding of quaternionic matrices") {
  auto q = quaternionic_paulis();
  REQUIRE(q.size() == 6);
  for (const auto& qi : q) CHECK(qi.self_adjoint());

  CHECK(distance_max(symplectic_embed(q[0]), Mat::identity(4)) == 0.0);
  // q3 = [[0,-i],[i,0]]: image squares to the identity
  const Mat m3 = symplectic_embed(q[3]);
  CHECK(distance_max(matmul(m3, m3), Mat::identity(4)) < 1e-14);

  // fixed points of x -> -J x^T J
  const Mat j = symplectic_form(2);
  for (const auto& qi : q) {
    const Mat img = symplectic_embed(qi);
    CHECK(is_hermitian(img));
    const Mat fix = matmul(matmul(j, img.transpose()), j) * cplx(-1.0);
    CHECK(distance_max(fix, img) < 1e-14);
  }

  // Jordan monomorphism on random self-adjoint quaternionic matrices
  SeededRng rng(5);
  auto random_quat = [&](std::size_t n) {
    Mat g1 = random_hermitian(n, rng);
    Mat g2(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r + 1; c < n; ++c) {
        g2(r, c) = cplx(rng.gaussian(), rng.gaussian());
        g2(c, r) = -g2(r, c);
      }
    return QuatMat{n, std::move(g1), std::move(g2)};
  };
  for (int t = 0; t < 20; ++t) {
    QuatMat a = random_quat(3), b = random_quat(3);
    // quaternionic Jordan product via the embedding is again an embedded
    // self-adjoint quaternionic matrix: check the fixed-point property
    const Mat jp = jordan_product(symplectic_embed(a), symplectic_embed(b));
    const Mat j3 = symplectic_form(3);
    CHECK(distance_max(matmul(matmul(j3, jp.transpose()), j3) * cplx(-1.0), jp) <
          1e-12);
  }
  QuatMat bad{2, sigma('x'), sigma('x')};  // gamma2 not antisymmetric
  CHECK_THROWS(symplectic_embed(bad));
}

TEST_CASE("hermitian eigendecomposition") {
  EigResult e = hermitian_eig(sigma('z'));
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(-1.0));

  SeededRng rng(6);
  const Mat psi = random_ket(5, rng);
  EigResult p = hermitian_eig(matmul(psi, psi.adjoint()));
  CHECK(p.values[0] == doctest::Approx(1.0));
  for (std::size_t i = 1; i < 5; ++i) CHECK(std::abs(p.values[i]) < 1e-12);

  for (int t = 0; t < 100; ++t) {
    const Mat a = random_hermitian(8, rng);
    EigResult r = hermitian_eig(a);
    Mat lam(8, 8);
    for (std::size_t i = 0; i < 8; ++i) lam(i, i) = r.values[i];
    const Mat recon = matmul(matmul(r.vectors, lam), r.vectors.adjoint());
    CHECK((recon - a).norm_fro() < 1e-10);
  }
  Mat skew(2, 2);
  skew(0, 1) = 1.0;
  CHECK_THROWS(hermitian_eig(skew));

  // deterministic output, including for degenerate spectra
  Mat degen(3, 3);
  degen(0, 0) = 1.0;
  degen(1, 1) = 1.0;
  degen(2, 2) = -0.5;
  EigResult e1 = hermitian_eig(degen), e2 = hermitian_eig(degen);
  CHECK(distance_max(e1.vectors, e2.vectors) == 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(e1.values[i] == e2.values[i]);
}

TEST_CASE("haar unitaries") {
  SeededRng rng(7);
  const Mat u1 = haar_unitary(1, rng);
  CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) < 1e-14);

  double worst = 0.0;
  for (int t = 0; t < 100; ++t) {
    const Mat u = haar_unitary(4, rng);
    worst = std::max(worst,
                     distance_max(matmul(u.adjoint(), u), Mat::identity(4)));
  }
  CHECK(worst < 1e-12);

  SeededRng a(123), b(123);
  CHECK(distance_max(haar_unitary(5, a), haar_unitary(5, b)) == 0.0);
}

TEST_CASE("orthonormalize_real") {
  auto one = Mat::identity(2);
  OperatorSubspace s1 = orthonormalize_real({one, one * cplx(2.0)}, 2);
  CHECK(s1.dim() == 1);

  std::vector<Mat> gm = gell_mann_basis(3);
  gm.push_back(Mat::identity(3));
  OperatorSubspace s2 = orthonormalize_real(gm, 3);
  CHECK(s2.dim() == 9);

  // idempotence: re-running on an output basis preserves the span
  std::vector<Mat> dense;
  for (const auto& b : s2.basis) dense.push_back(b.block(0));
  OperatorSubspace s3 = orthonormalize_real(dense, 3);
  CHECK(s3.dim() == 9);
  for (const auto& b : s2.basis) CHECK(s3.residual(b) < 1e-10);
}
