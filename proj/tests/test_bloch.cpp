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

#include "qjw/bloch.hpp"

using namespace qjw;

TEST_CASE("state_to_bloch basics") {
  const std::size_t d = 3;
  BlochVector b0 = state_to_bloch(Mat::identity(d) * cplx(1.0 / d));
  CHECK(b0.op.norm_fro() < 1e-12);

  Mat ground(2, 2);
  ground(0, 0) = 1.0;
  BlochVector bz = state_to_bloch(ground);
  Mat sz(2, 2);
  sz(0, 0) = 1;
  sz(1, 1) = -1;
  CHECK(distance_max(bz.op, sz) < 1e-14);

  SeededRng rng(11);
  for (int t = 0; t < 20; ++t) {
    BlochVector b = state_to_bloch(random_pure_density(3, rng));
    CHECK(bloch_norm(b) == doctest::Approx(1.0).epsilon(1e-10));
  }
  Mat not_state = Mat::identity(2);  // trace 2
  CHECK_THROWS(state_to_bloch(not_state));
}

TEST_CASE("round trip through the Bloch representation") {
  SeededRng rng(12);
  for (std::size_t d : {2, 3, 4}) {
    for (int t = 0; t < 200; ++t) {
      const Mat rho = random_density(d, rng);
      const Mat back = bloch_to_state(state_to_bloch(rho));
      CHECK(distance_max(rho, back) < 1e-12);
    }
  }
}

TEST_CASE("bloch inner product") {
  Mat sz(2, 2);
  sz(0, 0) = 1;
  sz(1, 1) = -1;
  BlochVector bz{2, sz};
  CHECK(bloch_inner(bz, bz) == doctest::Approx(1.0));
  BlochVector zero{2, Mat(2, 2)};
  CHECK(bloch_inner(zero, bz) == 0.0);
  CHECK_THROWS(bloch_inner(bz, BlochVector{3, Mat(3, 3)}));
}

TEST_CASE("bloch projector") {
  CHECK(bloch_projector_apply(Mat::identity(4)).norm_fro() < 1e-15);
  SeededRng rng(13);
  Mat x = random_hermitian(3, rng);
  x = bloch_projector_apply(x);  // traceless now
  CHECK(distance_max(bloch_projector_apply(x), x) < 1e-14);
  // superoperator trace over an orthonormal Hermitian basis = d^2 - 1
  for (std::size_t d : {2, 3, 4}) {
    std::vector<Mat> basis = gell_mann_basis(d);
    basis.push_back(Mat::identity(d) * cplx(1.0 / std::sqrt(static_cast<double>(d))));
    double trace = 0.0;
    for (const auto& e : basis)
      trace += hs_inner(e, bloch_projector_apply(e)).real();
    CHECK(trace == doctest::Approx(static_cast<double>(d * d - 1)).epsilon(1e-12));
  }
}

TEST_CASE("regular simplex Gram structure") {
  // antipodal pair at kappa = 1
  auto pair = regular_simplex(2, 1.0, 2, 0);
  CHECK(bloch_inner(pair[0], pair[0]) == doctest::Approx(1.0));
  CHECK(bloch_inner(pair[0], pair[1]) == doctest::Approx(-1.0));
  CHECK((pair[0].op + pair[1].op).norm_fro() < 1e-12);

  // n = 4, kappa = 1/2, d = 3: Gram/kappa^2 = (4 delta - 1)/3, all 16 entries
  auto sim4 = regular_simplex(4, 0.5, 3, 5);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) {
      const double want = 0.25 * ((a == b ? 4.0 : 0.0) - 1.0) / 3.0;
      CHECK(bloch_inner(sim4[a], sim4[b]) == doctest::Approx(want).epsilon(1e-10));
    }

  // inball: all vertices of the d^2-simplex at kappa = 1/(d-1) are states
  auto sim9 = regular_simplex(9, 0.5, 3, 1);
  Mat sum(3, 3);
  for (const auto& b : sim9) {
    CHECK(in_bloch_body(b));
    sum += b.op;
  }
  CHECK(sum.norm_fro() < 1e-10);

  // the Gram matrix does not depend on the seed
  auto alt = regular_simplex(9, 0.5, 3, 982);
  for (std::size_t a = 0; a < 9; ++a)
    for (std::size_t b = 0; b < 9; ++b)
      CHECK(bloch_inner(sim9[a], sim9[b]) ==
            doctest::Approx(bloch_inner(alt[a], alt[b])).epsilon(1e-9));

  CHECK_THROWS(regular_simplex(10, 0.5, 3, 0));  // n > d^2
  CHECK_THROWS(regular_simplex(1, 0.5, 3, 0));
}

TEST_CASE("inball inclusion and the d=2 ball") {
  SeededRng rng(14);
  for (std::size_t d : {2, 3, 4, 5}) {
    const double r_in = 1.0 / static_cast<double>(d - 1);
    for (int t = 0; t < 500; ++t) {
      Mat dir = bloch_projector_apply(random_hermitian(d, rng));
      const double norm = dir.norm_fro() / std::sqrt(static_cast<double>(d * (d - 1)));
      dir *= rng.uniform() * r_in / norm;
      CHECK(in_bloch_body(BlochVector{d, dir}));
    }
  }
  // d = 2 only: the whole outball is the body
  for (int t = 0; t < 200; ++t) {
    Mat dir = bloch_projector_apply(random_hermitian(2, rng));
    dir *= rng.uniform() * std::sqrt(2.0) / dir.norm_fro();
    CHECK(in_bloch_body(BlochVector{2, dir}));
  }
}

TEST_CASE("purity test") {
  SeededRng rng(15);
  CHECK(purity_test(random_pure_density(4, rng)));
  CHECK_FALSE(purity_test(Mat::identity(3) * cplx(1.0 / 3.0)));
  // (2/3)|0><0| + (1/3)|1><1| has Tr rho^2 = 5/9
  Mat mixed(3, 3);
  mixed(0, 0) = 2.0 / 3.0;
  mixed(1, 1) = 1.0 / 3.0;
  CHECK_FALSE(purity_test(mixed));
}
