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

#include <cstdio>

#include <nlohmann/json.hpp>

#include "qjw/io.hpp"

using namespace qjw;

TEST_CASE("matrix json round trip") {
  SeededRng rng(131);
  const Mat a = random_hermitian(3, rng);
  const Mat b = matrix_from_json(matrix_to_json(a));
  CHECK(distance_max(a, b) == 0.0);

  // the documented shape: rows/cols plus row-major [re, im] pairs
  auto j = matrix_to_json(a);
  CHECK(j["rows"] == 3);
  CHECK(j["cols"] == 3);
  CHECK(j["entries"].size() == 9);
  CHECK(j["entries"][1][0].get<double>() == a(0, 1).real());
  CHECK(j["entries"][1][1].get<double>() == a(0, 1).imag());

  auto bad = j;
  bad["entries"].erase(0);
  CHECK_THROWS(matrix_from_json(bad));
}

TEST_CASE("design json round trip") {
  auto sim = build_sim(3, 0.5, 137);
  auto j = design_to_json(sim);
  CHECK(j["d"] == 3);
  CHECK(j["constants"]["kappa"].get<double>() == doctest::Approx(0.5));
  ConicalDesign back = design_from_json(j);
  CHECK(back.count() == sim.count());
  CHECK(back.ks == doctest::Approx(sim.ks).epsilon(1e-14));
  for (std::size_t i = 0; i < sim.count(); ++i)
    CHECK(distance_max(back.ops[i], sim.ops[i]) == 0.0);
}

TEST_CASE("descriptor json round trip") {
  EjaDescriptor d = parse_descriptor("quat:2 + real:3 + spin:4");
  auto j = descriptor_to_json(d);
  CHECK(j["summands"].size() == 3);
  CHECK(j["summands"][0]["kind"] == "QuatHerm");
  CHECK(j["summands"][0]["n"] == 2);
  CHECK(descriptor_from_json(j) == d);
  CHECK_THROWS(descriptor_from_json(nlohmann::json{{"summands", nlohmann::json::array()}}));
}

TEST_CASE("atomic file writes land complete") {
  const std::string path = "qjw_io_test.tmp.json";
  write_file_atomic(path, "{\"ok\":true}");
  CHECK(read_file(path) == "{\"ok\":true}");
  write_file_atomic(path, "{\"ok\":false}");
  CHECK(read_file(path) == "{\"ok\":false}");
  std::remove(path.c_str());
  CHECK_THROWS(read_file(path));
}
