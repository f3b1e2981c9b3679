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

#include "qjw/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qjw {

using nlohmann::json;

json matrix_to_json(const Mat& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.size(); ++i)
    entries.push_back({m.data()[i].real(), m.data()[i].imag()});
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Mat matrix_from_json(const json& j) {
  const std::size_t rows = j.at("rows").get<std::size_t>();
  const std::size_t cols = j.at("cols").get<std::size_t>();
  const auto& entries = j.at("entries");
  require(entries.size() == rows * cols, "matrix_from_json: entry count mismatch");
  Mat m(rows, cols);
  for (std::size_t i = 0; i < rows * cols; ++i) {
    m.data()[i] = cplx(entries[i][0].get<double>(), entries[i][1].get<double>());
  }
  return m;
}

json design_to_json(const ConicalDesign& d) {
  json ops = json::array();
  for (const auto& a : d.ops) ops.push_back(matrix_to_json(a));
  return json{{"d", d.dim},
              {"ops", ops},
              {"constants",
               {{"ks", d.ks}, {"ka", d.ka}, {"kappa", d.kappa}, {"t", d.t_rms}}}};
}

ConicalDesign design_from_json(const json& j) {
  const std::size_t d = j.at("d").get<std::size_t>();
  std::vector<Mat> ops;
  for (const auto& m : j.at("ops")) ops.push_back(matrix_from_json(m));
  return make_design(d, std::move(ops));
}

json report_to_json(const DesignReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions)
    conditions.push_back({{"name", c.name}, {"residual", c.residual}, {"pass", c.pass}});
  return json{{"d", r.dim},
              {"count", r.count},
              {"ks", r.ks},
              {"ka", r.ka},
              {"kplus_from_iii", r.kplus_from_iii},
              {"kminus_from_iii", r.kminus_from_iii},
              {"kplus_from_v", r.kplus_from_v},
              {"kminus_from_v", r.kminus_from_v},
              {"conditions", conditions},
              {"spanning", r.spanning},
              {"pass", r.pass},
              {"failure", r.failure}};
}

namespace {

const char* kind_name(SimpleKind k) {
  switch (k) {
    case SimpleKind::RealSym: return "RealSym";
    case SimpleKind::ComplexHerm: return "ComplexHerm";
    case SimpleKind::QuatHerm: return "QuatHerm";
    case SimpleKind::Spin: return "Spin";
    case SimpleKind::Exceptional: return "Exceptional";
  }
  return "?";
}

SimpleKind kind_from_name(const std::string& name) {
  if (name == "RealSym") return SimpleKind::RealSym;
  if (name == "ComplexHerm") return SimpleKind::ComplexHerm;
  if (name == "QuatHerm") return SimpleKind::QuatHerm;
  if (name == "Spin") return SimpleKind::Spin;
  if (name == "Exceptional") return SimpleKind::Exceptional;
  require(false, "descriptor_from_json: unknown kind '" + name + "'");
  return SimpleKind::RealSym;
}

}  // namespace

json descriptor_to_json(const EjaDescriptor& d) {
  json summands = json::array();
  for (const auto& s : d.summands)
    summands.push_back({{"kind", kind_name(s.kind)}, {"n", s.n}});
  return json{{"summands", summands}};
}

EjaDescriptor descriptor_from_json(const json& j) {
  EjaDescriptor d;
  for (const auto& s : j.at("summands"))
    d.summands.push_back(
        {kind_from_name(s.at("kind").get<std::string>()), s.at("n").get<std::size_t>()});
  require(!d.summands.empty(), "descriptor_from_json: empty descriptor");
  return d;
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out.good()) throw std::runtime_error("write_file_atomic: cannot open " + tmp);
    out << contents;
    out.flush();
    if (!out.good())
      throw std::runtime_error("write_file_atomic: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("write_file_atomic: rename failed for " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("read_file: cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace qjw
