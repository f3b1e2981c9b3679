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

#ifndef QJW_IO_HPP
#define QJW_IO_HPP

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qjw/designs.hpp"
#include "qjw/jordan.hpp"

namespace qjw {

// {"rows":n,"cols":m,"entries":[[re,im],...]} row-major
nlohmann::json matrix_to_json(const Mat& m);
Mat matrix_from_json(const nlohmann::json& j);

// {"d":..., "ops":[matrix...], "constants":{"ks","ka","kappa","t"}}
nlohmann::json design_to_json(const ConicalDesign& d);
ConicalDesign design_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const DesignReport& r);

// {"summands":[{"kind":"QuatHerm","n":2},...]}
nlohmann::json descriptor_to_json(const EjaDescriptor& d);
EjaDescriptor descriptor_from_json(const nlohmann::json& j);

// Write-then-rename so readers never observe a partial file.
void write_file_atomic(const std::string& path, const std::string& contents);

std::string read_file(const std::string& path);

}  // namespace qjw

#endif
