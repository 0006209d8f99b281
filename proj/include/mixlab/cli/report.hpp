// Copyright 2026 The mixlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixlab/exp_vec.hpp"
#include "mixlab/rational.hpp"

namespace mixlab::cli {

inline constexpr const char* kSchemaVersion = "mixlab/1";

using Json = nlohmann::ordered_json;

/// {"num": n, "den": d}; integers that do not fit in 64 bits become strings.
Json rational_json(const Rational& q);
Json point_json(const ExpVec& e);
Json points_json(const std::vector<ExpVec>& points);

/// A command's output in both serializations. CSV rows are stored
/// unescaped; the header is the first row.
struct Report {
  Json json;
  std::vector<std::vector<std::string>> csv;
};

enum class OutputFormat { kJson, kCsv };

/// JSON is pretty-printed with two-space indents; CSV quotes any field
/// containing a comma, quote or newline. Both end with a newline.
void write_report(const Report& report, OutputFormat format, std::ostream& out);

}  // namespace mixlab::cli
