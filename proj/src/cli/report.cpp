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

#include "mixlab/cli/report.hpp"

#include <limits>

namespace mixlab::cli {
namespace {

Json integer_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

Json rational_json(const Rational& q) {
  Json j;
  j["num"] = integer_json(boost::multiprecision::numerator(q));
  j["den"] = integer_json(boost::multiprecision::denominator(q));
  return j;
}

Json point_json(const ExpVec& e) {
  Json j = Json::array();
  for (auto c : e.coords()) j.push_back(c);
  return j;
}

Json points_json(const std::vector<ExpVec>& points) {
  Json j = Json::array();
  for (const auto& e : points) j.push_back(point_json(e));
  return j;
}

void write_report(const Report& report, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::kJson) {
    out << report.json.dump(2) << '\n';
    return;
  }
  for (const auto& row : report.csv) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << csv_field(row[i]);
    }
    out << '\n';
  }
}

}  // namespace mixlab::cli
