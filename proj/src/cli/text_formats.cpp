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

#include "mixlab/cli/text_formats.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "mixlab/errors.hpp"

namespace mixlab::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class Int>
Int parse_int(std::string_view s, const char* what) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  Int v{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) {
    throw OverflowError(std::string(what) + " out of range: '" + std::string(s) + "'");
  }
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(std::string("invalid ") + what + " '" + std::string(s) + "'", 0);
  }
  return v;
}

ExpVec parse_point(std::string_view text, std::size_t d) {
  auto s = trim(text);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') {
    throw ParseError("expected a parenthesized point, got '" + std::string(text) + "'", 0);
  }
  std::vector<std::int64_t> coords;
  for (auto piece : split(s.substr(1, s.size() - 2), ',')) {
    coords.push_back(parse_int<std::int64_t>(piece, "coordinate"));
  }
  if (coords.size() != d) {
    throw DomainError("point '" + std::string(s) + "' does not have " + std::to_string(d) +
                      " coordinates");
  }
  return ExpVec(std::move(coords));
}

}  // namespace

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<ExpVec> parse_points(std::string_view text, std::size_t d) {
  std::vector<ExpVec> out;
  if (trim(text).empty()) return out;
  for (auto piece : split(text, ';')) out.push_back(parse_point(piece, d));
  return out;
}

CylinderSpec parse_cylinder(std::string_view text, std::size_t d) {
  CylinderSpec c(d);
  if (trim(text).empty()) return c;
  for (auto piece : split(text, ';')) {
    auto eq = piece.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("cylinder entry '" + std::string(piece) + "' lacks '=value'", 0);
    }
    c.assign(parse_point(piece.substr(0, eq), d),
             parse_int<std::uint32_t>(piece.substr(eq + 1), "cylinder value"));
  }
  return c;
}

IntBox parse_box(std::string_view text, std::size_t d) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("box must read '(lo):(hi)'", 0);
  return IntBox(parse_point(text.substr(0, colon), d), parse_point(text.substr(colon + 1), d));
}

std::vector<std::uint32_t> parse_values(std::string_view text) {
  std::vector<std::uint32_t> out;
  if (trim(text).empty()) return out;
  for (auto piece : split(text, ',')) out.push_back(parse_int<std::uint32_t>(piece, "value"));
  return out;
}

std::pair<std::int64_t, std::int64_t> parse_interval(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    auto v = parse_int<std::int64_t>(text, "integer");
    return {v, v};
  }
  const auto first = parse_int<std::int64_t>(text.substr(0, colon), "range start");
  const auto last = parse_int<std::int64_t>(text.substr(colon + 1), "range end");
  if (first > last) throw DomainError("empty range '" + std::string(text) + "'");
  return {first, last};
}

std::vector<Rational> parse_rationals(std::string_view text) {
  std::vector<Rational> out;
  for (auto piece : split(text, ',')) out.push_back(parse_rational(piece));
  return out;
}

}  // namespace mixlab::cli
