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

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "mixlab/exp_vec.hpp"
#include "mixlab/haar.hpp"
#include "mixlab/rational.hpp"

namespace mixlab::cli {

/// "(0,0);(1,0);(0,1)" -> points of Z^d. Whitespace is ignored.
std::vector<ExpVec> parse_points(std::string_view text, std::size_t d);

/// "(0,0)=1;(1,0)=0" -> cylinder. The empty string is the full space.
CylinderSpec parse_cylinder(std::string_view text, std::size_t d);

/// "(lo...):(hi...)" -> box.
IntBox parse_box(std::string_view text, std::size_t d);

/// "0,1,1" -> unsigned integers.
std::vector<std::uint32_t> parse_values(std::string_view text);

/// "a:b" or "a" -> inclusive integer interval.
std::pair<std::int64_t, std::int64_t> parse_interval(std::string_view text);

/// "2,3,1/2,-1" -> rationals.
std::vector<Rational> parse_rationals(std::string_view text);

/// Splits on `sep`, trimming whitespace around each piece.
std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace mixlab::cli
