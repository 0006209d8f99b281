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
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mixlab/laurent_poly.hpp"

namespace mixlab::testing {

inline LaurentPoly poly(const std::string& text, std::uint32_t p, std::size_t d = 2) {
  return parse_poly(text, p, d);
}

/// Up to `max_terms` terms with exponents in [-span, span]^d.
inline LaurentPoly random_poly(std::mt19937_64& rng, std::uint32_t p, std::size_t d,
                               int max_terms = 5, std::int64_t span = 3) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<std::int64_t> exp(-span, span);
  std::uniform_int_distribution<std::int64_t> coeff(0, static_cast<std::int64_t>(p) * 2);
  std::vector<std::pair<ExpVec, std::int64_t>> terms;
  for (int i = count(rng); i > 0; --i) {
    std::vector<std::int64_t> e(d);
    for (auto& x : e) x = exp(rng);
    terms.emplace_back(ExpVec(std::move(e)), coeff(rng) - static_cast<std::int64_t>(p));
  }
  return LaurentPoly::from_terms(p, d, terms);
}

inline bool has_zero_coefficient(const LaurentPoly& h) {
  for (const auto& [e, c] : h.terms()) {
    if (c == 0 || c >= h.modulus()) return true;
  }
  return false;
}

}  // namespace mixlab::testing
