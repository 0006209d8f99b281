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
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mixlab {

/// Unbounded integers and fractions in lowest terms with positive denominator.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "n" for integers, otherwise "n/d".
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "n/d", "-n/d" (d nonzero); surrounding whitespace allowed.
Rational parse_rational(std::string_view text);

/// q^e for any integer e; q must be nonzero when e < 0.
Rational pow(const Rational& q, std::int64_t e);

/// p^(-m).
Rational inverse_prime_power(std::uint32_t p, std::size_t m);

}  // namespace mixlab
