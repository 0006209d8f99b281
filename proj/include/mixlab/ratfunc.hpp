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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mixlab {

/// Dense univariate polynomial over F_p in the variable t; coefficients are
/// stored lowest degree first with no trailing zeros.
class UniPoly {
 public:
  explicit UniPoly(std::uint32_t p) : p_(p) {}
  UniPoly(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static UniPoly constant(std::uint32_t p, std::int64_t c) { return UniPoly(p, {c}); }
  /// c * t^k.
  static UniPoly monomial(std::uint32_t p, std::size_t k, std::int64_t c = 1);

  std::uint32_t modulus() const { return p_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(c_.size()) - 1; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }

  UniPoly monic() const;
  /// t^i -> t^(i p^n); equals this^(p^n) since coefficients lie in F_p.
  UniPoly frobenius(std::uint32_t n) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Quotient and remainder; b must be nonzero.
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);

/// Element of F_p(t) in canonical form: gcd(num, den) = 1, den monic.
class RatFunc {
 public:
  RatFunc(UniPoly numerator, UniPoly denominator);
  explicit RatFunc(UniPoly poly) : RatFunc(poly, UniPoly::constant(poly.modulus(), 1)) {}

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  std::uint32_t modulus() const { return num_.modulus(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc frobenius(std::uint32_t n) const;

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  friend bool operator==(const RatFunc&, const RatFunc&) = default;

 private:
  UniPoly num_;
  UniPoly den_;
};

std::string to_string(const UniPoly& a);
/// "num" when the denominator is 1, otherwise "(num)/(den)".
std::string to_string(const RatFunc& x);

/// Grammar: ratfunc := part ["/" part]; part := "(" poly ")" | poly;
/// poly := term {("+"|"-") term}; term := coeff ["*" "t" ["^" N]] | "t" ["^" N].
RatFunc parse_ratfunc(std::string_view text, std::uint32_t p);

/// sum_j coeffs[j] * xs[j] == 1 in F_p(t).
bool solves_unit_equation(std::span<const RatFunc> xs, std::span<const std::uint32_t> coeffs);

/// (x_j^(p^n))_j for a base solution of sum a_j x_j = 1 with a_j in F_p.
/// Throws DomainError if the base is not a solution; the result is
/// re-checked against the equation before returning.
std::vector<RatFunc> frobenius_orbit(std::uint32_t p, std::span<const RatFunc> base,
                                     std::span<const std::uint32_t> coeffs, std::uint32_t n);

}  // namespace mixlab
