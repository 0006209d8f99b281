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
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mixlab/exp_vec.hpp"
#include "mixlab/prime_field.hpp"

namespace mixlab {

/// Sparse Laurent polynomial in F_p[u1^±1, ..., ud^±1].
///
/// Terms are kept in a map ordered lexicographically on exponent vectors; no
/// stored coefficient is ever zero. Values are immutable once built: every
/// operation returns a fresh polynomial.
class LaurentPoly {
 public:
  using Terms = std::map<ExpVec, std::uint32_t>;

  /// The zero polynomial.
  LaurentPoly(std::uint32_t p, std::size_t d);

  /// Accumulates (exponent, coefficient) pairs; coefficients are reduced
  /// mod p and zero sums dropped.
  static LaurentPoly from_terms(std::uint32_t p, std::size_t d,
                                std::span<const std::pair<ExpVec, std::int64_t>> terms);
  static LaurentPoly monomial(std::uint32_t p, const ExpVec& e, std::int64_t coeff = 1);
  static LaurentPoly constant(std::uint32_t p, std::size_t d, std::int64_t coeff);

  std::uint32_t modulus() const { return p_; }
  std::size_t dimension() const { return d_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Unit times u^e (a unit of the Laurent ring).
  bool is_monomial() const { return terms_.size() == 1; }

  /// Coefficient of u^e, zero when absent.
  std::uint32_t coefficient(const ExpVec& e) const;

  std::vector<ExpVec> support() const;
  /// Componentwise bounding box of the support; throws on the zero polynomial.
  IntBox support_box() const;

  /// u^v * this.
  LaurentPoly shifted(const ExpVec& v) const;
  /// c * this.
  LaurentPoly scaled(std::uint32_t c) const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

 private:
  std::uint32_t p_;
  std::size_t d_;
  Terms terms_;

  friend LaurentPoly poly_add(const LaurentPoly&, const LaurentPoly&);
  friend LaurentPoly poly_mul(const LaurentPoly&, const LaurentPoly&);
};

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_neg(const LaurentPoly& a);
LaurentPoly poly_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b);

inline LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return poly_add(a, b); }
inline LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return poly_sub(a, b); }
inline LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) { return poly_mul(a, b); }

/// h^(p^n), computed by scaling every exponent by p^n. Valid because the
/// coefficients lie in the prime field, where c^p = c.
LaurentPoly frobenius_power(const LaurentPoly& h, std::uint32_t n);

/// Sum over j of coeffs[j] * u^(n * shape[j]): the n-th dilate of a shape
/// carrying the given coefficients.
LaurentPoly shape_poly(std::span<const ExpVec> shape, std::span<const FpScalar> coeffs,
                       std::int64_t n);

/// Canonical text: terms in lexicographic exponent order joined by " + ",
/// coefficients as residues in [0, p). The zero polynomial prints as "0".
std::string to_string(const LaurentPoly& h);

/// Parses the polynomial grammar
///   poly     := term {("+"|"-") term}
///   term     := [coeff "*"] monomial | coeff
///   monomial := "u"INDEX["^"INT] {"*" "u"INDEX["^"INT]}
/// with whitespace ignored and a leading sign allowed. Coefficients are
/// reduced mod p. Throws ParseError (with a byte offset), DomainError for an
/// invalid modulus, OverflowError for out-of-range exponents.
LaurentPoly parse_poly(std::string_view text, std::uint32_t p, std::size_t d);

}  // namespace mixlab
