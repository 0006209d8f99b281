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

#include "mixlab/laurent_poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixlab/errors.hpp"

namespace mixlab {
namespace {

void require_compatible(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.modulus() != b.modulus()) throw DomainError("polynomials over different prime fields");
  if (a.dimension() != b.dimension()) throw DomainError("polynomials in different dimensions");
}

}  // namespace

LaurentPoly::LaurentPoly(std::uint32_t p, std::size_t d) : p_(p), d_(d) {
  require_valid_modulus(p);
}

LaurentPoly LaurentPoly::from_terms(std::uint32_t p, std::size_t d,
                                    std::span<const std::pair<ExpVec, std::int64_t>> terms) {
  LaurentPoly out(p, d);
  for (const auto& [e, c] : terms) {
    if (e.dimension() != d) throw DomainError("term exponent has wrong dimension");
    auto r = fp::reduce(c, p);
    if (r == 0) continue;
    auto [it, inserted] = out.terms_.try_emplace(e, r);
    if (!inserted) {
      it->second = fp::add(it->second, r, p);
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::monomial(std::uint32_t p, const ExpVec& e, std::int64_t coeff) {
  std::pair<ExpVec, std::int64_t> term{e, coeff};
  return from_terms(p, e.dimension(), std::span(&term, 1));
}

LaurentPoly LaurentPoly::constant(std::uint32_t p, std::size_t d, std::int64_t coeff) {
  return monomial(p, ExpVec(d), coeff);
}

std::uint32_t LaurentPoly::coefficient(const ExpVec& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

std::vector<ExpVec> LaurentPoly::support() const {
  std::vector<ExpVec> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

IntBox LaurentPoly::support_box() const {
  if (is_zero()) throw DomainError("support box of the zero polynomial");
  auto s = support();
  return bounding_box(s);
}

LaurentPoly LaurentPoly::shifted(const ExpVec& v) const {
  if (v.dimension() != d_) throw DomainError("shift vector has wrong dimension");
  LaurentPoly out(p_, d_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + v, c);
  return out;
}

LaurentPoly LaurentPoly::scaled(std::uint32_t c) const {
  LaurentPoly out(p_, d_);
  c %= p_;
  if (c == 0) return out;
  for (const auto& [e, a] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, fp::mul(a, c, p_));
  return out;
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) {
  require_compatible(a, b);
  LaurentPoly out = a;
  for (const auto& [e, c] : b.terms_) {
    auto [it, inserted] = out.terms_.try_emplace(e, c);
    if (!inserted) {
      it->second = fp::add(it->second, c, a.p_);
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

LaurentPoly poly_neg(const LaurentPoly& a) { return a.scaled(a.modulus() - 1); }

LaurentPoly poly_sub(const LaurentPoly& a, const LaurentPoly& b) { return poly_add(a, poly_neg(b)); }

LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) {
  require_compatible(a, b);
  const auto p = a.p_;
  LaurentPoly out(p, a.d_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      auto prod = fp::mul(ca, cb, p);
      auto [it, inserted] = out.terms_.try_emplace(ea + eb, prod);
      if (!inserted) it->second = fp::add(it->second, prod, p);
    }
  }
  std::erase_if(out.terms_, [](const auto& t) { return t.second == 0; });
  return out;
}

LaurentPoly frobenius_power(const LaurentPoly& h, std::uint32_t n) {
  if (n < 1) throw DomainError("frobenius_power needs n >= 1");
  const bool constant = h.is_zero() || (h.is_monomial() && h.terms().begin()->first.is_zero());
  std::int64_t scale = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    scale *= h.modulus();
    if (scale > kMaxExponent) {
      if (constant) return h;
      throw OverflowError("Frobenius exponent p^n exceeds bound 2^20");
    }
  }
  std::vector<std::pair<ExpVec, std::int64_t>> terms;
  for (const auto& [e, c] : h.terms()) terms.emplace_back(e.scaled(scale), c);
  return LaurentPoly::from_terms(h.modulus(), h.dimension(), terms);
}

LaurentPoly shape_poly(std::span<const ExpVec> shape, std::span<const FpScalar> coeffs,
                       std::int64_t n) {
  if (shape.size() != coeffs.size()) throw DomainError("shape and coefficient lists differ in length");
  if (shape.empty()) throw DomainError("empty shape");
  if (n < 1) throw DomainError("dilation factor must be positive");
  const auto p = coeffs[0].modulus();
  const auto d = shape[0].dimension();
  std::vector<ExpVec> sorted(shape.begin(), shape.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("shape points are not distinct");
  }
  bool any_nonzero = false;
  LaurentPoly out(p, d);
  for (std::size_t j = 0; j < shape.size(); ++j) {
    if (coeffs[j].modulus() != p) throw DomainError("shape coefficients over different fields");
    if (shape[j].dimension() != d) throw DomainError("shape points of different dimension");
    if (coeffs[j].is_zero()) continue;
    any_nonzero = true;
    auto term = LaurentPoly::monomial(p, shape[j].scaled(n), coeffs[j].residue());
    if (out.coefficient(term.terms().begin()->first) != 0) {
      throw std::logic_error("shape_poly: exponent collision between distinct shape points");
    }
    out = out + term;
  }
  if (!any_nonzero) throw DomainError("shape coefficients are all zero");
  return out;
}

}  // namespace mixlab
