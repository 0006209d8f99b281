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

#include "mixlab/ratfunc.hpp"

#include <cctype>
#include <stdexcept>

#include "mixlab/errors.hpp"
#include "mixlab/prime_field.hpp"

namespace mixlab {
namespace {

// Largest degree a Frobenius image may reach.
constexpr std::int64_t kMaxDegree = std::int64_t{1} << 24;

void require_same_field(const UniPoly& a, const UniPoly& b) {
  if (a.modulus() != b.modulus()) throw DomainError("polynomials over different prime fields");
}

}  // namespace

UniPoly::UniPoly(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p) {
  require_valid_modulus(p);
  c_.reserve(coeffs.size());
  for (auto c : coeffs) c_.push_back(fp::reduce(c, p));
  trim();
}

UniPoly UniPoly::monomial(std::uint32_t p, std::size_t k, std::int64_t c) {
  std::vector<std::int64_t> coeffs(k + 1, 0);
  coeffs[k] = c;
  return UniPoly(p, std::move(coeffs));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  const auto inv = fp::inv(leading(), p_);
  for (auto& c : out.c_) c = fp::mul(c, inv, p_);
  return out;
}

UniPoly UniPoly::frobenius(std::uint32_t n) const {
  std::int64_t scale = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    scale *= p_;
    if (scale > kMaxDegree) throw OverflowError("Frobenius degree exceeds 2^24");
  }
  if (degree() > 0 && degree() * scale > kMaxDegree) {
    throw OverflowError("Frobenius degree exceeds 2^24");
  }
  UniPoly out(p_);
  if (is_zero()) return out;
  out.c_.assign(static_cast<std::size_t>(degree() * scale + 1), 0);
  for (std::size_t i = 0; i < c_.size(); ++i) out.c_[i * static_cast<std::size_t>(scale)] = c_[i];
  return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  UniPoly out = a.c_.size() >= b.c_.size() ? a : b;
  const auto& shorter = a.c_.size() >= b.c_.size() ? b.c_ : a.c_;
  for (std::size_t i = 0; i < shorter.size(); ++i) out.c_[i] = fp::add(out.c_[i], shorter[i], a.p_);
  out.trim();
  return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  UniPoly neg = b;
  for (auto& c : neg.c_) c = fp::neg(c, b.p_);
  return a + neg;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  UniPoly out(a.p_);
  if (a.is_zero() || b.is_zero()) return out;
  const auto p = a.p_;
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.c_[i]} * b.c_[j]) % p;
    }
  }
  out.c_.assign(acc.begin(), acc.end());
  out.trim();
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const auto p = a.p_;
  UniPoly q(p);
  UniPoly r = a;
  if (a.degree() < b.degree()) return {q, r};
  q.c_.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const auto inv_lead = fp::inv(b.leading(), p);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const auto factor = fp::mul(r.leading(), inv_lead, p);
    q.c_[shift] = factor;
    for (std::size_t i = 0; i < b.c_.size(); ++i) {
      r.c_[shift + i] = fp::sub(r.c_[shift + i], fp::mul(factor, b.c_[i], p), p);
    }
    r.trim();
  }
  q.trim();
  return {q, r};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RatFunc::RatFunc(UniPoly numerator, UniPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  require_same_field(num_, den_);
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = UniPoly::constant(num_.modulus(), 1);
    return;
  }
  const auto g = gcd(num_, den_);
  num_ = divmod(num_, g).first;
  den_ = divmod(den_, g).first;
  const auto inv = UniPoly::constant(num_.modulus(), fp::inv(den_.leading(), num_.modulus()));
  num_ = num_ * inv;
  den_ = den_ * inv;
}

RatFunc RatFunc::frobenius(std::uint32_t n) const {
  return RatFunc(num_.frobenius(n), den_.frobenius(n));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw DomainError("division by the zero rational function");
  return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const UniPoly& a) {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto c = a.coeffs()[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    std::string mono = i == 0 ? "" : (i == 1 ? "t" : "t^" + std::to_string(i));
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + "*" + mono;
    }
  }
  return out;
}

std::string to_string(const RatFunc& x) {
  if (x.denominator().degree() == 0) return to_string(x.numerator());
  return "(" + to_string(x.numerator()) + ")/(" + to_string(x.denominator()) + ")";
}

namespace {

class RatFuncParser {
 public:
  RatFuncParser(std::string_view text, std::uint32_t p) : text_(text), p_(p) {}

  RatFunc parse() {
    UniPoly num = part();
    skip_ws();
    if (at_end()) return RatFunc(num);
    if (peek() != '/') fail("expected '/' or end of input");
    ++pos_;
    UniPoly den = part();
    skip_ws();
    if (!at_end()) fail("trailing input");
    if (den.is_zero()) throw ParseError("zero denominator", pos_);
    return RatFunc(num, den);
  }

 private:
  UniPoly part() {
    skip_ws();
    if (peek() != '(') return poly();
    ++pos_;
    UniPoly inner = poly();
    skip_ws();
    if (peek() != ')') fail("expected ')'");
    ++pos_;
    return inner;
  }

  UniPoly poly() {
    UniPoly acc(p_);
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      UniPoly t = term();
      acc = negate ? acc - t : acc + t;
      skip_ws();
      if (peek() != '+' && peek() != '-') return acc;
      negate = peek() == '-';
      ++pos_;
    }
  }

  UniPoly term() {
    skip_ws();
    std::int64_t coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number(true);
      skip_ws();
      if (peek() != '*') return UniPoly::constant(p_, coeff);
      ++pos_;
      skip_ws();
    }
    if (peek() != 't') fail("expected 't'");
    ++pos_;
    skip_ws();
    std::int64_t k = 1;
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      k = number(false);
      if (k > kMaxDegree) throw OverflowError("degree exceeds 2^24");
    }
    return UniPoly::monomial(p_, static_cast<std::size_t>(k), coeff);
  }

  // Reduced mod p when `reduce` is set, otherwise an exact small integer.
  std::int64_t number(bool reduce) {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (reduce) {
        v %= p_;
      } else if (v > kMaxDegree) {
        throw OverflowError("degree exceeds 2^24");
      }
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t p_;
};

}  // namespace

RatFunc parse_ratfunc(std::string_view text, std::uint32_t p) {
  require_valid_modulus(p);
  return RatFuncParser(text, p).parse();
}

bool solves_unit_equation(std::span<const RatFunc> xs, std::span<const std::uint32_t> coeffs) {
  if (xs.size() != coeffs.size() || xs.empty()) return false;
  const auto p = xs[0].modulus();
  RatFunc sum{UniPoly(p)};
  for (std::size_t j = 0; j < xs.size(); ++j) {
    sum = sum + xs[j] * RatFunc(UniPoly::constant(p, coeffs[j]));
  }
  return sum == RatFunc(UniPoly::constant(p, 1));
}

std::vector<RatFunc> frobenius_orbit(std::uint32_t p, std::span<const RatFunc> base,
                                     std::span<const std::uint32_t> coeffs, std::uint32_t n) {
  require_valid_modulus(p);
  if (base.size() != coeffs.size() || base.empty()) {
    throw DomainError("base solution and coefficient lists differ in length");
  }
  for (const auto& x : base) {
    if (x.modulus() != p) throw DomainError("base solution over a different prime field");
  }
  if (!solves_unit_equation(base, coeffs)) {
    throw DomainError("base does not satisfy sum a_j x_j = 1");
  }
  std::vector<RatFunc> out;
  out.reserve(base.size());
  for (const auto& x : base) out.push_back(x.frobenius(n));
  if (!solves_unit_equation(out, coeffs)) {
    throw std::logic_error("Frobenius image fails the unit equation");
  }
  return out;
}

}  // namespace mixlab
