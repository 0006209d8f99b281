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

#include <cctype>
#include <string>

#include "mixlab/errors.hpp"
#include "mixlab/laurent_poly.hpp"

namespace mixlab {

std::string to_string(const LaurentPoly& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : h.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < e.dimension(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'u' + std::to_string(i + 1);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(c);
    } else if (c == 1) {
      out += mono;
    } else {
      out += std::to_string(c) + '*' + mono;
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::uint32_t p, std::size_t d) : text_(text), p_(p), d_(d) {}

  LaurentPoly parse() {
    std::vector<std::pair<ExpVec, std::int64_t>> terms;
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto [e, c] = term();
      terms.emplace_back(std::move(e), negate ? fp::neg(c, p_) : c);
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negate = peek() == '-';
      ++pos_;
    }
    return LaurentPoly::from_terms(p_, d_, terms);
  }

 private:
  std::pair<ExpVec, std::uint32_t> term() {
    skip_ws();
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint32_t c = coefficient();
      skip_ws();
      if (peek() != '*') return {ExpVec(d_), c};
      ++pos_;
      return {monomial(), c};
    }
    if (peek() == 'u') return {monomial(), 1};
    fail("expected a coefficient or a monomial");
  }

  ExpVec monomial() {
    std::vector<std::int64_t> e(d_, 0);
    while (true) {
      skip_ws();
      if (peek() != 'u') fail("expected 'u'");
      ++pos_;
      skip_ws();
      const std::size_t index_pos = pos_;
      std::int64_t index = integer(false);
      if (index < 1 || static_cast<std::size_t>(index) > d_) {
        throw ParseError("variable index u" + std::to_string(index) + " outside 1.." +
                             std::to_string(d_), index_pos);
      }
      skip_ws();
      std::int64_t power = 1;
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        power = integer(true);
      }
      auto& slot = e[static_cast<std::size_t>(index - 1)];
      slot += power;
      if (slot > kMaxExponent || slot < -kMaxExponent) {
        throw OverflowError("exponent exceeds bound 2^20");
      }
      skip_ws();
      // A '*' continues the monomial only when another variable follows.
      if (peek() == '*') {
        std::size_t save = pos_;
        ++pos_;
        skip_ws();
        if (peek() == 'u') continue;
        pos_ = save;
      }
      break;
    }
    return ExpVec(std::move(e));
  }

  std::uint32_t coefficient() {
    std::uint64_t r = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      r = (r * 10 + static_cast<std::uint64_t>(peek() - '0')) % p_;
      ++pos_;
    }
    return static_cast<std::uint32_t>(r);
  }

  std::int64_t integer(bool allow_sign) {
    bool negative = false;
    if (allow_sign && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos_;
      skip_ws();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer");
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > kMaxExponent) throw OverflowError("integer exceeds bound 2^20");
      ++pos_;
    }
    return negative ? -v : v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    std::string found = at_end() ? "end of input" : std::string("'") + text_[pos_] + "'";
    throw ParseError(what + ", found " + found, pos_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::uint32_t p_;
  std::size_t d_;
};

}  // namespace

LaurentPoly parse_poly(std::string_view text, std::uint32_t p, std::size_t d) {
  require_valid_modulus(p);
  return PolyParser(text, p, d).parse();
}

}  // namespace mixlab
