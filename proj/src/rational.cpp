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

#include "mixlab/rational.hpp"

#include <cctype>

#include "mixlab/errors.hpp"

namespace mixlab {
namespace {

BigInt parse_integer(std::string_view s, std::size_t offset, bool allow_sign) {
  std::size_t i = 0;
  bool negative = false;
  if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) {
    negative = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw ParseError("expected digits", offset + i);
  BigInt v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw ParseError(std::string("unexpected character '") + s[i] + "' in rational", offset + i);
    }
    v = v * 10 + (s[i] - '0');
  }
  return negative ? BigInt(-v) : v;
}

}  // namespace

std::string to_string(const Rational& q) {
  const auto num = boost::multiprecision::numerator(q);
  const auto den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  auto body = text.substr(begin, end - begin);
  auto slash = body.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(body, begin, true));
  BigInt num = parse_integer(body.substr(0, slash), begin, true);
  BigInt den = parse_integer(body.substr(slash + 1), begin + slash + 1, false);
  if (den == 0) throw ParseError("zero denominator", begin + slash + 1);
  return Rational(num, den);
}

Rational pow(const Rational& q, std::int64_t e) {
  if (e < 0) {
    if (q == 0) throw DomainError("zero raised to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Rational result = 1;
  Rational base = q;
  auto k = static_cast<std::uint64_t>(e);
  while (k) {
    if (k & 1) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

Rational inverse_prime_power(std::uint32_t p, std::size_t m) {
  return Rational(BigInt(1), boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(m)));
}

}  // namespace mixlab
