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

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "mixlab/errors.hpp"
#include "mixlab/ratfunc.hpp"

namespace mixlab {
namespace {

RatFunc rf(const char* text, std::uint32_t p) { return parse_ratfunc(text, p); }

UniPoly random_unipoly(std::mt19937_64& rng, std::uint32_t p, int max_degree) {
  std::vector<std::int64_t> c(1 + rng() % (max_degree + 1));
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % p);
  return UniPoly(p, c);
}

// x^(p^n) by repeated multiplication.
RatFunc power_by_multiplication(const RatFunc& x, std::uint32_t n) {
  RatFunc acc = x;
  for (std::uint32_t step = 0; step < n; ++step) {
    RatFunc next = acc;
    for (std::uint32_t k = 1; k < x.modulus(); ++k) next = next * acc;
    acc = next;
  }
  return acc;
}

TEST(UniPolyTest, DivmodAndGcd) {
  UniPoly a(3, {1, 0, 1});
  UniPoly b(3, {2, 1});
  auto [q, r] = divmod(a, b);
  EXPECT_EQ(q * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  UniPoly f(5, {4, 0, 1});  // t^2 - 1
  UniPoly g(5, {1, 1});     // t + 1
  EXPECT_EQ(gcd(f, g), g);
  EXPECT_THROW(divmod(f, UniPoly(5)), DomainError);
}

TEST(UniPolyTest, FrobeniusMatchesPower) {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_unipoly(rng, p, 4);
      UniPoly power = a;
      for (std::uint32_t k = 1; k < p; ++k) power = power * a;
      EXPECT_EQ(a.frobenius(1), power);
    }
  }
}

TEST(RatFuncTest, Normalizes) {
  auto x = RatFunc(UniPoly(5, {4, 0, 1}), UniPoly(5, {2, 2}));  // (t^2-1)/(2t+2)
  EXPECT_EQ(x.denominator(), UniPoly(5, {1}));
  EXPECT_EQ(x, RatFunc(UniPoly(5, {2, 3})));  // (t-1)/2 = 3t + 2
  EXPECT_THROW(RatFunc(UniPoly(5, {1}), UniPoly(5)), DomainError);
  auto y = rf("(1 + t)/(2*t^2)", 3);
  EXPECT_EQ(y.denominator().leading(), 1u);
}

TEST(RatFuncTest, FieldLaws) {
  std::mt19937_64 rng(2);
  for (std::uint32_t p : {2u, 7u}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto den = random_unipoly(rng, p, 3);
      auto den2 = random_unipoly(rng, p, 3);
      if (den.is_zero() || den2.is_zero()) continue;
      RatFunc a(random_unipoly(rng, p, 3), den);
      RatFunc b(random_unipoly(rng, p, 3), den2);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_TRUE((a - a).is_zero());
      if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    }
  }
}

TEST(RatFuncTest, TextRoundTrip) {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {2u, 3u, 11u}) {
    for (int trial = 0; trial < 30; ++trial) {
      auto den = random_unipoly(rng, p, 4);
      if (den.is_zero()) continue;
      RatFunc x(random_unipoly(rng, p, 4), den);
      EXPECT_EQ(parse_ratfunc(to_string(x), p), x) << to_string(x);
    }
  }
  EXPECT_EQ(to_string(rf("1 + t", 2)), "1 + t");
  EXPECT_EQ(to_string(rf("t/(1+t)", 2)), "(t)/(1 + t)");
  EXPECT_EQ(rf("-t", 3), RatFunc(UniPoly(3, {0, 2})));
  EXPECT_THROW(rf("t +", 2), ParseError);
  EXPECT_THROW(rf("x", 2), ParseError);
  EXPECT_THROW(rf("1/0", 2), ParseError);
}

TEST(FrobeniusOrbitTest, Examples) {
  std::vector<RatFunc> base{rf("t", 2), rf("1+t", 2)};
  std::vector<std::uint32_t> ones{1, 1};
  auto n1 = frobenius_orbit(2, base, ones, 1);
  EXPECT_EQ(n1, (std::vector<RatFunc>{rf("t^2", 2), rf("1+t^2", 2)}));
  EXPECT_TRUE(solves_unit_equation(n1, ones));
  EXPECT_EQ(frobenius_orbit(2, base, ones, 3),
            (std::vector<RatFunc>{rf("t^8", 2), rf("1+t^8", 2)}));
  EXPECT_EQ(frobenius_orbit(2, base, ones, 0), base);

  std::vector<RatFunc> base3{rf("t", 3), rf("1-t", 3)};
  EXPECT_EQ(frobenius_orbit(3, base3, ones, 1),
            (std::vector<RatFunc>{rf("t^3", 3), rf("1-t^3", 3)}));
}

TEST(FrobeniusOrbitTest, MatchesRepeatedMultiplication) {
  std::vector<RatFunc> base{rf("t/(1+t)", 3), rf("1/(1+t)", 3)};
  std::vector<std::uint32_t> ones{1, 1};
  for (std::uint32_t n = 0; n <= 3; ++n) {
    auto orbit = frobenius_orbit(3, base, ones, n);
    for (std::size_t j = 0; j < base.size(); ++j) {
      EXPECT_EQ(orbit[j], power_by_multiplication(base[j], n));
    }
  }
}

TEST(FrobeniusOrbitTest, DistinctSolutions) {
  std::vector<RatFunc> base{rf("t", 2), rf("1+t", 2)};
  std::vector<std::uint32_t> ones{1, 1};
  std::set<std::string> seen;
  for (std::uint32_t n = 0; n <= 10; ++n) {
    auto orbit = frobenius_orbit(2, base, ones, n);
    EXPECT_TRUE(solves_unit_equation(orbit, ones));
    seen.insert(to_string(orbit[0]) + "|" + to_string(orbit[1]));
  }
  EXPECT_EQ(seen.size(), 11u);
}

TEST(FrobeniusOrbitTest, Errors) {
  std::vector<RatFunc> bad{rf("t", 2), rf("t", 2)};
  std::vector<std::uint32_t> ones{1, 1};
  EXPECT_THROW(frobenius_orbit(2, bad, ones, 1), DomainError);
  std::vector<RatFunc> base{rf("t", 2), rf("1+t", 2)};
  EXPECT_THROW(frobenius_orbit(2, base, ones, 30), OverflowError);
  std::vector<std::uint32_t> one{1};
  EXPECT_THROW(frobenius_orbit(2, base, one, 1), DomainError);
}

}  // namespace
}  // namespace mixlab
