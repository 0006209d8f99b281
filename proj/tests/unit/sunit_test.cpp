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

#include <set>
#include <utility>

#include <gtest/gtest.h>

#include "mixlab/errors.hpp"
#include "mixlab/sunit.hpp"
#include "oracles/brute_force.hpp"

namespace mixlab {
namespace {

using Pair = std::pair<Rational, Rational>;

std::vector<Rational> rats(std::initializer_list<Rational> xs) { return xs; }

SUnitGroup two_three(bool sign) { return SUnitGroup(rats({2, 3}), sign); }

std::set<Pair> as_pairs(const std::vector<SUnitSolution>& sols) {
  std::set<Pair> out;
  for (const auto& s : sols) out.emplace(s.values[0], s.values[1]);
  return out;
}

std::size_t non_degenerate(const std::vector<SUnitSolution>& sols) {
  std::size_t n = 0;
  for (const auto& s : sols) n += s.degeneracy.degenerate() ? 0 : 1;
  return n;
}

TEST(SUnitGroupTest, DerivedData) {
  SUnitGroup g(rats({Rational(6), Rational(5, 4)}), false);
  EXPECT_EQ(g.prime_support(), (std::vector<std::uint64_t>{2, 3, 5}));
  EXPECT_EQ(g.valuation_matrix(),
            (std::vector<std::vector<std::int64_t>>{{1, -2}, {1, 0}, {0, 1}}));
  EXPECT_EQ(g.rank(), 2u);
  EXPECT_EQ(SUnitGroup(rats({2, 4}), false).rank(), 1u);
  EXPECT_THROW(SUnitGroup(rats({0, 3}), false), DomainError);
}

TEST(MembershipTest, Examples) {
  auto g = two_three(false);
  auto e = membership(g, 12);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->exponents, (std::vector<std::int64_t>{2, 1}));
  EXPECT_FALSE(membership(g, 5).has_value());

  auto h = membership(SUnitGroup(rats({6, 10}), false), 360);
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->exponents, (std::vector<std::int64_t>{2, 1}));
}

TEST(MembershipTest, SignHandling) {
  EXPECT_FALSE(membership(two_three(false), Rational(-3, 4)).has_value());
  auto e = membership(two_three(true), Rational(-3, 4));
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->sign, -1);
  EXPECT_EQ(e->exponents, (std::vector<std::int64_t>{-2, 1}));
  EXPECT_THROW(membership(two_three(true), 0), DomainError);
}

TEST(MembershipTest, HeightBoundAndRank) {
  auto g = two_three(false);
  EXPECT_FALSE(membership(g, 8, 2).has_value());
  EXPECT_TRUE(membership(g, 8, 3).has_value());
  // 6 and 10 do not generate 15 = 2^-2 * 6 * 10 / ... only integer combinations count.
  EXPECT_FALSE(membership(SUnitGroup(rats({6, 10}), false), 15).has_value());
  EXPECT_FALSE(membership(SUnitGroup(rats({4}), false), 2).has_value());
}

TEST(MembershipTest, DependentGeneratorsPreferSmallExponents) {
  SUnitGroup g(rats({2, 4}), false);
  auto e = membership(g, 16);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(reconstruct(g, *e), Rational(16));
  EXPECT_EQ(e->exponents, (std::vector<std::int64_t>{0, 2}));
}

TEST(MembershipTest, Reconstructs) {
  const std::vector<SUnitGroup> groups{two_three(true), SUnitGroup(rats({6, 10}), true),
                                       SUnitGroup(rats({Rational(2, 3), 5, 10}), true)};
  for (const auto& g : groups) {
    for (int a = -3; a <= 3; ++a) {
      for (int b = -3; b <= 3; ++b) {
        for (int c = -2; c <= 2; ++c) {
          Rational q = pow(Rational(2), a) * pow(Rational(3), b) * pow(Rational(5), c);
          for (const auto& v : {q, Rational(-q)}) {
            auto e = membership(g, v);
            if (e) EXPECT_EQ(reconstruct(g, *e), v);
          }
        }
      }
    }
  }
}

TEST(SUnitEquationTest, Validates) {
  EXPECT_THROW(SUnitEquation(rats({1})), DomainError);
  EXPECT_THROW(SUnitEquation(rats({1, 0})), DomainError);
  SUnitEquation eq(rats({1, 1}));
  EXPECT_TRUE(eq.is_solution(rats({Rational(1, 3), Rational(2, 3)})));
  EXPECT_FALSE(eq.is_solution(rats({1, 1})));
}

TEST(DegeneracyTest, Examples) {
  auto a = classify_degeneracy(SUnitEquation(rats({1, 1, -1})), rats({1, 6, 6}));
  EXPECT_EQ(a.vanishing_subsets, (std::vector<std::vector<std::size_t>>{{1, 2}}));
  auto b = classify_degeneracy(SUnitEquation(rats({1, 1})), rats({Rational(1, 3), Rational(2, 3)}));
  EXPECT_FALSE(b.degenerate());
  auto c = classify_degeneracy(SUnitEquation(rats({1, 1, 1, -1})),
                               rats({Rational(1, 3), Rational(2, 3), 4, 4}));
  EXPECT_EQ(c.vanishing_subsets, (std::vector<std::vector<std::size_t>>{{2, 3}}));
}

TEST(DegeneracyTest, MinimalSubsetsOnly) {
  // x1 - x2 = 0 and x3 - x4 = 0 vanish; their union is not minimal.
  auto d = classify_degeneracy(SUnitEquation(rats({1, -1, 1, -1, 1})), rats({7, 7, 11, 11, 1}));
  EXPECT_EQ(d.vanishing_subsets, (std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}}));
  std::vector<Rational> many(21, 1);
  EXPECT_THROW(classify_degeneracy(SUnitEquation(many), many), DomainError);
  EXPECT_THROW(classify_degeneracy(SUnitEquation(rats({1, 1})), rats({1, 1})), DomainError);
}

TEST(EnumerateTest, Examples) {
  SUnitEquation eq(rats({1, 1}));
  auto h1 = enumerate_solutions(eq, two_three(false), 1);
  EXPECT_EQ(as_pairs(h1), (std::set<Pair>{{Rational(1, 2), Rational(1, 2)},
                                          {Rational(1, 3), Rational(2, 3)},
                                          {Rational(2, 3), Rational(1, 3)}}));
  auto h2 = as_pairs(enumerate_solutions(eq, two_three(false), 2));
  EXPECT_EQ(h2.size(), 5u);
  EXPECT_TRUE(h2.contains({Rational(1, 4), Rational(3, 4)}));
  EXPECT_TRUE(h2.contains({Rational(3, 4), Rational(1, 4)}));

  auto signed2 = as_pairs(enumerate_solutions(eq, two_three(true), 2));
  for (const Pair& extra : std::vector<Pair>{{2, -1}, {-1, 2}, {3, -2}, {-2, 3}, {4, -3}, {-3, 4},
                                             {Rational(4, 3), Rational(-1, 3)},
                                             {Rational(-1, 3), Rational(4, 3)}}) {
    EXPECT_TRUE(signed2.contains(extra)) << extra.first << "," << extra.second;
  }
  EXPECT_EQ(signed2.size(), 15u);
  EXPECT_TRUE(signed2.contains({Rational(-1, 2), Rational(3, 2)}));
}

TEST(EnumerateTest, SolutionsCarryVerifiedExponents) {
  SUnitEquation eq(rats({1, 1}));
  auto g = two_three(true);
  for (const auto& s : enumerate_solutions(eq, g, 3)) {
    EXPECT_TRUE(eq.is_solution(s.values));
    ASSERT_EQ(s.exponents.size(), 2u);
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_EQ(reconstruct(g, s.exponents[j]), s.values[j]);
      for (auto e : s.exponents[j].exponents) EXPECT_LE(std::abs(e), 3);
    }
  }
}

TEST(EnumerateTest, DeterministicOrder) {
  SUnitEquation eq(rats({1, 1}));
  auto a = enumerate_solutions(eq, two_three(true), 4, kDefaultEnumerationBudget, 1);
  auto b = enumerate_solutions(eq, two_three(true), 4, kDefaultEnumerationBudget, 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].values, b[i].values);
    EXPECT_EQ(a[i].exponents, b[i].exponents);
    if (i > 0) EXPECT_LT(a[i - 1].values, a[i].values);
  }
}

TEST(EnumerateTest, MatchesNaiveScan) {
  for (bool sign : {false, true}) {
    for (const auto& coeffs : {rats({1, 1}), rats({2, -1}), rats({Rational(1, 3), 1})}) {
      for (std::int64_t h = 0; h <= 3; ++h) {
        auto fast = as_pairs(enumerate_solutions(SUnitEquation(coeffs), two_three(sign), h));
        auto naive = oracle::naive_two_term_scan({2, 3}, coeffs[0], coeffs[1], h, sign);
        EXPECT_EQ(fast, naive) << "H=" << h << " sign=" << sign;
      }
    }
  }
}

TEST(EnumerateTest, ThreeTermsMatchNaiveScan) {
  SUnitEquation eq(rats({1, 1, -1}));
  auto g = two_three(true);
  std::set<Rational> box;
  for (int a = -1; a <= 1; ++a) {
    for (int b = -1; b <= 1; ++b) {
      Rational v = pow(Rational(2), a) * pow(Rational(3), b);
      box.insert(v);
      box.insert(-v);
    }
  }
  std::set<std::vector<Rational>> naive;
  for (const auto& x : box) {
    for (const auto& y : box) {
      for (const auto& z : box) {
        if (x + y - z == 1) naive.insert({x, y, z});
      }
    }
  }
  std::set<std::vector<Rational>> fast;
  for (const auto& s : enumerate_solutions(eq, g, 1)) fast.insert(s.values);
  EXPECT_EQ(fast, naive);
}

TEST(EnumerateTest, HeightMonotone) {
  SUnitEquation eq(rats({1, 1}));
  for (bool sign : {false, true}) {
    auto prev = as_pairs(enumerate_solutions(eq, two_three(sign), 0));
    for (std::int64_t h = 1; h <= 6; ++h) {
      auto cur = as_pairs(enumerate_solutions(eq, two_three(sign), h));
      for (const auto& s : prev) EXPECT_TRUE(cur.contains(s));
      prev = std::move(cur);
    }
  }
}

TEST(EnumerateTest, NonDegenerateCountStabilizes) {
  SUnitEquation eq(rats({1, 1}));
  const std::vector<std::size_t> positive{0, 3, 5, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7};
  const std::vector<std::size_t> with_sign{0, 9, 15, 21, 21, 21, 21, 21, 21, 21, 21, 21, 21};
  for (std::int64_t h = 0; h <= 12; ++h) {
    EXPECT_EQ(non_degenerate(enumerate_solutions(eq, two_three(false), h)), positive[h]) << h;
    EXPECT_EQ(non_degenerate(enumerate_solutions(eq, two_three(true), h)), with_sign[h]) << h;
  }
}

TEST(EnumerateTest, WorkBound) {
  SUnitEquation eq(rats({1, 1, 1}));
  EXPECT_THROW(enumerate_solutions(eq, two_three(true), 50, 1000), WorkBoundError);
  EXPECT_THROW(enumerate_solutions(eq, two_three(true), -1), DomainError);
}

TEST(FamilyCountTest, Examples) {
  SUnitEquation eq(rats({1, 1, -1}));
  auto g = two_three(true);
  std::vector<std::size_t> j23{1, 2};
  std::size_t prev = 0;
  for (std::int64_t h = 1; h <= 4; ++h) {
    auto count = degenerate_family_count(eq, g, j23, h);
    EXPECT_EQ(count, static_cast<std::size_t>(2 * (2 * h + 1) * (2 * h + 1))) << h;
    EXPECT_GT(count, prev);
    prev = count;
  }
  std::vector<std::size_t> j1{0};
  EXPECT_EQ(degenerate_family_count(eq, g, j1, 3), 0u);

  std::vector<std::size_t> any{0};
  EXPECT_EQ(degenerate_family_count(SUnitEquation(rats({1, 1})), two_three(false), any, 5), 0u);
}

TEST(FamilyCountTest, RejectsBadSubsets) {
  SUnitEquation eq(rats({1, 1, -1}));
  auto g = two_three(true);
  std::vector<std::size_t> empty;
  std::vector<std::size_t> all{0, 1, 2};
  std::vector<std::size_t> out_of_range{3};
  EXPECT_THROW(degenerate_family_count(eq, g, empty, 1), DomainError);
  EXPECT_THROW(degenerate_family_count(eq, g, all, 1), DomainError);
  EXPECT_THROW(degenerate_family_count(eq, g, out_of_range, 1), DomainError);
}

}  // namespace
}  // namespace mixlab
