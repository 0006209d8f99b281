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

#include <algorithm>
#include <optional>
#include <random>

#include <gtest/gtest.h>

#include "mixlab/errors.hpp"
#include "mixlab/ideal.hpp"
#include "mixlab/laurent_poly.hpp"
#include "oracles/brute_force.hpp"
#include "unit/test_support.hpp"

namespace mixlab {
namespace {

using testing::poly;

IntBox box2(std::int64_t lo0, std::int64_t lo1, std::int64_t hi0, std::int64_t hi1) {
  return IntBox(ExpVec{lo0, lo1}, ExpVec{hi0, hi1});
}

LaurentPoly from_row(std::uint32_t p, const std::vector<ExpVec>& sites, const FpVector& row) {
  std::vector<std::pair<ExpVec, std::int64_t>> terms;
  for (std::size_t i = 0; i < sites.size(); ++i) terms.emplace_back(sites[i], row[i]);
  return LaurentPoly::from_terms(p, sites.front().dimension(), terms);
}

// {v : v + fbox within target}, or nullopt when empty.
std::optional<IntBox> erosion_box(const IntBox& target, const IntBox& fbox) {
  std::vector<std::int64_t> lo, hi;
  for (std::size_t i = 0; i < target.dimension(); ++i) {
    lo.push_back(target.lo[i] - fbox.lo[i]);
    hi.push_back(target.hi[i] - fbox.hi[i]);
    if (lo.back() > hi.back()) return std::nullopt;
  }
  return IntBox(ExpVec(lo), ExpVec(hi));
}

TEST(ErosionTest, Examples) {
  auto a = erosion_support(box2(0, 0, 2, 2), box2(0, 0, 1, 1));
  EXPECT_EQ(a, (std::vector<ExpVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
  EXPECT_TRUE(erosion_support(box2(0, 0, 0, 0), box2(0, 0, 1, 1)).empty());
  auto c = erosion_support(box2(-1, 0, 1, 3), box2(0, 0, 1, 1));
  EXPECT_EQ(c, (std::vector<ExpVec>{{-1, 0}, {-1, 1}, {-1, 2}, {0, 0}, {0, 1}, {0, 2}}));
}

TEST(DividesTest, Examples) {
  auto f = poly("1+u1+u2", 2);
  auto sq = divides(f, poly("1+u1^2+u2^2", 2));
  ASSERT_TRUE(sq.has_value());
  EXPECT_EQ(sq->quotient, f);
  EXPECT_FALSE(divides(f, poly("1+u1^3+u2^3", 2)).has_value());
  auto g = poly("u1+u2", 2);
  auto w = divides(f, f * g);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->quotient, g);
}

TEST(DividesTest, SpecialCases) {
  auto f = poly("1+u1+u2", 3);
  auto zero = divides(f, LaurentPoly(3, 2));
  ASSERT_TRUE(zero.has_value());
  EXPECT_TRUE(zero->quotient.is_zero());

  auto unit = poly("2*u1^-1*u2", 3);
  auto h = poly("1 + u1^4 + 2*u2^-3", 3);
  auto q = divides(unit, h);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(unit * q->quotient, h);
}

TEST(DividesTest, NegativeExponents) {
  auto f = poly("u1^-1 + u2^-1 + 1", 5);
  auto g = poly("3*u1^-2 + u2^4", 5);
  auto w = divides(f, f * g);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->quotient, g);
}

TEST(DividesTest, AgreesWithExhaustiveSearch) {
  const std::vector<LaurentPoly> fs{poly("1+u1+u2", 2), poly("1+u1+u2+u1*u2", 2), poly("1+u1", 2),
                                    poly("u1+u2", 2)};
  std::mt19937_64 rng(42);
  const auto cells = box2(0, 0, 3, 3).points();
  int present = 0;
  for (const auto& f : fs) {
    for (int trial = 0; trial < 80; ++trial) {
      LaurentPoly h(2, 2);
      if (trial % 2 == 0) {
        std::vector<std::pair<ExpVec, std::int64_t>> terms;
        for (const auto& c : cells) {
          if (rng() % 3 == 0) terms.emplace_back(c, 1);
        }
        h = LaurentPoly::from_terms(2, 2, terms);
      } else {
        auto g = testing::random_poly(rng, 2, 2, 4, 1);
        h = f * g.shifted(ExpVec{1, 1});
        bool inside = true;
        for (const auto& e : h.support()) inside = inside && box2(0, 0, 3, 3).contains(e);
        if (!inside) continue;
      }
      if (h.is_zero()) continue;
      auto w = divides(f, h);
      auto search = erosion_box(h.support_box(), f.support_box());
      auto expected = search ? oracle::divisor_search(f, h, *search) : std::nullopt;
      ASSERT_EQ(w.has_value(), expected.has_value()) << to_string(f) << " | " << to_string(h);
      if (w) {
        ++present;
        EXPECT_EQ(f * w->quotient, h);
        EXPECT_EQ(w->quotient, *expected);
      }
    }
  }
  EXPECT_GT(present, 20);
}

TEST(DividesTest, PathsAgree) {
  std::mt19937_64 rng(3);
  auto f = poly("1+u1+u2", 2);
  for (int trial = 0; trial < 40; ++trial) {
    auto h = testing::random_poly(rng, 2, 2, 6, 4);
    if (trial % 2) h = f * h;
    auto a = divides(f, h, EliminationPath::kGeneric);
    auto b = divides(f, h, EliminationPath::kGf2);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_EQ(a->quotient, b->quotient);
  }
}

TEST(KernelTest, Examples) {
  auto f = poly("1+u1+u2", 2);
  std::vector<ExpVec> tri{{0, 0}, {1, 0}, {0, 1}};
  auto k = kernel_on_support(f, tri);
  ASSERT_EQ(k.dimension(), 1u);
  EXPECT_EQ(k.basis_rows[0], (FpVector{1, 1, 1}));

  std::vector<ExpVec> pair{{0, 0}, {5, 0}};
  EXPECT_EQ(kernel_on_support(f, pair).dimension(), 0u);

  std::vector<ExpVec> dilate{{0, 0}, {4, 0}, {0, 4}};
  auto k4 = kernel_on_support(f, dilate);
  ASSERT_EQ(k4.dimension(), 1u);
  EXPECT_EQ(k4.basis_rows[0], (FpVector{1, 1, 1}));
}

TEST(KernelTest, MonomialGeneratorGivesEverything) {
  std::vector<ExpVec> sites{{0, 0}, {2, 1}};
  auto k = kernel_on_support(poly("3*u1", 5), sites);
  EXPECT_EQ(k.dimension(), 2u);
}

TEST(KernelTest, RejectsBadSites) {
  auto f = poly("1+u1+u2", 2);
  std::vector<ExpVec> none;
  EXPECT_THROW(kernel_on_support(f, none), DomainError);
  std::vector<ExpVec> dup{{0, 0}, {0, 0}};
  EXPECT_THROW(kernel_on_support(f, dup), DomainError);
  EXPECT_THROW(divides(LaurentPoly(2, 2), f), DomainError);
}

// Counts b in F_p^S whose polynomial has a divisor on the erosion box.
std::size_t brute_kernel_dimension(const LaurentPoly& f, const std::vector<ExpVec>& sites) {
  const auto search = erosion_box(bounding_box(sites), f.support_box());
  std::size_t count = 0;
  FpVector b(sites.size(), 0);
  do {
    auto h = from_row(f.modulus(), sites, b);
    if (h.is_zero() || (search && oracle::divisor_search(f, h, *search).has_value())) ++count;
  } while (oracle::next_vector(b, f.modulus()));
  std::size_t dim = 0;
  while (count > 1) {
    count /= f.modulus();
    ++dim;
  }
  return dim;
}

TEST(KernelTest, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(17);
  const std::vector<LaurentPoly> fs{poly("1+u1+u2", 2), poly("1+u1+u2+u1*u2", 2),
                                    poly("1+u1+u2", 3)};
  const auto cells = box2(0, 0, 2, 2).points();
  for (const auto& f : fs) {
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<ExpVec> sites;
      for (const auto& c : cells) {
        if (rng() % 3 == 0) sites.push_back(c);
      }
      if (sites.empty() || sites.size() > (f.modulus() == 2 ? 6u : 4u)) continue;
      auto k = kernel_on_support(f, sites);
      EXPECT_EQ(k.dimension(), brute_kernel_dimension(f, sites)) << to_string(f);
    }
  }
}

TEST(KernelTest, RowsAreMultiplesOfGenerator) {
  auto f = poly("1+u1+u2", 3);
  auto sites = box2(0, 0, 2, 2).points();
  auto k = kernel_on_support(f, sites);
  EXPECT_GT(k.dimension(), 0u);
  for (std::size_t i = 0; i < k.dimension(); ++i) {
    EXPECT_TRUE(divides(f, k.row_polynomial(i)).has_value());
  }
}

TEST(KernelTest, TranslationEquivariance) {
  std::mt19937_64 rng(23);
  auto f = poly("1+u1+u2+u1*u2", 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExpVec> sites;
    for (const auto& c : box2(0, 0, 3, 3).points()) {
      if (rng() % 2 == 0) sites.push_back(c);
    }
    if (sites.empty()) continue;
    ExpVec v{static_cast<std::int64_t>(rng() % 11) - 5, static_cast<std::int64_t>(rng() % 11) - 5};
    std::vector<ExpVec> moved;
    for (const auto& s : sites) moved.push_back(s + v);
    auto a = kernel_on_support(f, sites);
    auto b = kernel_on_support(f, moved);
    EXPECT_EQ(a.dimension(), b.dimension());
    EXPECT_EQ(a.basis_rows, b.basis_rows);
  }
}

TEST(KernelTest, MonotoneUnderEnlargement) {
  std::mt19937_64 rng(29);
  auto f = poly("1+u1+u2", 2);
  auto cells = box2(0, 0, 3, 3).points();
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<ExpVec> small, large;
    for (const auto& c : cells) {
      auto r = rng() % 4;
      if (r == 0) small.push_back(c);
      if (r <= 1) large.push_back(c);
    }
    if (small.empty()) continue;
    auto ks = kernel_on_support(f, small);
    auto kl = kernel_on_support(f, large);
    EXPECT_GE(kl.dimension(), ks.dimension());
    for (std::size_t i = 0; i < ks.dimension(); ++i) {
      FpVector extended(large.size(), 0);
      for (std::size_t j = 0; j < small.size(); ++j) {
        auto pos = std::find(large.begin(), large.end(), small[j]) - large.begin();
        extended[pos] = ks.basis_rows[i][j];
      }
      EXPECT_TRUE(divides(f, from_row(2, large, extended)).has_value());
    }
  }
}

TEST(KernelTest, FrobeniusLift) {
  const std::vector<ExpVec> tri{{0, 0}, {1, 0}, {0, 1}};
  for (std::uint32_t p : {2u, 3u}) {
    auto f = poly("1+u1+u2", p);
    for (std::int64_t n = 1; n <= 6; ++n) {
      std::vector<ExpVec> sites, lifted;
      for (const auto& s : tri) {
        sites.push_back(s.scaled(n));
        lifted.push_back(s.scaled(n * p));
      }
      auto k = kernel_on_support(f, sites);
      for (const auto& b : k.basis_rows) {
        FpVector powered;
        for (auto c : b) powered.push_back(fp::pow(c, p, p));
        EXPECT_TRUE(divides(f, from_row(p, lifted, powered)).has_value()) << "n=" << n;
      }
      if (k.dimension() > 0) EXPECT_GT(kernel_on_support(f, lifted).dimension(), 0u);
    }
  }
}

}  // namespace
}  // namespace mixlab
