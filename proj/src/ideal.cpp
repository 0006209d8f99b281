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

#include "mixlab/ideal.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "mixlab/errors.hpp"

namespace mixlab {
namespace {

void require_nonzero_divisor(const LaurentPoly& f) {
  if (f.is_zero()) throw DomainError("the zero polynomial generates no usable ideal");
}

// Exact quotient by a unit c * u^e.
LaurentPoly divide_by_monomial(const LaurentPoly& h, const LaurentPoly& unit) {
  const auto& [e, c] = *unit.terms().begin();
  return h.shifted(-e).scaled(fp::inv(c, h.modulus()));
}

std::map<ExpVec, std::size_t> index_of(std::span<const ExpVec> points) {
  std::map<ExpVec, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(points[i], i);
  return index;
}

}  // namespace

std::vector<ExpVec> erosion_support(const IntBox& target_box, const IntBox& f_box) {
  if (target_box.dimension() != f_box.dimension()) {
    throw DomainError("boxes of different dimension");
  }
  const std::size_t d = target_box.dimension();
  std::vector<std::int64_t> lo(d), hi(d);
  for (std::size_t i = 0; i < d; ++i) {
    lo[i] = target_box.lo[i] - f_box.lo[i];
    hi[i] = target_box.hi[i] - f_box.hi[i];
    if (lo[i] > hi[i]) return {};
  }
  return IntBox(ExpVec(std::move(lo)), ExpVec(std::move(hi))).points();
}

std::optional<MembershipWitness> divides(const LaurentPoly& f, const LaurentPoly& h,
                                         EliminationPath path) {
  require_nonzero_divisor(f);
  if (f.modulus() != h.modulus() || f.dimension() != h.dimension()) {
    throw DomainError("divides: operands over different rings");
  }
  const auto p = f.modulus();
  if (h.is_zero()) return MembershipWitness{LaurentPoly(p, f.dimension())};
  if (f.is_monomial()) return MembershipWitness{divide_by_monomial(h, f)};

  const auto unknowns = erosion_support(h.support_box(), f.support_box());
  if (unknowns.empty()) return std::nullopt;

  // One equation per monomial of the product support.
  std::map<ExpVec, LinearSystem::Row> equations;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    for (const auto& [s, c] : f.terms()) equations[unknowns[j] + s].emplace_back(j, c);
  }
  for (const auto& [e, c] : h.terms()) {
    if (!equations.contains(e)) return std::nullopt;
  }
  LinearSystem system(p, unknowns.size());
  for (auto& [e, row] : equations) system.add_equation(std::move(row), h.coefficient(e));

  auto solution = particular_solution(system, path);
  if (!solution) return std::nullopt;
  std::vector<std::pair<ExpVec, std::int64_t>> terms;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    if ((*solution)[j]) terms.emplace_back(unknowns[j], (*solution)[j]);
  }
  auto g = LaurentPoly::from_terms(p, f.dimension(), terms);
  if (poly_mul(f, g) != h) throw std::logic_error("divides: solved quotient fails to multiply back");
  return MembershipWitness{std::move(g)};
}

LaurentPoly KernelBasis::row_polynomial(std::size_t i) const {
  const auto& row = basis_rows.at(i);
  std::vector<std::pair<ExpVec, std::int64_t>> terms;
  for (std::size_t s = 0; s < sites.size(); ++s) terms.emplace_back(sites[s], row[s]);
  return LaurentPoly::from_terms(modulus, sites.at(0).dimension(), terms);
}

KernelBasis kernel_on_support(const LaurentPoly& f, std::span<const ExpVec> sites,
                              EliminationPath path) {
  require_nonzero_divisor(f);
  if (sites.empty()) throw DomainError("kernel_on_support needs at least one site");
  const auto p = f.modulus();
  const auto site_index = index_of(sites);
  if (site_index.size() != sites.size()) throw DomainError("kernel_on_support: duplicate sites");
  for (const auto& s : sites) {
    if (s.dimension() != f.dimension()) throw DomainError("site dimension differs from f");
  }

  KernelBasis out{{sites.begin(), sites.end()}, {}, p};
  if (f.is_monomial()) {
    for (std::size_t i = 0; i < sites.size(); ++i) {
      FpVector row(sites.size(), 0);
      row[i] = 1;
      out.basis_rows.push_back(std::move(row));
    }
    return out;
  }

  const auto unknowns = erosion_support(bounding_box(sites), f.support_box());
  if (unknowns.empty()) return out;

  std::map<ExpVec, LinearSystem::Row> off_site;
  for (std::size_t j = 0; j < unknowns.size(); ++j) {
    for (const auto& [s, c] : f.terms()) {
      auto e = unknowns[j] + s;
      if (!site_index.contains(e)) off_site[e].emplace_back(j, c);
    }
  }
  LinearSystem system(p, unknowns.size());
  for (auto& [e, row] : off_site) system.add_equation(std::move(row));
  const auto multipliers = null_space(system, path);
  if (multipliers.empty()) return out;

  FpMatrix images(multipliers.size(), sites.size(), p);
  for (std::size_t r = 0; r < multipliers.size(); ++r) {
    for (std::size_t j = 0; j < unknowns.size(); ++j) {
      const auto g = multipliers[r][j];
      if (g == 0) continue;
      for (const auto& [s, c] : f.terms()) {
        auto it = site_index.find(unknowns[j] + s);
        if (it == site_index.end()) continue;
        images.set(r, it->second, images.at(r, it->second) + fp::mul(g, c, p));
      }
    }
  }
  auto reduced = row_reduce(images, path);
  for (std::size_t r = 0; r < reduced.rank; ++r) {
    auto row = reduced.rref.row(r);
    out.basis_rows.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace mixlab
