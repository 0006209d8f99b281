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

#include "mixlab/haar.hpp"

#include "mixlab/errors.hpp"
#include "mixlab/ideal.hpp"

namespace mixlab {

SystemSpec::SystemSpec(std::uint32_t p_, std::size_t d_, LaurentPoly f_)
    : p(p_), d(d_), f(std::move(f_)) {
  require_valid_modulus(p);
  if (f.modulus() != p || f.dimension() != d) {
    throw DomainError("system polynomial does not match (p, d)");
  }
  if (f.is_zero()) throw DomainError("system polynomial must be nonzero");
}

CylinderSpec::CylinderSpec(std::size_t d, std::span<const ExpVec> sites,
                           std::span<const std::uint32_t> values)
    : d_(d) {
  if (sites.size() != values.size()) throw DomainError("cylinder sites and values differ in length");
  for (std::size_t i = 0; i < sites.size(); ++i) assign(sites[i], values[i]);
}

CylinderSpec& CylinderSpec::assign(const ExpVec& site, std::uint32_t value) {
  if (site.dimension() != d_) throw DomainError("cylinder site has wrong dimension");
  if (!assignments_.emplace(site, value).second) {
    throw DomainError("cylinder site " + to_string(site) + " assigned twice");
  }
  return *this;
}

std::vector<ExpVec> CylinderSpec::sites() const {
  std::vector<ExpVec> out;
  for (const auto& [s, v] : assignments_) out.push_back(s);
  return out;
}

std::vector<std::uint32_t> CylinderSpec::values() const {
  std::vector<std::uint32_t> out;
  for (const auto& [s, v] : assignments_) out.push_back(v);
  return out;
}

CylinderSpec translate_cylinder(const CylinderSpec& c, const ExpVec& v) {
  if (v.dimension() != c.dimension()) throw DomainError("translation vector has wrong dimension");
  CylinderSpec out(c.dimension());
  for (const auto& [s, value] : c.assignments()) out.assign(s - v, value);
  return out;
}

std::optional<CylinderSpec> merge_cylinders(std::span<const CylinderSpec> cylinders) {
  if (cylinders.empty()) throw DomainError("merge_cylinders needs at least one cylinder");
  CylinderSpec::Assignments merged;
  const auto d = cylinders[0].dimension();
  for (const auto& c : cylinders) {
    if (c.dimension() != d) throw DomainError("cylinders of different dimension");
    for (const auto& [s, value] : c.assignments()) {
      auto [it, inserted] = merged.emplace(s, value);
      if (!inserted && it->second != value) return std::nullopt;
    }
  }
  CylinderSpec out(d);
  for (const auto& [s, value] : merged) out.assign(s, value);
  return out;
}

MeasureResult cylinder_measure(const SystemSpec& sys, const CylinderSpec& c) {
  if (c.dimension() != sys.d) throw DomainError("cylinder dimension differs from system");
  for (const auto& [s, value] : c.assignments()) {
    if (value >= sys.p) throw DomainError("cylinder value outside F_p");
  }
  if (c.empty()) return MeasureResult::inverse_power(sys.p, 0);

  const auto sites = c.sites();
  const auto values = c.values();
  const auto kernel = kernel_on_support(sys.f, sites);
  for (const auto& row : kernel.basis_rows) {
    std::uint32_t pairing = 0;
    for (std::size_t i = 0; i < sites.size(); ++i) {
      pairing = fp::add(pairing, fp::mul(row[i], values[i], sys.p), sys.p);
    }
    if (pairing != 0) return MeasureResult::zero();
  }
  return MeasureResult::inverse_power(sys.p, sites.size() - kernel.dimension());
}

MeasureResult joint_measure(const SystemSpec& sys, std::span<const CylinderSpec> cylinders,
                            std::span<const ExpVec> translates) {
  if (cylinders.size() != translates.size()) {
    throw DomainError("joint_measure: cylinder and translate lists differ in length");
  }
  if (cylinders.empty()) throw DomainError("joint_measure needs at least one cylinder");
  std::vector<CylinderSpec> moved;
  moved.reserve(cylinders.size());
  for (std::size_t j = 0; j < cylinders.size(); ++j) {
    moved.push_back(translate_cylinder(cylinders[j], -translates[j]));
  }
  auto merged = merge_cylinders(moved);
  if (!merged) return MeasureResult::zero();
  return cylinder_measure(sys, *merged);
}

}  // namespace mixlab
