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
#include <optional>
#include <span>
#include <vector>

#include "mixlab/exp_vec.hpp"
#include "mixlab/laurent_poly.hpp"
#include "mixlab/rational.hpp"

namespace mixlab {

/// The closed shift-invariant subgroup X_f of F_p^(Z^d) cut out by
/// sum_s f_s x_(s+v) = 0 for every v; dually, the module F_p[u^±]/<f>.
struct SystemSpec {
  std::uint32_t p;
  std::size_t d;
  LaurentPoly f;

  /// Validates that f is nonzero and lives over F_p in dimension d.
  SystemSpec(std::uint32_t p, std::size_t d, LaurentPoly f);
  explicit SystemSpec(LaurentPoly f) : SystemSpec(f.modulus(), f.dimension(), f) {}
};

/// The set of configurations taking prescribed values on finitely many
/// sites. No assignments means the whole space.
class CylinderSpec {
 public:
  using Assignments = std::map<ExpVec, std::uint32_t>;

  explicit CylinderSpec(std::size_t d) : d_(d) {}
  CylinderSpec(std::size_t d, std::span<const ExpVec> sites, std::span<const std::uint32_t> values);

  /// Throws DomainError if the site is already assigned or has the wrong dimension.
  CylinderSpec& assign(const ExpVec& site, std::uint32_t value);

  std::size_t dimension() const { return d_; }
  const Assignments& assignments() const { return assignments_; }
  bool empty() const { return assignments_.empty(); }
  std::size_t size() const { return assignments_.size(); }
  std::vector<ExpVec> sites() const;
  std::vector<std::uint32_t> values() const;

  friend bool operator==(const CylinderSpec&, const CylinderSpec&) = default;

 private:
  std::size_t d_;
  Assignments assignments_;
};

struct MeasureResult {
  Rational value;
  /// m with value == p^(-m); nullopt when the measure is zero.
  std::optional<std::size_t> log_exponent;

  static MeasureResult zero() { return {Rational(0), std::nullopt}; }
  static MeasureResult inverse_power(std::uint32_t p, std::size_t m) {
    return {inverse_prime_power(p, m), m};
  }
  bool is_zero() const { return !log_exponent.has_value(); }

  friend bool operator==(const MeasureResult&, const MeasureResult&) = default;
};

/// The image of a cylinder under the shift by v, where (σ^v x)_s = x_(s+v):
/// every site s moves to s - v.
CylinderSpec translate_cylinder(const CylinderSpec& c, const ExpVec& v);

/// Intersection of cylinders; nullopt when two of them disagree on a site.
std::optional<CylinderSpec> merge_cylinders(std::span<const CylinderSpec> cylinders);

/// Exact Haar measure. The projection of X_f onto the site set S is the
/// annihilator of K = {b on S : sum b_s u^s in <f>}, so the cylinder has
/// measure p^(dim K - |S|) when its values are orthogonal to K, else 0.
MeasureResult cylinder_measure(const SystemSpec& sys, const CylinderSpec& c);

/// μ(σ^(-v_0) A_0 ∩ ... ∩ σ^(-v_k) A_k), i.e. cylinder j is read off at its
/// sites displaced by +v_j. An inconsistent intersection has measure zero.
MeasureResult joint_measure(const SystemSpec& sys, std::span<const CylinderSpec> cylinders,
                            std::span<const ExpVec> translates);

}  // namespace mixlab
