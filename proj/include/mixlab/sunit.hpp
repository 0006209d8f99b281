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
#include <optional>
#include <span>
#include <vector>

#include "mixlab/rational.hpp"

namespace mixlab {

/// q = sign * prod generators[i]^exponents[i].
struct GroupElement {
  std::vector<std::int64_t> exponents;
  int sign = 1;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Finitely generated subgroup of Q*, optionally extended by the unit -1.
class SUnitGroup {
 public:
  SUnitGroup(std::vector<Rational> generators, bool allow_sign);

  const std::vector<Rational>& generators() const { return generators_; }
  bool allow_sign() const { return allow_sign_; }
  /// Primes dividing some generator's numerator or denominator, ascending.
  const std::vector<std::uint64_t>& prime_support() const { return primes_; }
  /// valuation_matrix()[i][j] = exponent of prime_support()[i] in generator j.
  const std::vector<std::vector<std::int64_t>>& valuation_matrix() const { return valuations_; }
  /// Rank of the valuation matrix; equals the number of generators exactly
  /// when they are multiplicatively independent modulo ±1.
  std::size_t rank() const { return pivots_.size(); }

  /// Exponent vector of q over prime_support(), or nullopt when another
  /// prime divides q.
  std::optional<std::vector<std::int64_t>> prime_valuations(const Rational& q) const;

 private:
  friend struct MembershipSolver;
  friend std::optional<GroupElement> membership(const SUnitGroup&, const Rational&,
                                                std::optional<std::int64_t>);

  std::vector<Rational> generators_;
  bool allow_sign_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::vector<std::int64_t>> valuations_;
  // T * V = R with R in reduced row echelon form over Q.
  std::vector<std::vector<Rational>> transform_;
  std::vector<std::vector<Rational>> reduced_;
  std::vector<std::size_t> pivots_;
};

/// Search limit on |exponent| for dependent generators without a height.
inline constexpr std::int64_t kMembershipSearchLimit = 64;

/// Writes q as an element of the group. A sign of -1 is only produced when
/// the group allows signs. With independent generators the exponent vector
/// is unique; otherwise the representation of smallest max-norm is chosen,
/// ties broken lexicographically. `height` restricts every |e_i| <= height.
std::optional<GroupElement> membership(const SUnitGroup& g, const Rational& q,
                                       std::optional<std::int64_t> height = std::nullopt);

Rational reconstruct(const SUnitGroup& g, const GroupElement& e);

/// sum_j a_j x_j = 1 with k >= 2 nonzero rational coefficients.
class SUnitEquation {
 public:
  explicit SUnitEquation(std::vector<Rational> coeffs);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_solution(std::span<const Rational> values) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Minimal nonempty proper index subsets (0-based, ascending) whose
/// sub-sum vanishes; empty for a non-degenerate solution.
struct Degeneracy {
  std::vector<std::vector<std::size_t>> vanishing_subsets;

  bool degenerate() const { return !vanishing_subsets.empty(); }
  friend bool operator==(const Degeneracy&, const Degeneracy&) = default;
};

struct SUnitSolution {
  std::vector<Rational> values;
  std::vector<GroupElement> exponents;
  Degeneracy degeneracy;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 24;
inline constexpr std::size_t kMaxDegeneracyTerms = 20;

/// Throws DomainError when k > 20 or the values do not solve the equation.
Degeneracy classify_degeneracy(const SUnitEquation& eq, std::span<const Rational> values);

/// Every solution with all exponents in [-height, height], deduplicated by
/// value and sorted lexicographically. The first k-1 unknowns range over the
/// group elements in the box; the last is solved for and tested with
/// membership. Throws WorkBoundError when (box values)^(k-1) exceeds
/// `max_work`.
std::vector<SUnitSolution> enumerate_solutions(const SUnitEquation& eq, const SUnitGroup& g,
                                               std::int64_t height,
                                               std::uint64_t max_work = kDefaultEnumerationBudget,
                                               unsigned threads = 1);

/// Number of solutions within the height box having `subset` (0-based) among
/// their minimal vanishing sub-sums.
std::size_t degenerate_family_count(const SUnitEquation& eq, const SUnitGroup& g,
                                    std::span<const std::size_t> subset, std::int64_t height,
                                    std::uint64_t max_work = kDefaultEnumerationBudget,
                                    unsigned threads = 1);

}  // namespace mixlab
