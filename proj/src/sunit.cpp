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

#include "mixlab/sunit.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mixlab/errors.hpp"
#include "mixlab/parallel.hpp"

namespace mixlab {
namespace {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

constexpr std::uint64_t kTrialDivisionLimit = std::uint64_t{1} << 20;

void collect_prime_factors(BigInt n, std::set<std::uint64_t>& out) {
  if (n < 0) n = -n;
  for (std::uint64_t q = 2; q <= kTrialDivisionLimit && BigInt(q) * q <= n; ++q) {
    if (n % q == 0) {
      out.insert(q);
      while (n % q == 0) n /= q;
    }
  }
  if (n > 1) {
    if (n >= BigInt(kTrialDivisionLimit) * kTrialDivisionLimit) {
      throw DomainError("generator has a prime factor beyond the trial division range");
    }
    out.insert(n.convert_to<std::uint64_t>());
  }
}

std::int64_t strip(BigInt& n, std::uint64_t prime) {
  std::int64_t count = 0;
  while (n % prime == 0) {
    n /= prime;
    ++count;
  }
  return count;
}

int sign_of(const Rational& q) { return q < 0 ? -1 : 1; }

// Sign of prod generators[i]^e[i].
int product_sign(const SUnitGroup& g, std::span<const std::int64_t> e) {
  int s = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (g.generators()[i] < 0 && (e[i] % 2 != 0)) s = -s;
  }
  return s;
}

}  // namespace

SUnitGroup::SUnitGroup(std::vector<Rational> generators, bool allow_sign)
    : generators_(std::move(generators)), allow_sign_(allow_sign) {
  std::set<std::uint64_t> primes;
  for (const auto& gen : generators_) {
    if (gen == 0) throw DomainError("group generators must be nonzero");
    collect_prime_factors(numerator(gen), primes);
    collect_prime_factors(denominator(gen), primes);
  }
  primes_.assign(primes.begin(), primes.end());

  const std::size_t rows = primes_.size();
  const std::size_t cols = generators_.size();
  valuations_.assign(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) {
    BigInt num = abs(numerator(generators_[j]));
    BigInt den = denominator(generators_[j]);
    for (std::size_t i = 0; i < rows; ++i) {
      valuations_[i][j] = strip(num, primes_[i]) - strip(den, primes_[i]);
    }
  }

  // Gauss-Jordan over Q on V, mirroring every row operation on T = I.
  reduced_.assign(rows, std::vector<Rational>(cols));
  transform_.assign(rows, std::vector<Rational>(rows));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) reduced_[i][j] = valuations_[i][j];
    transform_[i][i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t r = rank;
    while (r < rows && reduced_[r][c] == 0) ++r;
    if (r == rows) continue;
    std::swap(reduced_[r], reduced_[rank]);
    std::swap(transform_[r], transform_[rank]);
    const Rational lead = reduced_[rank][c];
    for (auto& x : reduced_[rank]) x /= lead;
    for (auto& x : transform_[rank]) x /= lead;
    for (std::size_t o = 0; o < rows; ++o) {
      if (o == rank || reduced_[o][c] == 0) continue;
      const Rational factor = reduced_[o][c];
      for (std::size_t k = 0; k < cols; ++k) reduced_[o][k] -= factor * reduced_[rank][k];
      for (std::size_t k = 0; k < rows; ++k) transform_[o][k] -= factor * transform_[rank][k];
    }
    pivots_.push_back(c);
    ++rank;
  }
}

std::optional<std::vector<std::int64_t>> SUnitGroup::prime_valuations(const Rational& q) const {
  if (q == 0) throw DomainError("zero is not in any multiplicative group");
  BigInt num = abs(numerator(q));
  BigInt den = denominator(q);
  std::vector<std::int64_t> out(primes_.size());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    out[i] = strip(num, primes_[i]) - strip(den, primes_[i]);
  }
  if (num != 1 || den != 1) return std::nullopt;
  return out;
}

struct MembershipSolver {
  const SUnitGroup& g;
  std::vector<Rational> target;  // T * valuations(q)
  std::vector<std::size_t> free_columns;
  int wanted_sign;

  // Completes an assignment of the free exponents; nullopt if a pivot
  // exponent is not an integer.
  std::optional<std::vector<std::int64_t>> complete(std::span<const std::int64_t> free_values) const {
    std::vector<std::int64_t> e(g.generators_.size(), 0);
    for (std::size_t f = 0; f < free_columns.size(); ++f) e[free_columns[f]] = free_values[f];
    for (std::size_t r = 0; r < g.pivots_.size(); ++r) {
      Rational v = target[r];
      for (std::size_t f = 0; f < free_columns.size(); ++f) {
        v -= g.reduced_[r][free_columns[f]] * free_values[f];
      }
      if (denominator(v) != 1) return std::nullopt;
      const BigInt n = numerator(v);
      if (abs(n) > BigInt(kMaxExponentMagnitude)) return std::nullopt;
      e[g.pivots_[r]] = n.convert_to<std::int64_t>();
    }
    return e;
  }

  std::optional<GroupElement> finish(std::vector<std::int64_t> e) const {
    const int s = product_sign(g, e);
    if (s == wanted_sign) return GroupElement{std::move(e), 1};
    if (g.allow_sign_) return GroupElement{std::move(e), -1};
    return std::nullopt;
  }

  static constexpr std::int64_t kMaxExponentMagnitude = std::int64_t{1} << 40;
};

std::optional<GroupElement> membership(const SUnitGroup& g, const Rational& q,
                                       std::optional<std::int64_t> height) {
  if (height && *height < 0) throw DomainError("height must be non-negative");
  auto w = g.prime_valuations(q);
  if (!w) return std::nullopt;

  const std::size_t rows = g.prime_support().size();
  MembershipSolver solver{g, {}, {}, sign_of(q)};
  solver.target.assign(rows, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t k = 0; k < rows; ++k) solver.target[r] += g.transform_[r][k] * (*w)[k];
  }
  for (std::size_t r = g.rank(); r < rows; ++r) {
    if (solver.target[r] != 0) return std::nullopt;
  }
  for (std::size_t c = 0; c < g.generators().size(); ++c) {
    if (std::find(g.pivots_.begin(), g.pivots_.end(), c) == g.pivots_.end()) {
      solver.free_columns.push_back(c);
    }
  }
  auto within = [&](const std::vector<std::int64_t>& e, std::int64_t bound) {
    return std::all_of(e.begin(), e.end(), [&](auto x) { return x >= -bound && x <= bound; });
  };

  if (solver.free_columns.empty()) {
    auto e = solver.complete({});
    if (!e) return std::nullopt;
    if (height && !within(*e, *height)) return std::nullopt;
    return solver.finish(std::move(*e));
  }

  // Dependent generators: smallest max-norm first, then lexicographic.
  const std::int64_t limit = height.value_or(kMembershipSearchLimit);
  const std::size_t nfree = solver.free_columns.size();
  for (std::int64_t bound = 0; bound <= limit; ++bound) {
    std::optional<GroupElement> best;
    std::vector<std::int64_t> free(nfree, -bound);
    while (true) {
      if (auto e = solver.complete(free); e && within(*e, bound)) {
        if (auto el = solver.finish(std::move(*e));
            el && (!best || el->exponents < best->exponents)) {
          best = std::move(el);
        }
      }
      std::size_t i = nfree;
      while (i > 0 && free[i - 1] == bound) free[--i] = -bound;
      if (i == 0) break;
      ++free[i - 1];
    }
    if (best) return best;
  }
  return std::nullopt;
}

Rational reconstruct(const SUnitGroup& g, const GroupElement& e) {
  if (e.exponents.size() != g.generators().size()) {
    throw DomainError("exponent vector length differs from generator count");
  }
  Rational out = e.sign;
  for (std::size_t i = 0; i < e.exponents.size(); ++i) out *= pow(g.generators()[i], e.exponents[i]);
  return out;
}

SUnitEquation::SUnitEquation(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("an S-unit equation needs at least two terms");
  for (const auto& a : coeffs_) {
    if (a == 0) throw DomainError("S-unit equation coefficients must be nonzero");
  }
}

bool SUnitEquation::is_solution(std::span<const Rational> values) const {
  if (values.size() != coeffs_.size()) return false;
  Rational sum = 0;
  for (std::size_t j = 0; j < values.size(); ++j) sum += coeffs_[j] * values[j];
  return sum == 1;
}

Degeneracy classify_degeneracy(const SUnitEquation& eq, std::span<const Rational> values) {
  const std::size_t k = eq.size();
  if (k > kMaxDegeneracyTerms) throw DomainError("degeneracy scan limited to 20 terms");
  if (!eq.is_solution(values)) throw DomainError("values do not solve the equation");

  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> vanishing;
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Rational sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1u) sum += eq.coeffs()[j] * values[j];
    }
    if (sum == 0) vanishing.push_back(mask);
  }
  Degeneracy out;
  for (auto mask : vanishing) {
    const bool minimal = std::none_of(vanishing.begin(), vanishing.end(), [&](auto other) {
      return other != mask && (other & mask) == other;
    });
    if (!minimal) continue;
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < k; ++j) {
      if (mask >> j & 1u) subset.push_back(j);
    }
    out.vanishing_subsets.push_back(std::move(subset));
  }
  std::sort(out.vanishing_subsets.begin(), out.vanishing_subsets.end());
  return out;
}

namespace {

// Every group value with exponents in the box, deduplicated and ascending.
std::vector<Rational> box_values(const SUnitGroup& g, std::int64_t height, std::uint64_t max_work) {
  const std::size_t m = g.generators().size();
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < m; ++i) {
    box *= static_cast<std::uint64_t>(2 * height + 1);
    if (box > max_work) throw WorkBoundError("exponent box exceeds the work bound");
  }
  std::set<Rational> values;
  std::vector<std::int64_t> e(m, -height);
  while (true) {
    const Rational v = reconstruct(g, GroupElement{e, 1});
    values.insert(v);
    if (g.allow_sign()) values.insert(-v);
    std::size_t i = m;
    while (i > 0 && e[i - 1] == height) e[--i] = -height;
    if (i == 0) break;
    ++e[i - 1];
  }
  return {values.begin(), values.end()};
}

}  // namespace

std::vector<SUnitSolution> enumerate_solutions(const SUnitEquation& eq, const SUnitGroup& g,
                                               std::int64_t height, std::uint64_t max_work,
                                               unsigned threads) {
  if (height < 0) throw DomainError("height must be non-negative");
  const auto candidates = box_values(g, height, max_work);
  const std::set<Rational> in_box(candidates.begin(), candidates.end());
  const std::size_t k = eq.size();
  const std::size_t free_terms = k - 1;

  std::uint64_t work = 1;
  for (std::size_t i = 0; i < free_terms; ++i) {
    if (candidates.empty()) break;
    if (work > max_work / candidates.size()) {
      throw WorkBoundError("S-unit enumeration exceeds the work bound of " +
                           std::to_string(max_work));
    }
    work *= candidates.size();
  }
  if (candidates.empty()) return {};

  const auto& a = eq.coeffs();
  std::map<Rational, GroupElement> canonical;
  for (const auto& v : candidates) {
    auto e = membership(g, v, height);
    if (!e) throw std::logic_error("box value failed its own membership test");
    canonical.emplace(v, std::move(*e));
  }

  // Partitioned on the first unknown; each chunk is lexicographically sorted
  // and chunks are concatenated in order.
  auto chunks = parallel_map(candidates.size(), threads, [&](std::size_t first) {
    std::vector<SUnitSolution> found;
    std::vector<std::size_t> idx(free_terms, 0);
    idx[0] = first;
    while (true) {
      Rational rest = 1;
      std::vector<Rational> values(k);
      for (std::size_t j = 0; j < free_terms; ++j) {
        values[j] = candidates[idx[j]];
        rest -= a[j] * values[j];
      }
      values[k - 1] = rest / a[k - 1];
      if (values[k - 1] != 0 && in_box.contains(values[k - 1])) {
        SUnitSolution sol;
        for (const auto& v : values) sol.exponents.push_back(canonical.at(v));
        sol.degeneracy = classify_degeneracy(eq, values);
        sol.values = std::move(values);
        found.push_back(std::move(sol));
      }
      std::size_t i = free_terms;
      while (i > 1 && idx[i - 1] + 1 == candidates.size()) idx[--i] = 0;
      if (i <= 1) break;
      ++idx[i - 1];
    }
    return found;
  });

  std::vector<SUnitSolution> out;
  for (auto& chunk : chunks) {
    for (auto& s : chunk) {
      if (!eq.is_solution(s.values)) throw std::logic_error("enumerated tuple fails the equation");
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::size_t degenerate_family_count(const SUnitEquation& eq, const SUnitGroup& g,
                                    std::span<const std::size_t> subset, std::int64_t height,
                                    std::uint64_t max_work, unsigned threads) {
  std::vector<std::size_t> wanted(subset.begin(), subset.end());
  std::sort(wanted.begin(), wanted.end());
  if (wanted.empty() || wanted.size() >= eq.size()) {
    throw DomainError("family subset must be a nonempty proper subset");
  }
  if (std::adjacent_find(wanted.begin(), wanted.end()) != wanted.end() || wanted.back() >= eq.size()) {
    throw DomainError("family subset has repeated or out-of-range indices");
  }
  const auto solutions = enumerate_solutions(eq, g, height, max_work, threads);
  return static_cast<std::size_t>(std::count_if(solutions.begin(), solutions.end(), [&](const auto& s) {
    const auto& v = s.degeneracy.vanishing_subsets;
    return std::find(v.begin(), v.end(), wanted) != v.end();
  }));
}

}  // namespace mixlab
