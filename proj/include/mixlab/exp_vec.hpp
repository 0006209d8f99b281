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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mixlab {

/// Largest admissible magnitude of a single exponent / lattice coordinate.
inline constexpr std::int64_t kMaxExponent = std::int64_t{1} << 20;

/// A point of Z^d: either a monomial exponent u^e or a lattice site.
///
/// Every coordinate is checked against kMaxExponent on construction and after
/// each arithmetic operation, so products of coordinates with primes below
/// 2^16 never leave int64 range.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(std::size_t dimension) : coords_(dimension, 0) {}
  ExpVec(std::initializer_list<std::int64_t> coords);
  explicit ExpVec(std::vector<std::int64_t> coords);

  std::size_t dimension() const { return coords_.size(); }
  std::int64_t operator[](std::size_t i) const { return coords_[i]; }
  std::span<const std::int64_t> coords() const { return coords_; }

  bool is_zero() const;

  /// Componentwise n * e.
  ExpVec scaled(std::int64_t n) const;

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  friend ExpVec operator-(const ExpVec& a, const ExpVec& b);
  friend ExpVec operator-(const ExpVec& a);

  // Lexicographic.
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;
  friend bool operator==(const ExpVec&, const ExpVec&) = default;

 private:
  std::vector<std::int64_t> coords_;
};

/// "(a,b,...)"
std::string to_string(const ExpVec& e);

/// Axis-aligned box of lattice points, both corners inclusive.
struct IntBox {
  ExpVec lo;
  ExpVec hi;

  IntBox() = default;
  IntBox(ExpVec lo_corner, ExpVec hi_corner);

  std::size_t dimension() const { return lo.dimension(); }
  bool contains(const ExpVec& v) const;
  bool contains(const IntBox& other) const;

  /// Number of lattice points; saturates at UINT64_MAX.
  std::uint64_t point_count() const;

  /// All lattice points in lexicographic order.
  std::vector<ExpVec> points() const;

  /// The box grown by `margin` in every direction.
  IntBox expanded(std::int64_t margin) const;

  friend bool operator==(const IntBox&, const IntBox&) = default;
};

/// Componentwise bounding box of a nonempty point set.
IntBox bounding_box(std::span<const ExpVec> points);

std::string to_string(const IntBox& box);

}  // namespace mixlab
