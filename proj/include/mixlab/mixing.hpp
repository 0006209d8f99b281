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

#include "mixlab/exp_vec.hpp"
#include "mixlab/haar.hpp"
#include "mixlab/laurent_poly.hpp"
#include "mixlab/prime_field.hpp"
#include "mixlab/rational.hpp"

namespace mixlab {

/// k+1 pairwise distinct points s_0, ..., s_k of Z^d, k >= 1.
class Shape {
 public:
  explicit Shape(std::vector<ExpVec> points);

  const std::vector<ExpVec>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  std::size_t dimension() const { return points_.front().dimension(); }
  /// The n-th dilate {n s_j}, in shape order.
  std::vector<ExpVec> dilate(std::int64_t n) const;

 private:
  std::vector<ExpVec> points_;
};

/// Inclusive range of dilation factors, first >= 1.
struct DilationRange {
  std::int64_t first;
  std::int64_t last;

  DilationRange(std::int64_t first, std::int64_t last);
  std::size_t size() const { return static_cast<std::size_t>(last - first + 1); }
  std::int64_t at(std::size_t i) const { return first + static_cast<std::int64_t>(i); }
};

struct DefectRecord {
  std::int64_t n;
  Rational joint;
  Rational product;
  Rational defect;  // joint - product
  std::size_t witness_dim;

  friend bool operator==(const DefectRecord&, const DefectRecord&) = default;
};

struct ShapeWitness {
  std::int64_t n;
  std::vector<FpScalar> coeffs;
  /// shape_poly(shape, coeffs, n) == f * quotient.
  LaurentPoly quotient;
};

struct WitnessCount {
  std::int64_t n;
  std::size_t witness_dim;

  friend bool operator==(const WitnessCount&, const WitnessCount&) = default;
};

/// Dimension of the space of coefficient vectors c with
/// sum_j c_j u^(n s_j) in <f>.
std::size_t witness_dimension(const SystemSpec& sys, const Shape& shape, std::int64_t n);

/// First reduced-echelon kernel vector at the n-th dilate together with its
/// quotient by f, or nullopt when the kernel is trivial.
std::optional<ShapeWitness> shape_witness(const SystemSpec& sys, const Shape& shape, std::int64_t n);

/// For each n in the range: the joint measure of the cylinders read at the
/// dilated shape positions, the product of their individual measures, the
/// exact defect and the witness dimension. Records come back in n order
/// regardless of `threads`.
std::vector<DefectRecord> dilation_scan(const SystemSpec& sys, const Shape& shape,
                                        std::span<const CylinderSpec> cylinders,
                                        DilationRange range, unsigned threads = 1);

/// Singleton cylinders {0 -> values[j]}, one per shape point.
std::vector<CylinderSpec> singleton_cylinders(std::size_t d, std::span<const std::uint32_t> values);

std::vector<WitnessCount> witness_scan(const SystemSpec& sys, const Shape& shape,
                                       DilationRange range, unsigned threads = 1);

}  // namespace mixlab
