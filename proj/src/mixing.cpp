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

#include "mixlab/mixing.hpp"

#include <algorithm>
#include <stdexcept>

#include "mixlab/errors.hpp"
#include "mixlab/ideal.hpp"
#include "mixlab/parallel.hpp"

namespace mixlab {

Shape::Shape(std::vector<ExpVec> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("a shape needs at least two points");
  for (const auto& s : points_) {
    if (s.dimension() != points_.front().dimension()) {
      throw DomainError("shape points of different dimension");
    }
  }
  auto sorted = points_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DomainError("shape points are not distinct");
  }
}

std::vector<ExpVec> Shape::dilate(std::int64_t n) const {
  std::vector<ExpVec> out;
  out.reserve(points_.size());
  for (const auto& s : points_) out.push_back(s.scaled(n));
  return out;
}

DilationRange::DilationRange(std::int64_t first_, std::int64_t last_) : first(first_), last(last_) {
  if (first < 1) throw DomainError("dilation factors must be positive");
  if (last < first) throw DomainError("empty dilation range");
}

namespace {

void require_shape_fits(const SystemSpec& sys, const Shape& shape) {
  if (shape.dimension() != sys.d) throw DomainError("shape dimension differs from system");
}

void require_positive(std::int64_t n) {
  if (n < 1) throw DomainError("dilation factor must be positive");
}

}  // namespace

std::size_t witness_dimension(const SystemSpec& sys, const Shape& shape, std::int64_t n) {
  require_shape_fits(sys, shape);
  require_positive(n);
  return kernel_on_support(sys.f, shape.dilate(n)).dimension();
}

std::optional<ShapeWitness> shape_witness(const SystemSpec& sys, const Shape& shape, std::int64_t n) {
  require_shape_fits(sys, shape);
  require_positive(n);
  const auto kernel = kernel_on_support(sys.f, shape.dilate(n));
  if (kernel.dimension() == 0) return std::nullopt;

  std::vector<FpScalar> coeffs;
  for (auto c : kernel.basis_rows.front()) coeffs.emplace_back(c, sys.p);
  const auto target = shape_poly(shape.points(), coeffs, n);
  auto quotient = divides(sys.f, target);
  if (!quotient) throw std::logic_error("shape_witness: kernel vector is not a multiple of f");
  return ShapeWitness{n, std::move(coeffs), std::move(quotient->quotient)};
}

std::vector<CylinderSpec> singleton_cylinders(std::size_t d, std::span<const std::uint32_t> values) {
  std::vector<CylinderSpec> out;
  for (auto v : values) out.push_back(CylinderSpec(d).assign(ExpVec(d), v));
  return out;
}

std::vector<DefectRecord> dilation_scan(const SystemSpec& sys, const Shape& shape,
                                        std::span<const CylinderSpec> cylinders,
                                        DilationRange range, unsigned threads) {
  require_shape_fits(sys, shape);
  if (cylinders.size() != shape.size()) {
    throw DomainError("dilation_scan: one cylinder per shape point required");
  }
  Rational product = 1;
  for (const auto& c : cylinders) product *= cylinder_measure(sys, c).value;

  return parallel_map(range.size(), threads, [&](std::size_t i) {
    const auto n = range.at(i);
    const auto positions = shape.dilate(n);
    DefectRecord rec{n, joint_measure(sys, cylinders, positions).value, product, 0,
                     kernel_on_support(sys.f, positions).dimension()};
    rec.defect = rec.joint - rec.product;
    return rec;
  });
}

std::vector<WitnessCount> witness_scan(const SystemSpec& sys, const Shape& shape,
                                       DilationRange range, unsigned threads) {
  require_shape_fits(sys, shape);
  return parallel_map(range.size(), threads, [&](std::size_t i) {
    const auto n = range.at(i);
    return WitnessCount{n, witness_dimension(sys, shape, n)};
  });
}

}  // namespace mixlab
