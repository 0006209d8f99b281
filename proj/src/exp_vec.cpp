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

#include "mixlab/exp_vec.hpp"

#include <algorithm>
#include <limits>

#include "mixlab/errors.hpp"

namespace mixlab {
namespace {

std::int64_t checked(std::int64_t v) {
  if (v > kMaxExponent || v < -kMaxExponent) {
    throw OverflowError("exponent " + std::to_string(v) + " exceeds bound 2^20");
  }
  return v;
}

void require_same_dimension(const ExpVec& a, const ExpVec& b) {
  if (a.dimension() != b.dimension()) {
    throw DomainError("exponent vectors of different dimension");
  }
}

}  // namespace

ExpVec::ExpVec(std::initializer_list<std::int64_t> coords) : coords_(coords) {
  for (auto c : coords_) checked(c);
}

ExpVec::ExpVec(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
  for (auto c : coords_) checked(c);
}

bool ExpVec::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

ExpVec ExpVec::scaled(std::int64_t n) const {
  if (n > kMaxExponent || n < -kMaxExponent) {
    if (is_zero()) return *this;
    throw OverflowError("scale factor " + std::to_string(n) + " exceeds bound 2^20");
  }
  ExpVec out(dimension());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = checked(coords_[i] * n);
  }
  return out;
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  require_same_dimension(a, b);
  ExpVec out(a.dimension());
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    out.coords_[i] = checked(a.coords_[i] + b.coords_[i]);
  }
  return out;
}

ExpVec operator-(const ExpVec& a, const ExpVec& b) {
  require_same_dimension(a, b);
  ExpVec out(a.dimension());
  for (std::size_t i = 0; i < a.coords_.size(); ++i) {
    out.coords_[i] = checked(a.coords_[i] - b.coords_[i]);
  }
  return out;
}

ExpVec operator-(const ExpVec& a) {
  ExpVec out(a.dimension());
  for (std::size_t i = 0; i < a.coords_.size(); ++i) out.coords_[i] = -a.coords_[i];
  return out;
}

std::string to_string(const ExpVec& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.dimension(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + ')';
}

IntBox::IntBox(ExpVec lo_corner, ExpVec hi_corner)
    : lo(std::move(lo_corner)), hi(std::move(hi_corner)) {
  if (lo.dimension() != hi.dimension()) {
    throw DomainError("box corners of different dimension");
  }
  for (std::size_t i = 0; i < lo.dimension(); ++i) {
    if (lo[i] > hi[i]) throw DomainError("box corner lo exceeds hi: " + to_string(*this));
  }
}

bool IntBox::contains(const ExpVec& v) const {
  if (v.dimension() != dimension()) return false;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (v[i] < lo[i] || v[i] > hi[i]) return false;
  }
  return true;
}

bool IntBox::contains(const IntBox& other) const {
  return contains(other.lo) && contains(other.hi);
}

std::uint64_t IntBox::point_count() const {
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < dimension(); ++i) {
    auto side = static_cast<std::uint64_t>(hi[i] - lo[i] + 1);
    if (count > std::numeric_limits<std::uint64_t>::max() / side) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= side;
  }
  return count;
}

std::vector<ExpVec> IntBox::points() const {
  std::vector<ExpVec> out;
  const std::size_t d = dimension();
  std::vector<std::int64_t> cur(lo.coords().begin(), lo.coords().end());
  if (d == 0) {
    out.emplace_back(cur);
    return out;
  }
  while (true) {
    out.emplace_back(cur);
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (cur[i] < hi[i]) {
        ++cur[i];
        break;
      }
      cur[i] = lo[i];
      if (i == 0) return out;
    }
  }
}

IntBox IntBox::expanded(std::int64_t margin) const {
  ExpVec m(std::vector<std::int64_t>(dimension(), margin));
  return IntBox(lo - m, hi + m);
}

IntBox bounding_box(std::span<const ExpVec> points) {
  if (points.empty()) throw DomainError("bounding box of an empty point set");
  std::vector<std::int64_t> lo(points[0].coords().begin(), points[0].coords().end());
  std::vector<std::int64_t> hi = lo;
  for (const auto& p : points) {
    if (p.dimension() != lo.size()) throw DomainError("points of different dimension");
    for (std::size_t i = 0; i < lo.size(); ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  return IntBox(ExpVec(std::move(lo)), ExpVec(std::move(hi)));
}

std::string to_string(const IntBox& box) {
  return to_string(box.lo) + ":" + to_string(box.hi);
}

}  // namespace mixlab
