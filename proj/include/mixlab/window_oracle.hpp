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
#include <set>
#include <span>
#include <vector>

#include "mixlab/exp_vec.hpp"
#include "mixlab/fp_matrix.hpp"
#include "mixlab/haar.hpp"
#include "mixlab/rational.hpp"

namespace mixlab {

/// Default cap on search-tree nodes visited by one window enumeration.
inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 24;

/// Projection onto `sites` of every F_p configuration on `window` that
/// satisfies each translate of the defining relation lying inside it.
struct WindowImage {
  IntBox window;
  std::vector<ExpVec> sites;
  std::set<FpVector> patterns;
  std::uint64_t configurations = 0;
};

/// Enumerates valid window configurations by depth-first search over the
/// cells in lexicographic order. A cell completing some relation is forced;
/// other cells branch over F_p. No linear algebra is involved, which keeps
/// this route independent of the kernel computation.
///
/// Throws DomainError if a site lies outside the window and WorkBoundError
/// once more than `max_nodes` search nodes are visited.
WindowImage window_image(const SystemSpec& sys, std::span<const ExpVec> sites,
                         const IntBox& window, std::uint64_t max_nodes = kDefaultOracleBudget);

struct StableWindowImage {
  WindowImage image;
  /// True when growing the window by one and then two cells in every
  /// direction leaves the projected image unchanged.
  bool stabilized = false;
};

StableWindowImage stable_window_image(const SystemSpec& sys, std::span<const ExpVec> sites,
                                      const IntBox& window,
                                      std::uint64_t max_nodes = kDefaultOracleBudget);

struct WindowOracleReport {
  IntBox window;
  /// Valid configurations on the window.
  std::uint64_t configurations = 0;
  /// Distinct projections onto the cylinder's sites.
  std::uint64_t image_size = 0;
  /// Projections equal to the cylinder's assignment (0 or 1).
  std::uint64_t matching = 0;
  /// matching / image_size.
  Rational measure_estimate;
  bool stabilized = false;
};

/// Window estimate of a cylinder's measure. Once the image has stabilized
/// it agrees with cylinder_measure on the systems exercised in the tests;
/// for general f local window solutions can outnumber global ones.
WindowOracleReport window_oracle(const SystemSpec& sys, const CylinderSpec& c, const IntBox& window,
                                 std::uint64_t max_nodes = kDefaultOracleBudget);

/// Measure of `values` on `sites` read off a window image of a superset of
/// those sites: 1/|projected image| when the values occur, else 0.
Rational image_measure(const WindowImage& image, std::span<const ExpVec> sites,
                       std::span<const std::uint32_t> values);

}  // namespace mixlab
