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

#include "mixlab/window_oracle.hpp"

#include <algorithm>
#include <map>

#include "mixlab/errors.hpp"

namespace mixlab {
namespace {

struct Relation {
  std::vector<std::pair<std::size_t, std::uint32_t>> cells;  // sorted by cell
};

class WindowSearch {
 public:
  WindowSearch(const SystemSpec& sys, std::span<const ExpVec> sites, const IntBox& window,
               std::uint64_t max_nodes)
      : p_(sys.p), max_nodes_(max_nodes), cells_(window.points()) {
    std::map<ExpVec, std::size_t> index;
    for (std::size_t i = 0; i < cells_.size(); ++i) index.emplace(cells_[i], i);
    for (const auto& s : sites) {
      auto it = index.find(s);
      if (it == index.end()) {
        throw DomainError("site " + to_string(s) + " outside window " + to_string(window));
      }
      site_cells_.push_back(it->second);
    }
    // Relations are attached to their last cell, where they become checkable.
    forced_.resize(cells_.size());
    const auto box = sys.f.support_box();
    for (const auto& v : erosion_support(window, box)) {
      Relation rel;
      for (const auto& [s, c] : sys.f.terms()) rel.cells.emplace_back(index.at(v + s), c);
      std::sort(rel.cells.begin(), rel.cells.end());
      forced_[rel.cells.back().first].push_back(std::move(rel));
    }
    values_.assign(cells_.size(), 0);
  }

  WindowImage run(const IntBox& window, std::span<const ExpVec> sites) {
    visit(0);
    return WindowImage{window, {sites.begin(), sites.end()}, std::move(patterns_), leaves_};
  }

 private:
  static std::vector<ExpVec> erosion_support(const IntBox& window, const IntBox& f_box) {
    const std::size_t d = window.dimension();
    std::vector<std::int64_t> lo(d), hi(d);
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = window.lo[i] - f_box.lo[i];
      hi[i] = window.hi[i] - f_box.hi[i];
      if (lo[i] > hi[i]) return {};
    }
    return IntBox(ExpVec(lo), ExpVec(hi)).points();
  }

  std::uint32_t residual(const Relation& rel) const {
    // Sum over all cells except the last.
    std::uint32_t acc = 0;
    for (std::size_t k = 0; k + 1 < rel.cells.size(); ++k) {
      const auto& [cell, c] = rel.cells[k];
      acc = fp::add(acc, fp::mul(c, values_[cell], p_), p_);
    }
    return acc;
  }

  void visit(std::size_t i) {
    if (++nodes_ > max_nodes_) {
      throw WorkBoundError("window enumeration exceeded " + std::to_string(max_nodes_) + " nodes");
    }
    if (i == cells_.size()) {
      ++leaves_;
      FpVector pattern;
      pattern.reserve(site_cells_.size());
      for (auto cell : site_cells_) pattern.push_back(values_[cell]);
      patterns_.insert(std::move(pattern));
      return;
    }
    const auto& rels = forced_[i];
    if (rels.empty()) {
      for (std::uint32_t a = 0; a < p_; ++a) {
        values_[i] = a;
        visit(i + 1);
      }
      return;
    }
    // The first relation determines the cell; the rest must agree.
    const auto lead = rels.front().cells.back().second;
    values_[i] = fp::mul(fp::neg(residual(rels.front()), p_), fp::inv(lead, p_), p_);
    for (std::size_t r = 1; r < rels.size(); ++r) {
      const auto c = rels[r].cells.back().second;
      if (fp::add(residual(rels[r]), fp::mul(c, values_[i], p_), p_) != 0) return;
    }
    visit(i + 1);
  }

  std::uint32_t p_;
  std::uint64_t max_nodes_;
  std::uint64_t nodes_ = 0;
  std::uint64_t leaves_ = 0;
  std::vector<ExpVec> cells_;
  std::vector<std::size_t> site_cells_;
  std::vector<std::vector<Relation>> forced_;
  std::vector<std::uint32_t> values_;
  std::set<FpVector> patterns_;
};

}  // namespace

WindowImage window_image(const SystemSpec& sys, std::span<const ExpVec> sites,
                         const IntBox& window, std::uint64_t max_nodes) {
  if (window.dimension() != sys.d) throw DomainError("window dimension differs from system");
  return WindowSearch(sys, sites, window, max_nodes).run(window, sites);
}

StableWindowImage stable_window_image(const SystemSpec& sys, std::span<const ExpVec> sites,
                                      const IntBox& window, std::uint64_t max_nodes) {
  StableWindowImage out{window_image(sys, sites, window, max_nodes), false};
  const auto once = window_image(sys, sites, window.expanded(1), max_nodes);
  if (once.patterns != out.image.patterns) return out;
  const auto twice = window_image(sys, sites, window.expanded(2), max_nodes);
  out.stabilized = twice.patterns == out.image.patterns;
  return out;
}

Rational image_measure(const WindowImage& image, std::span<const ExpVec> sites,
                       std::span<const std::uint32_t> values) {
  if (sites.size() != values.size()) throw DomainError("sites and values differ in length");
  std::vector<std::size_t> columns;
  for (const auto& s : sites) {
    auto it = std::find(image.sites.begin(), image.sites.end(), s);
    if (it == image.sites.end()) throw DomainError("site " + to_string(s) + " not in window image");
    columns.push_back(static_cast<std::size_t>(it - image.sites.begin()));
  }
  std::set<FpVector> projected;
  for (const auto& pattern : image.patterns) {
    FpVector sub;
    for (auto c : columns) sub.push_back(pattern[c]);
    projected.insert(std::move(sub));
  }
  FpVector wanted(values.begin(), values.end());
  if (projected.empty() || !projected.contains(wanted)) return Rational(0);
  return Rational(1, projected.size());
}

WindowOracleReport window_oracle(const SystemSpec& sys, const CylinderSpec& c, const IntBox& window,
                                 std::uint64_t max_nodes) {
  const auto sites = c.sites();
  const auto values = c.values();
  for (auto v : values) {
    if (v >= sys.p) throw DomainError("cylinder value outside F_p");
  }
  auto stable = stable_window_image(sys, sites, window, max_nodes);
  WindowOracleReport report;
  report.window = window;
  report.configurations = stable.image.configurations;
  report.image_size = stable.image.patterns.size();
  report.matching = stable.image.patterns.contains(FpVector(values.begin(), values.end())) ? 1 : 0;
  report.measure_estimate =
      report.image_size == 0 ? Rational(0) : Rational(report.matching, report.image_size);
  report.stabilized = stable.stabilized;
  return report;
}

}  // namespace mixlab
