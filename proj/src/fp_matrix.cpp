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

#include "mixlab/fp_matrix.hpp"

#include <algorithm>
#include <type_traits>

#include "mixlab/errors.hpp"
#include "mixlab/prime_field.hpp"

namespace mixlab {
namespace {

// Row storage with one residue per entry.
class DenseRows {
 public:
  DenseRows(std::size_t rows, std::size_t cols, std::uint32_t p)
      : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t get(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void accumulate(std::size_t r, std::size_t c, std::uint32_t v) {
    auto& slot = data_[r * cols_ + c];
    slot = fp::add(slot, v, p_);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * cols_, data_.begin() + (a + 1) * cols_,
                     data_.begin() + b * cols_);
  }

  void scale(std::size_t r, std::size_t from, std::uint32_t factor) {
    if (factor == 1) return;
    auto* row = data_.data() + r * cols_;
    for (std::size_t c = from; c < cols_; ++c) row[c] = fp::mul(row[c], factor, p_);
  }

  // row[dst] -= factor * row[src] on columns >= from.
  void subtract(std::size_t dst, std::size_t src, std::size_t from, std::uint32_t factor) {
    auto* d = data_.data() + dst * cols_;
    const auto* s = data_.data() + src * cols_;
    for (std::size_t c = from; c < cols_; ++c) {
      if (s[c]) d[c] = fp::sub(d[c], fp::mul(factor, s[c], p_), p_);
    }
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

// GF(2) rows packed 64 entries per word.
class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * words_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t get(std::size_t r, std::size_t c) const {
    return static_cast<std::uint32_t>((data_[r * words_ + c / 64] >> (c % 64)) & 1u);
  }
  void accumulate(std::size_t r, std::size_t c, std::uint32_t v) {
    if (v & 1u) data_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(data_.begin() + a * words_, data_.begin() + (a + 1) * words_,
                     data_.begin() + b * words_);
  }

  void scale(std::size_t, std::size_t, std::uint32_t) {}

  void subtract(std::size_t dst, std::size_t src, std::size_t from, std::uint32_t) {
    auto* d = data_.data() + dst * words_;
    const auto* s = data_.data() + src * words_;
    for (std::size_t w = from / 64; w < words_; ++w) d[w] ^= s[w];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

// Gauss-Jordan to reduced row echelon form; returns pivot columns in order.
template <class Rows>
std::vector<std::size_t> eliminate(Rows& m, std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t r = rank;
    while (r < m.rows() && m.get(r, c) == 0) ++r;
    if (r == m.rows()) continue;
    m.swap_rows(r, rank);
    m.scale(rank, c, fp::inv(m.get(rank, c), p));
    for (std::size_t other = 0; other < m.rows(); ++other) {
      if (other == rank) continue;
      if (auto factor = m.get(other, c); factor != 0) m.subtract(other, rank, c, factor);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

template <class Rows>
std::vector<FpVector> kernel_from_rref(const Rows& m, const std::vector<std::size_t>& pivots,
                                       std::size_t unknowns, std::uint32_t p) {
  std::vector<bool> is_pivot(unknowns, false);
  for (auto c : pivots) {
    if (c < unknowns) is_pivot[c] = true;
  }
  std::vector<FpVector> basis;
  for (std::size_t free = 0; free < unknowns; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(unknowns, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] < unknowns) v[pivots[i]] = fp::neg(m.get(i, free), p);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class Rows>
Rows load(const LinearSystem& s, bool with_rhs) {
  const std::size_t cols = s.unknowns() + (with_rhs ? 1 : 0);
  Rows m = [&] {
    if constexpr (std::is_same_v<Rows, BitRows>) {
      return BitRows(s.equations(), cols);
    } else {
      return DenseRows(s.equations(), cols, s.modulus());
    }
  }();
  for (std::size_t r = 0; r < s.equations(); ++r) {
    for (const auto& [c, v] : s.rows()[r]) m.accumulate(r, c, v);
    if (with_rhs) m.accumulate(r, s.unknowns(), s.rhs()[r]);
  }
  return m;
}

bool use_bits(EliminationPath path, std::uint32_t p) {
  switch (path) {
    case EliminationPath::kGf2:
      if (p != 2) throw DomainError("GF(2) elimination path requested for p != 2");
      return true;
    case EliminationPath::kGeneric:
      return false;
    case EliminationPath::kAuto:
    default:
      return p == 2;
  }
}

template <class Rows>
std::vector<FpVector> null_space_impl(const LinearSystem& s) {
  Rows m = load<Rows>(s, false);
  auto pivots = eliminate(m, s.modulus());
  return kernel_from_rref(m, pivots, s.unknowns(), s.modulus());
}

template <class Rows>
std::optional<FpVector> particular_impl(const LinearSystem& s) {
  Rows m = load<Rows>(s, true);
  auto pivots = eliminate(m, s.modulus());
  FpVector x(s.unknowns(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == s.unknowns()) return std::nullopt;
    x[pivots[i]] = m.get(i, s.unknowns());
  }
  return x;
}

template <class Rows>
RowReduction row_reduce_impl(const FpMatrix& a) {
  LinearSystem s(a.modulus(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    LinearSystem::Row row;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (a.at(r, c)) row.emplace_back(c, a.at(r, c));
    }
    s.add_equation(std::move(row));
  }
  Rows m = load<Rows>(s, false);
  RowReduction out{FpMatrix(a.rows(), a.cols(), a.modulus()), 0, {}, {}};
  out.pivot_columns = eliminate(m, a.modulus());
  out.rank = out.pivot_columns.size();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.rref.set(r, c, m.get(r, c));
  }
  out.kernel_basis = kernel_from_rref(m, out.pivot_columns, a.cols(), a.modulus());
  return out;
}

}  // namespace

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
  require_valid_modulus(p);
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, std::size_t cols,
                             const std::vector<std::vector<std::int64_t>>& rows) {
  FpMatrix m(rows.size(), cols, p);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
  data_[r * cols_ + c] = fp::reduce(value, p_);
}

FpVector FpMatrix::apply(std::span<const std::uint32_t> v) const {
  if (v.size() != cols_) throw DomainError("vector length does not match matrix columns");
  FpVector out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out[r] = fp::add(out[r], fp::mul(at(r, c), v[c] % p_, p_), p_);
    }
  }
  return out;
}

RowReduction row_reduce(const FpMatrix& m, EliminationPath path) {
  return use_bits(path, m.modulus()) ? row_reduce_impl<BitRows>(m) : row_reduce_impl<DenseRows>(m);
}

LinearSystem::LinearSystem(std::uint32_t p, std::size_t unknowns) : p_(p), cols_(unknowns) {
  require_valid_modulus(p);
}

void LinearSystem::add_equation(Row entries, std::uint32_t rhs) {
  for (auto& [c, v] : entries) {
    if (c >= cols_) throw DomainError("equation references an unknown out of range");
    v %= p_;
  }
  rows_.push_back(std::move(entries));
  rhs_.push_back(rhs % p_);
}

std::vector<FpVector> null_space(const LinearSystem& system, EliminationPath path) {
  return use_bits(path, system.modulus()) ? null_space_impl<BitRows>(system)
                                          : null_space_impl<DenseRows>(system);
}

std::optional<FpVector> particular_solution(const LinearSystem& system, EliminationPath path) {
  return use_bits(path, system.modulus()) ? particular_impl<BitRows>(system)
                                          : particular_impl<DenseRows>(system);
}

}  // namespace mixlab
