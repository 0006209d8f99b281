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
#include <utility>
#include <vector>

namespace mixlab {

using FpVector = std::vector<std::uint32_t>;

/// Dense rows x cols matrix over F_p, row-major, entries reduced mod p.
class FpMatrix {
 public:
  FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

  /// Builds from signed integer rows, reducing every entry mod p.
  static FpMatrix from_rows(std::uint32_t p, std::size_t cols,
                            const std::vector<std::vector<std::int64_t>>& rows);
  static FpMatrix identity(std::size_t n, std::uint32_t p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t modulus() const { return p_; }

  std::uint32_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, std::int64_t value);
  std::span<const std::uint32_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  /// M * v.
  FpVector apply(std::span<const std::uint32_t> v) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::uint32_t p_;
  std::vector<std::uint32_t> data_;
};

/// Which elimination kernel to run. Both produce identical results.
enum class EliminationPath {
  kAuto,     // bit-packed rows when p == 2, generic otherwise
  kGeneric,  // one uint32 residue per entry
  kGf2,      // 64 entries per machine word; requires p == 2
};

struct RowReduction {
  FpMatrix rref;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  /// Basis of the right null space, one vector per free column in increasing
  /// column order, with a 1 in that free column.
  std::vector<FpVector> kernel_basis;
};

/// Reduced row echelon form by Gauss-Jordan elimination. The pivot in each
/// column is the lowest-index remaining row with a nonzero entry there, so
/// the output is fully deterministic.
RowReduction row_reduce(const FpMatrix& m, EliminationPath path = EliminationPath::kAuto);

/// Sparse linear system A x = b over F_p, assembled row by row.
class LinearSystem {
 public:
  using Row = std::vector<std::pair<std::size_t, std::uint32_t>>;

  LinearSystem(std::uint32_t p, std::size_t unknowns);

  /// Adds sum(entries) = rhs. Repeated columns accumulate.
  void add_equation(Row entries, std::uint32_t rhs = 0);

  std::uint32_t modulus() const { return p_; }
  std::size_t unknowns() const { return cols_; }
  std::size_t equations() const { return rows_.size(); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& rhs() const { return rhs_; }

 private:
  std::uint32_t p_;
  std::size_t cols_;
  std::vector<Row> rows_;
  std::vector<std::uint32_t> rhs_;
};

/// Basis of {x : A x = 0} (right-hand sides ignored), same layout as
/// RowReduction::kernel_basis.
std::vector<FpVector> null_space(const LinearSystem& system,
                                 EliminationPath path = EliminationPath::kAuto);

/// A solution of A x = b with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<FpVector> particular_solution(const LinearSystem& system,
                                            EliminationPath path = EliminationPath::kAuto);

}  // namespace mixlab
