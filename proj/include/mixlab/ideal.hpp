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
#include "mixlab/fp_matrix.hpp"
#include "mixlab/laurent_poly.hpp"

namespace mixlab {

/// All v with v + f_box contained in target_box. When f divides a polynomial
/// supported in target_box, the quotient is supported here: the bounding box
/// of a product over an integral domain is the Minkowski sum of the factors'
/// bounding boxes.
std::vector<ExpVec> erosion_support(const IntBox& target_box, const IntBox& f_box);

struct MembershipWitness {
  LaurentPoly quotient;
};

/// Returns g with f * g == h when h lies in the principal ideal <f>, nullopt
/// otherwise. The quotient's coefficients on the erosion support are solved
/// for exactly; h == 0 and monomial f short-circuit. Throws DomainError for
/// f == 0 or incompatible operands.
std::optional<MembershipWitness> divides(const LaurentPoly& f, const LaurentPoly& h,
                                         EliminationPath path = EliminationPath::kAuto);

/// The F_p-space of vectors b indexed by `sites` with sum_s b_s u^s in <f>.
struct KernelBasis {
  std::vector<ExpVec> sites;
  /// Reduced row echelon basis; each row is indexed like `sites`.
  std::vector<FpVector> basis_rows;
  std::uint32_t modulus = 2;

  std::size_t dimension() const { return basis_rows.size(); }
  /// sum_s basis_rows[i][s] u^s.
  LaurentPoly row_polynomial(std::size_t i) const;
};

/// Computes the kernel for distinct, nonempty `sites` (kept in caller order).
///
/// Unknowns are the coefficients of a multiplier g on the erosion support of
/// the sites' bounding box; the constraints force f * g to vanish off the
/// site set. Multiplication by f is injective, so the images of the null
/// space form a basis, which is then brought to reduced echelon form to make
/// it canonical.
KernelBasis kernel_on_support(const LaurentPoly& f, std::span<const ExpVec> sites,
                              EliminationPath path = EliminationPath::kAuto);

}  // namespace mixlab
