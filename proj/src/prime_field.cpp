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

#include "mixlab/prime_field.hpp"

#include "mixlab/errors.hpp"

namespace mixlab {
namespace {

void require_same_modulus(FpScalar a, FpScalar b) {
  if (a.modulus() != b.modulus()) throw DomainError("F_p scalars with different moduli");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

void require_valid_modulus(std::uint32_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a prime below 2^16");
  }
}

namespace fp {

std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t result = 1 % p;
  while (e) {
    if (e & 1) result = mul(result, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw DomainError("inverse of zero in F_p");
  return pow(a, p - 2, p);
}

std::uint32_t reduce(std::int64_t v, std::uint32_t p) {
  std::int64_t r = v % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

}  // namespace fp

FpScalar::FpScalar(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  require_valid_modulus(modulus);
  residue_ = fp::reduce(value, modulus);
}

FpScalar FpScalar::inverse() const {
  return FpScalar(Reduced{}, fp::inv(residue_, modulus_), modulus_);
}

FpScalar FpScalar::pow(std::uint64_t e) const {
  return FpScalar(Reduced{}, fp::pow(residue_, e, modulus_), modulus_);
}

FpScalar operator+(FpScalar a, FpScalar b) {
  require_same_modulus(a, b);
  return FpScalar(FpScalar::Reduced{}, fp::add(a.residue_, b.residue_, a.modulus_), a.modulus_);
}

FpScalar operator-(FpScalar a, FpScalar b) {
  require_same_modulus(a, b);
  return FpScalar(FpScalar::Reduced{}, fp::sub(a.residue_, b.residue_, a.modulus_), a.modulus_);
}

FpScalar operator*(FpScalar a, FpScalar b) {
  require_same_modulus(a, b);
  return FpScalar(FpScalar::Reduced{}, fp::mul(a.residue_, b.residue_, a.modulus_), a.modulus_);
}

FpScalar operator-(FpScalar a) {
  return FpScalar(FpScalar::Reduced{}, fp::neg(a.residue_, a.modulus_), a.modulus_);
}

}  // namespace mixlab
