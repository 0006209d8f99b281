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
#include <string>

namespace mixlab {

/// Moduli are primes below this bound so products fit in 32 bits.
inline constexpr std::uint32_t kMaxPrime = 1u << 16;

bool is_prime(std::uint64_t n);

/// Throws DomainError unless p is a prime with p < 2^16.
void require_valid_modulus(std::uint32_t p);

// Raw residue arithmetic; callers guarantee operands are reduced mod p.
namespace fp {

inline std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}
inline std::uint32_t neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }
inline std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p);
}
std::uint32_t pow(std::uint32_t a, std::uint64_t e, std::uint32_t p);
/// Inverse of a nonzero residue.
std::uint32_t inv(std::uint32_t a, std::uint32_t p);
/// Reduce an arbitrary signed integer into [0, p).
std::uint32_t reduce(std::int64_t v, std::uint32_t p);

}  // namespace fp

/// An element of F_p carrying its modulus.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::uint32_t modulus);

  std::uint32_t residue() const { return residue_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return residue_ == 0; }

  FpScalar inverse() const;
  FpScalar pow(std::uint64_t e) const;

  friend FpScalar operator+(FpScalar a, FpScalar b);
  friend FpScalar operator-(FpScalar a, FpScalar b);
  friend FpScalar operator*(FpScalar a, FpScalar b);
  friend FpScalar operator-(FpScalar a);
  friend bool operator==(const FpScalar&, const FpScalar&) = default;

 private:
  struct Reduced {};
  FpScalar(Reduced, std::uint32_t residue, std::uint32_t modulus)
      : residue_(residue), modulus_(modulus) {}

  std::uint32_t residue_;
  std::uint32_t modulus_;
};

}  // namespace mixlab
