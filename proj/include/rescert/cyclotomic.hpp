// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RESCERT_CYCLOTOMIC_HPP_
#define RESCERT_CYCLOTOMIC_HPP_

#include <cstddef>
#include <memory>
#include <vector>

#include "rescert/rational.hpp"

namespace rescert {

/// Integer polynomial, coefficient of x^i at index i.
using IntPolynomial = std::vector<Integer>;

/// The N-th cyclotomic polynomial, by exact division of x^N - 1 by the
/// cyclotomic polynomials of the proper divisors of N.
IntPolynomial cyclotomic_polynomial(unsigned level);

unsigned euler_phi(unsigned n);

inline constexpr unsigned kMaxCyclotomicLevel = 210;

/// Element of Q(zeta_N) = Q[x]/(Phi_N), stored as the remainder of degree
/// below phi(N).
class CycloElement {
 public:
  CycloElement() = default;
  /// The zero element of level N.
  explicit CycloElement(unsigned level);
  CycloElement(unsigned level, const Rational& constant);

  /// zeta_N^k for any integer k (reduced modulo N first).
  static CycloElement zeta_power(unsigned level, long long k);
  /// Reduces an arbitrary-degree polynomial modulo Phi_N.
  static CycloElement from_polynomial(unsigned level,
                                      std::vector<Rational> coeffs);

  unsigned level() const { return level_; }
  const RationalVector& coeffs() const { return coeffs_; }
  bool is_zero() const;

  CycloElement operator+(const CycloElement& o) const;
  CycloElement operator-(const CycloElement& o) const;
  CycloElement operator-() const;
  CycloElement operator*(const CycloElement& o) const;
  CycloElement& operator+=(const CycloElement& o);
  CycloElement& operator-=(const CycloElement& o);
  CycloElement& operator*=(const CycloElement& o);

  /// Multiplicative inverse; throws DomainError on zero.
  CycloElement inverse() const;

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

 private:
  void check_level(const CycloElement& o) const;

  unsigned level_ = 1;
  RationalVector coeffs_;
};

using CycloMatrix = std::vector<std::vector<CycloElement>>;

/// Rank over Q(zeta_N). All entries must have level N (DomainError
/// otherwise). Pivot: first nonzero entry in column order.
std::size_t cyclo_rank(const CycloMatrix& m, unsigned level);

}  // namespace rescert

#endif  // RESCERT_CYCLOTOMIC_HPP_
