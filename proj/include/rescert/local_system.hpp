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

#ifndef RESCERT_LOCAL_SYSTEM_HPP_
#define RESCERT_LOCAL_SYSTEM_HPP_

#include <cstddef>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/lattice.hpp"
#include "rescert/rational.hpp"

namespace rescert {

/// Rank-one local system with monodromy m(H) = exp(2 pi i q_H) around each
/// hyperplane. Exponents are stored reduced into [0, 1).
class MonodromyMap {
 public:
  /// Throws InputError unless the exponents sum to an integer
  /// ("exponent sum 2/3 not an integer").
  explicit MonodromyMap(RationalVector exponents);

  std::size_t size() const { return exponents_.size(); }
  const RationalVector& exponents() const { return exponents_; }
  const Rational& exponent(std::size_t i) const { return exponents_.at(i); }
  bool is_trivial_at(std::size_t i) const { return exponents_.at(i) == 0; }
  bool is_trivial() const;

  /// alpha(H) = (-q_H) mod 1, so that exp(-2 pi i alpha(H)) = m(H).
  Rational alpha(std::size_t i) const;

  /// The dual system m^{-1}, exponents (1 - q) mod 1.
  MonodromyMap inverse() const;

  /// Least common multiple of the exponent denominators.
  Integer order() const;

  friend bool operator==(const MonodromyMap&, const MonodromyMap&) = default;

 private:
  RationalVector exponents_;
};

/// (sum of q_H over H in members) mod 1; zero means m(F) = 1.
Rational monodromy_of_flat(const MonodromyMap& m, IndexSet members);

/// Throws InputError when the map and the arrangement disagree in size.
void check_compatible(const Arrangement& a, const MonodromyMap& m);

/// Irreducible flats F with 1 <= r(F) <= n and m(F) = 1, in flat_less order.
std::vector<Flat> resonant_flats(const Arrangement& a, const MonodromyMap& m);
std::vector<Flat> resonant_flats(const Arrangement& a, const MonodromyMap& m,
                                 const IntersectionLattice& lattice);

/// Points of multiplicity >= 3 of a line arrangement with m(F) = 1, as their
/// rank-2 flats. Throws DomainError unless n = 2.
std::vector<Flat> resonant_points(const Arrangement& a, const MonodromyMap& m);

}  // namespace rescert

#endif  // RESCERT_LOCAL_SYSTEM_HPP_
