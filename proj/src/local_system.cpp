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

#include "rescert/local_system.hpp"

#include <algorithm>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {

MonodromyMap::MonodromyMap(RationalVector exponents) {
  Rational sum = 0;
  for (const auto& q : exponents) sum += q;
  if (!is_integer(sum)) {
    throw InputError("exponent sum " + to_string(sum) + " not an integer");
  }
  exponents_.reserve(exponents.size());
  for (const auto& q : exponents) exponents_.push_back(fractional_part(q));
}

bool MonodromyMap::is_trivial() const {
  return std::all_of(exponents_.begin(), exponents_.end(),
                     [](const Rational& q) { return q == 0; });
}

Rational MonodromyMap::alpha(std::size_t i) const {
  return fractional_part(-exponent(i));
}

MonodromyMap MonodromyMap::inverse() const {
  RationalVector inv;
  inv.reserve(exponents_.size());
  for (const auto& q : exponents_) inv.push_back(fractional_part(1 - q));
  return MonodromyMap(std::move(inv));
}

Integer MonodromyMap::order() const { return common_denominator(exponents_); }

Rational monodromy_of_flat(const MonodromyMap& m, IndexSet members) {
  Rational sum = 0;
  for (auto i : members.members()) sum += m.exponent(i);
  return fractional_part(sum);
}

void check_compatible(const Arrangement& a, const MonodromyMap& m) {
  if (a.size() != m.size()) {
    throw InputError("monodromy map has " + std::to_string(m.size()) +
                     " exponents for " + std::to_string(a.size()) + " hyperplanes");
  }
}

std::vector<Flat> resonant_flats(const Arrangement& a, const MonodromyMap& m,
                                 const IntersectionLattice& lattice) {
  check_compatible(a, m);
  std::vector<Flat> out;
  for (const auto& f : lattice.flats()) {
    if (f.rank == 0 || f.rank > a.ambient_dim()) continue;
    if (monodromy_of_flat(m, f.members) != 0) continue;
    if (is_irreducible(a, f)) out.push_back(f);
  }
  return out;
}

std::vector<Flat> resonant_flats(const Arrangement& a, const MonodromyMap& m) {
  return resonant_flats(a, m, enumerate_lattice(a));
}

std::vector<Flat> resonant_points(const Arrangement& a, const MonodromyMap& m) {
  if (a.ambient_dim() != 2) {
    throw DomainError("resonant points are defined for line arrangements (n = 2)");
  }
  check_compatible(a, m);
  std::vector<Flat> out;
  auto lattice = enumerate_lattice(a);
  if (lattice.max_rank() < 2) return out;
  for (const auto& f : lattice.by_rank()[2]) {
    if (f.members.size() >= 3 && monodromy_of_flat(m, f.members) == 0) out.push_back(f);
  }
  return out;
}

}  // namespace rescert
