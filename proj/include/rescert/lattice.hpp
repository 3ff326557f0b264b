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

#ifndef RESCERT_LATTICE_HPP_
#define RESCERT_LATTICE_HPP_

#include <cstddef>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/index_set.hpp"

namespace rescert {

/// A flat: the set of hyperplanes containing its common intersection.
struct Flat {
  IndexSet members;
  std::size_t rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
};

/// Orders by rank, then by members.
bool flat_less(const Flat& a, const Flat& b);

/// All flats of an arrangement grouped by rank, from the empty flat up to
/// the closure of the whole arrangement.
class IntersectionLattice {
 public:
  explicit IntersectionLattice(std::vector<Flat> flats);

  /// by_rank()[r] lists the flats of rank r in flat_less order.
  const std::vector<std::vector<Flat>>& by_rank() const& { return by_rank_; }
  std::vector<std::vector<Flat>> by_rank() && { return std::move(by_rank_); }
  /// Every flat in flat_less order.
  const std::vector<Flat>& flats() const& { return flats_; }
  std::vector<Flat> flats() && { return std::move(flats_); }
  std::size_t size() const { return flats_.size(); }
  std::size_t max_rank() const { return by_rank_.size() - 1; }
  bool contains(IndexSet members) const { return index_.contains(members); }
  const Flat& at(IndexSet members) const;

 private:
  std::vector<Flat> flats_;
  std::vector<std::vector<Flat>> by_rank_;
  std::unordered_map<IndexSet, std::size_t> index_;
};

/// Smallest flat containing `members`: every hyperplane whose form lies in
/// the span of the forms of `members`.
Flat closure(const Arrangement& a, IndexSet members);

bool is_flat(const Arrangement& a, IndexSet members);

/// Breadth-first closure of unions starting from the singletons.
IntersectionLattice enumerate_lattice(const Arrangement& a);

/// The unique partition of a nonempty flat into irreducible flats whose
/// ranks sum to r(F). Components are the connected components of the
/// matroid of F, read off from fundamental circuits of a basis. Sorted by
/// smallest member. Throws DomainError on the empty flat.
std::vector<Flat> irreducible_decomposition(const Arrangement& a, const Flat& f);

bool is_irreducible(const Arrangement& a, const Flat& f);

/// The flats of L(A) that are irreducible, in flat_less order.
std::vector<Flat> irreducible_flats(const Arrangement& a,
                                    const IntersectionLattice& lattice);

/// Arrangement A_F in P(C^{n+1}/V(F)), of dimension r(F) - 1. The i-th
/// hyperplane of the result comes from the i-th member of F.
Arrangement localization(const Arrangement& a, const Flat& f);

/// A^F together with the flat G_{H'} = closure(F + contributing H) attached
/// to each restricted hyperplane H'.
struct Restriction {
  Arrangement arrangement;
  std::vector<Flat> tags;
};

/// Arrangement A^F in Z(F) = P^{n - r(F)}. Throws DomainError when F is
/// empty or r(F) > n.
Restriction restriction(const Arrangement& a, const Flat& f);

/// Poincare polynomial of the projective complement M(A), coefficient of
/// t^i at index i, via the Mobius function of L(A).
std::vector<long long> poincare_polynomial(const Arrangement& a);
std::vector<long long> poincare_polynomial(const IntersectionLattice& lattice);

/// chi(M(A)) = P(-1).
long long euler_characteristic(const Arrangement& a);

}  // namespace rescert

#endif  // RESCERT_LATTICE_HPP_
