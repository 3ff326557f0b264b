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

#ifndef RESCERT_CONSTRUCTIONS_HPP_
#define RESCERT_CONSTRUCTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/criteria.hpp"
#include "rescert/lattice.hpp"
#include "rescert/local_system.hpp"
#include "rescert/rational.hpp"

namespace rescert {

/// Stable 64-bit seed derived from the exact coefficients of `a` and a salt.
std::uint64_t derive_seed(const Arrangement& a, std::uint64_t salt = 0);

struct RandomSearch {
  /// Seed of the coefficient generator; derived from the input when unset.
  std::optional<std::uint64_t> seed;
  /// Initial coefficient bound B; doubled after every `attempts_per_bound`
  /// failures.
  long initial_bound = 4;
  int attempts_per_bound = 8;
  int max_attempts = 256;
};

/// Lift of A to P^{n+1} along a bipartition: part1 forms become (l, 0) and
/// part2 forms (l, -l(z)), so that V(H~) = V(H) + C(0,...,0,1) or
/// V(H) + C(z, 1) respectively.
struct LiftedArrangement {
  Arrangement base;
  Arrangement lifted;
  Bipartition partition;
  RationalVector direction;
  std::uint64_t seed = 0;
  int attempts = 0;
};

/// Samples z until z avoids V(F1) + V(F2) for every pair of flats
/// F1 in L(A1), F2 in L(A2) whose sum is a proper subspace. Empty parts are
/// allowed. Throws RetryBudgetExhausted naming the last violating pair.
LiftedArrangement lift_bipartition(const Arrangement& a, const Bipartition& b,
                                   const RandomSearch& search = {});

/// Lifted form of hyperplane h for the given partition and direction.
RationalVector lifted_form(const Arrangement& a, const Bipartition& b,
                           const RationalVector& direction, std::size_t h);

struct GenericSection {
  Hyperplane hyperplane;
  std::uint64_t seed = 0;
  int attempts = 0;
};

/// H0 containing Z(I), not in A, with Z(F) in H0 iff F contains I for every
/// flat F. Samples integer combinations of the forms of I and verifies each
/// candidate over L(A). Throws DomainError when r(I) < 2 or I is not an
/// irreducible flat, RetryBudgetExhausted when sampling fails.
GenericSection generic_section(const Arrangement& a, const Flat& i,
                               const RandomSearch& search = {});

/// The section arrangement (A + H0)^{H0} and, for each of its hyperplanes,
/// the set of H in A with H & H0 equal to it.
struct SectionArrangement {
  Arrangement arrangement;
  std::vector<IndexSet> sources;
};
SectionArrangement section_arrangement(const Arrangement& a, const Hyperplane& h0);

/// Restriction of m to the section: each hyperplane gets the summed
/// exponent of its sources.
MonodromyMap section_monodromy(const SectionArrangement& s, const MonodromyMap& m);

/// Affine hyperplane sum_i coeffs[i] x_i + constant = 0 in C^n.
struct AffineHyperplane {
  RationalVector coeffs;
  Rational constant;
  std::size_t source = 0;
};

/// A in the chart P^n minus H_inf. The meridian of the deleted hyperplane is
/// the inverse of the product of the others.
struct AffineArrangement {
  std::size_t dim = 0;
  std::vector<AffineHyperplane> hyperplanes;
  std::size_t deleted = 0;
};

/// Affine coordinates x_j = e_j / l_inf for j != p, where p is the first
/// nonzero coordinate of l_inf. Throws DomainError when h_inf is out of
/// range.
AffineArrangement decone(const Arrangement& a, std::size_t h_inf);

/// Homogenizes back into P^n in coordinates (x_1, ..., x_n, x_0); the
/// deleted hyperplane returns at its original index as x_0 = 0.
Arrangement recone(const AffineArrangement& affine);

}  // namespace rescert

#endif  // RESCERT_CONSTRUCTIONS_HPP_
