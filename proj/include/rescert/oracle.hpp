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

#ifndef RESCERT_ORACLE_HPP_
#define RESCERT_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/constructions.hpp"
#include "rescert/cyclotomic.hpp"
#include "rescert/local_system.hpp"
#include "rescert/rational.hpp"

namespace rescert {

/// A multiple point met by the sweep: the wires at positions
/// [start, start + multiplicity) cross there and reverse their order.
struct WiringVertex {
  std::size_t start = 0;
  std::size_t multiplicity = 0;
  Rational sweep;
};

/// Sweep record of a real affine line arrangement in the coordinates
/// u = x + shear * y (sweep) and v = y (height).
struct WiringDiagram {
  /// Indices into the affine arrangement, top to bottom left of all vertices.
  std::vector<std::size_t> wires;
  std::vector<WiringVertex> vertices;
  Rational shear;
};

/// Builds the wiring diagram, trying shears 0, 1, -1, 1/2, -1/2, 2, -2, ...
/// until no line is vertical and all vertices have distinct sweep
/// coordinates. A given shear is used as is (DomainError when unusable).
/// Throws DomainError unless the affine arrangement is a set of lines.
WiringDiagram wiring_diagram(const AffineArrangement& affine,
                             std::optional<Rational> shear = std::nullopt);

/// Free-group word; letter +-(i + 1) stands for generator i or its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);
Word concat(const Word& a, const Word& b);

struct GroupPresentation {
  std::size_t generators = 0;
  std::vector<Word> relators;
  /// Affine line of each generator (its meridian).
  std::vector<std::size_t> generator_lines;
};

/// Sweeps left to right keeping one meridian word per position. At a vertex
/// with local words a_1 (top), ..., a_k emits [a_1 ... a_k, a_j] for
/// j < k; the wire at local position j then moves to k + 1 - j with word
/// (a_1 ... a_{j-1}) a_j (a_1 ... a_{j-1})^{-1}.
GroupPresentation presentation(const WiringDiagram& w);

/// Scalar representation x_j -> zeta_N^{exponents[j]}.
struct ScalarRepresentation {
  unsigned level = 1;
  std::vector<long long> exponents;

  CycloElement image(const Word& w) const;
};

/// Fox Jacobian (relators x generators) evaluated at rho.
CycloMatrix fox_jacobian(const GroupPresentation& p, const ScalarRepresentation& rho);

/// Boundary column (rho(x_j) - 1)_j.
std::vector<CycloElement> boundary_column(const ScalarRepresentation& rho);

/// J * d1 == 0, the Fox fundamental identity for relators with rho(r) = 1.
bool chain_condition_holds(const CycloMatrix& jacobian, const ScalarRepresentation& rho);

/// dim H_1 with twisted coefficients: (g - rank d1) - rank J.
std::size_t twisted_h1(const GroupPresentation& p, const ScalarRepresentation& rho);

struct OracleOptions {
  std::optional<Rational> shear;
};

struct CohomologyDims {
  std::size_t h0 = 0;
  std::size_t h1 = 0;
  std::size_t h2 = 0;
  long long chi = 0;
  std::size_t decone_at = 0;
  std::size_t generators = 0;
  std::size_t relators = 0;
  Rational shear;
};

/// Twisted cohomology of a real line arrangement, with h^1 computed as the
/// dimension of H_1 for the inverse representation rho(x_H) = zeta_N^{-k_H},
/// q_H = k_H / N. Throws DomainError unless n = 2, when N exceeds
/// kMaxCyclotomicLevel, or when decone_at is out of range; throws Error when
/// the chain condition fails.
CohomologyDims twisted_cohomology(const Arrangement& a, const MonodromyMap& m,
                                  std::size_t decone_at, const OracleOptions& options = {});

}  // namespace rescert

#endif  // RESCERT_ORACLE_HPP_
