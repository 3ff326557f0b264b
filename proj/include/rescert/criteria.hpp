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

#ifndef RESCERT_CRITERIA_HPP_
#define RESCERT_CRITERIA_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/certificates.hpp"
#include "rescert/lattice.hpp"
#include "rescert/local_system.hpp"

namespace rescert {

/// Two disjoint index sets covering the arrangement.
struct Bipartition {
  IndexSet part1;
  IndexSet part2;

  /// Throws InputError unless the parts are disjoint, cover {0..size-1} and
  /// (unless allow_empty) are both nonempty.
  void validate(std::size_t size, bool allow_empty = false) const;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// Flats that justify a conclusion (the sheltering flat, the resonant point
/// and the hyperplanes used, ...).
struct FlatReferences {
  std::vector<Flat> flats;
  std::vector<std::size_t> hyperplanes;

  friend bool operator==(const FlatReferences&, const FlatReferences&) = default;
};

using Evidence = std::variant<std::monostate, DeltaCertificate, LambdaWitness,
                              Bipartition, FlatReferences>;

enum class CriterionStatus { kFired, kInconclusive, kError };

const char* to_string(CriterionStatus s);

/// Outcome of one criterion. When fired, `level` is the k of the
/// k-vanishing conclusion (H^p = 0 for p < k) and `evidence` its
/// certificate; when inconclusive, `evidence` may hold a refutation witness
/// and `detail` says which hypothesis failed.
struct CriterionResult {
  std::string criterion;
  CriterionStatus status = CriterionStatus::kInconclusive;
  std::size_t level = 0;
  bool nonresonant = false;
  Evidence evidence;
  std::string detail;

  bool fired() const { return status == CriterionStatus::kFired; }
};

/// Shared per-instance data: lattice and resonant flats.
class CriteriaContext {
 public:
  /// Throws InputError on an empty arrangement or a size mismatch.
  CriteriaContext(Arrangement a, MonodromyMap m);

  const Arrangement& arrangement() const { return a_; }
  const MonodromyMap& monodromy() const { return m_; }
  const IntersectionLattice& lattice() const { return lattice_; }
  const std::vector<Flat>& resonant() const { return resonant_; }
  IncidenceMatrix incidence() const;
  std::size_t n() const { return a_.ambient_dim(); }

 private:
  Arrangement a_;
  MonodromyMap m_;
  IntersectionLattice lattice_;
  std::vector<Flat> resonant_;
};

/// Fires iff some hyperplane lies in no resonant flat; certificate is
/// delta_for_hyperplane at the lowest such index.
CriterionResult check_cdo(const CriteriaContext& ctx);

/// Constant-combination test on the resonant-flat incidence matrix: a delta
/// certificate fires (nonresonant), a lambda witness refutes.
CriterionResult check_lambda_criterion(const CriteriaContext& ctx);

/// Line arrangements: a rank-2 resonant flat F, a line H1 in F with
/// m(H1) != 1 lying in no other resonant flat, and a line H2 outside F with
/// m(H2) != 1. Throws DomainError unless n = 2.
CriterionResult check_unique_resonant_point(const CriteriaContext& ctx);

/// Line arrangements: each part has a line with m != 1 and no resonant
/// point has lines in both parts. Throws DomainError unless n = 2 and
/// InputError on a malformed partition.
CriterionResult check_bipartition_lines(const CriteriaContext& ctx, const Bipartition& b);

/// Resonance graph components: part1 is the component of the lowest line
/// with m != 1, part2 the rest; none when the lines with m != 1 sit in a
/// single component. Throws DomainError unless n = 2.
std::optional<Bipartition> search_bipartition_lines(const CriteriaContext& ctx);

/// Any dimension: prod over part1 of m != 1 and r(S & A1) + r(S & A2) = r(S)
/// for every flat S of rank <= n. Conclusion: n-vanishing.
CriterionResult check_bipartition_general(const CriteriaContext& ctx, const Bipartition& b);

inline constexpr std::size_t kMaxBruteForcePartitionSize = 16;

/// Tries all 2^{|A|-1} - 1 bipartitions in mask order; throws DomainError
/// when |A| > kMaxBruteForcePartitionSize.
std::optional<Bipartition> search_bipartition_general(const CriteriaContext& ctx);

/// Fires iff no resonant flat contains the irreducible flat I; conclusion
/// (n + 1 - r(I))-vanishing. Throws DomainError when I is not an
/// irreducible flat.
CriterionResult check_irreducible_shelter(const CriteriaContext& ctx, const Flat& i);

struct RunOptions {
  /// Also brute-force check_bipartition_general over all bipartitions.
  bool search_general_partitions = false;
  /// User-supplied partition, checked by both bipartition criteria.
  std::optional<Bipartition> partition;
  /// Irreducible flat for the shelter criterion; otherwise the irreducible
  /// flats of rank <= n are tried in increasing rank.
  std::optional<Flat> flat;
};

struct CriterionReport {
  std::vector<CriterionResult> results;
  std::size_t best_level = 0;
  bool nonresonant = false;
};

/// One criterion by name (cdo, lambda, point, bipartition,
/// bipartition-general, shelter). Without a partition the bipartition
/// criteria search for one. Throws InputError on an unknown name.
CriterionResult run_criterion(const CriteriaContext& ctx, const std::string& name,
                              const RunOptions& options = {});

/// Every applicable criterion in a fixed order: cdo, lambda, point,
/// bipartition, bipartition-general, shelter. Never concludes resonance.
CriterionReport run_all(const CriteriaContext& ctx, const RunOptions& options = {});

}  // namespace rescert

#endif  // RESCERT_CRITERIA_HPP_
