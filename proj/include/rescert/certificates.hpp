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

#ifndef RESCERT_CERTIFICATES_HPP_
#define RESCERT_CERTIFICATES_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/index_set.hpp"
#include "rescert/lattice.hpp"
#include "rescert/rational.hpp"

namespace rescert {

/// 0/1 incidence of resonant flats (rows) against hyperplanes (columns).
struct IncidenceMatrix {
  std::size_t cols = 0;
  std::vector<IndexSet> rows;

  static IncidenceMatrix from_flats(std::size_t num_hyperplanes,
                                    std::span<const Flat> flats);
  /// Sum over the rows containing column h of the row weights.
  std::vector<Integer> column_sums(std::span<const Integer> weights) const;
};

/// Nonnegative integer weights on resonant flats, not all zero, whose
/// hyperplane sums all equal `common_sum`.
struct LambdaWitness {
  std::vector<Integer> values;
  Integer common_sum = 0;

  friend bool operator==(const LambdaWitness&, const LambdaWitness&) = default;
};

/// Rational weights on hyperplanes with total zero and positive sum on every
/// resonant flat.
struct DeltaCertificate {
  RationalVector values;

  friend bool operator==(const DeltaCertificate&, const DeltaCertificate&) = default;
};

/// The two mutually exclusive outcomes of the constant-combination problem.
using ConstantCombinationResult = std::variant<LambdaWitness, DeltaCertificate>;

struct Verdict {
  bool accepted = false;
  std::string reason;

  static Verdict accept() { return {true, {}}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return accepted; }
};

/// Decides whether some lambda >= 0, lambda != 0 makes M^T lambda constant.
/// Solves {lambda >= 0, sum lambda = 1, M^T lambda - c 1 = 0, c free} with
/// the exact simplex. Feasible: the basic solution scaled to coprime
/// integers. Infeasible: delta = -(phase-one Farkas ray on the hyperplane
/// rows), scaled to coprime integers. No rows gives delta = 0.
/// Throws DomainError when M has no columns.
ConstantCombinationResult decide_constant_combination(const IncidenceMatrix& m);

/// Accepts iff sum delta = 0 and every flat of `resonant` has positive
/// delta-sum. Throws DomainError when delta is not indexed by `a`.
Verdict verify_delta(const Arrangement& a, std::span<const Flat> resonant,
                     const DeltaCertificate& delta);

/// Accepts iff lambda >= 0, lambda != 0 and every column sum of M^T lambda
/// equals lambda.common_sum. Throws DomainError on a row-count mismatch.
Verdict verify_lambda(const IncidenceMatrix& m, const LambdaWitness& lambda);

/// delta(h) = 1 - |A| and delta(h') = 1 otherwise. Throws DomainError when
/// h is not an index of `a` or |A| < 2.
DeltaCertificate delta_for_hyperplane(const Arrangement& a, std::size_t h);

}  // namespace rescert

#endif  // RESCERT_CERTIFICATES_HPP_
