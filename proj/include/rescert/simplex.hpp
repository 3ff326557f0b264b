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

#ifndef RESCERT_SIMPLEX_HPP_
#define RESCERT_SIMPLEX_HPP_

#include <cstddef>

#include "rescert/matrix.hpp"
#include "rescert/rational.hpp"

namespace rescert {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  /// Primal solution (kOptimal).
  RationalVector x;
  /// Optimal duals (kOptimal), or a Farkas ray y with A^T y <= 0 and
  /// b^T y > 0 (kInfeasible).
  RationalVector y;
  Rational objective = 0;
  std::size_t pivots = 0;
};

/// Two-phase dense tableau simplex over Q for
///   minimize c^T x  subject to  A x = b, x >= 0,
/// using Bland's rule (lowest index enters, lowest basic index leaves on
/// ratio ties), so it always terminates.
LpResult solve_standard_form(const RatMatrix& a, const RationalVector& b,
                             const RationalVector& c);

}  // namespace rescert

#endif  // RESCERT_SIMPLEX_HPP_
