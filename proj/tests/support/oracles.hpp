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

// Independent reference implementations used only by the test suites.

#ifndef RESCERT_TESTS_SUPPORT_ORACLES_HPP_
#define RESCERT_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "rescert/arrangement.hpp"
#include "rescert/certificates.hpp"
#include "rescert/index_set.hpp"
#include "rescert/local_system.hpp"
#include "rescert/rational.hpp"

namespace rescert::testing {

/// a . x <= b.
struct Inequality {
  RationalVector a;
  Rational b;
};

/// Feasibility of a system of inequalities by Fourier-Motzkin elimination.
bool fourier_motzkin_feasible(std::vector<Inequality> system, std::size_t num_vars);

/// {lambda >= 0, sum lambda = 1, M^T lambda = c 1} by Fourier-Motzkin.
bool constant_combination_feasible(const IncidenceMatrix& m);

/// Irreducible components of a flat by exhaustive search over rank-additive
/// splits: i and j share a component iff no split separates them.
std::vector<IndexSet> split_search_components(const Arrangement& a, IndexSet f);

/// True iff no proper split S | F - S with r(S) + r(F - S) = r(F) exists.
bool split_search_irreducible(const Arrangement& a, IndexSet f);

/// All set partitions of `s` (as lists of blocks).
std::vector<std::vector<IndexSet>> set_partitions(IndexSet s);

struct Instance {
  Arrangement arrangement;
  MonodromyMap monodromy;
};

/// Random line arrangement with `lines` distinct lines, integer
/// coefficients in [-bound, bound], and exponents k/d with a common
/// denominator d <= max_den whose sum is an integer.
Instance random_line_instance(std::mt19937_64& rng, std::size_t lines, int bound = 2,
                              int max_den = 6);

/// Random 0/1 incidence matrix with nonempty rows.
IncidenceMatrix random_incidence(std::mt19937_64& rng, std::size_t rows, std::size_t cols);

struct CorpusEntry {
  std::string name;
  Instance instance;
};

/// The bundled corpus documents, E1 to E5 in order.
std::vector<CorpusEntry> load_corpus();
std::string corpus_path(const std::string& file);

/// Arrangement from integer forms.
Arrangement make_arrangement(std::size_t n, const std::vector<std::vector<long>>& forms);
MonodromyMap make_monodromy(const std::vector<std::string>& exponents);

}  // namespace rescert::testing

#endif  // RESCERT_TESTS_SUPPORT_ORACLES_HPP_
