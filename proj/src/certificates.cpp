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

#include "rescert/certificates.hpp"

#include <algorithm>
#include <utility>

#include "rescert/error.hpp"
#include "rescert/simplex.hpp"

namespace rescert {

IncidenceMatrix IncidenceMatrix::from_flats(std::size_t num_hyperplanes,
                                            std::span<const Flat> flats) {
  IncidenceMatrix m;
  m.cols = num_hyperplanes;
  for (const auto& f : flats) m.rows.push_back(f.members);
  return m;
}

std::vector<Integer> IncidenceMatrix::column_sums(std::span<const Integer> weights) const {
  if (weights.size() != rows.size()) {
    throw DomainError("weight vector has " + std::to_string(weights.size()) +
                      " entries for " + std::to_string(rows.size()) + " rows");
  }
  std::vector<Integer> sums(cols, 0);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (auto h : rows[r].members()) sums[h] += weights[r];
  }
  return sums;
}

ConstantCombinationResult decide_constant_combination(const IncidenceMatrix& m) {
  if (m.cols == 0) throw DomainError("incidence matrix has no columns");
  const std::size_t k = m.rows.size();
  if (k == 0) return DeltaCertificate{RationalVector(m.cols, 0)};

  // Variables: lambda_1..lambda_k, c+, c-. Row 0 normalizes, row 1+h states
  // that hyperplane h has sum c.
  RatMatrix a(m.cols + 1, k + 2);
  RationalVector b(m.cols + 1, 0);
  b[0] = 1;
  for (std::size_t f = 0; f < k; ++f) {
    a(0, f) = 1;
    for (auto h : m.rows[f].members()) a(1 + h, f) = 1;
  }
  for (std::size_t h = 0; h < m.cols; ++h) {
    a(1 + h, k) = -1;
    a(1 + h, k + 1) = 1;
  }
  LpResult lp = solve_standard_form(a, b, RationalVector(k + 2, 0));

  if (lp.status == LpStatus::kOptimal) {
    RationalVector lambda(lp.x.begin(), lp.x.begin() + static_cast<std::ptrdiff_t>(k));
    LambdaWitness w{primitive_integer_vector(lambda), 0};
    auto sums = m.column_sums(w.values);
    w.common_sum = sums.front();
    return w;
  }
  // Farkas ray: a^T y <= 0 and y_0 > 0 give, for delta = -y_H, a positive
  // sum on every row and total zero.
  RationalVector delta(m.cols);
  for (std::size_t h = 0; h < m.cols; ++h) delta[h] = -lp.y[1 + h];
  auto ints = primitive_integer_vector(delta);
  DeltaCertificate cert;
  for (auto& x : ints) cert.values.emplace_back(x);
  Rational total = 0;
  for (const auto& x : cert.values) total += x;
  for (const auto& row : m.rows) {
    Rational s = 0;
    for (auto h : row.members()) s += cert.values[h];
    if (s <= 0) throw Error("Farkas ray does not give a strict delta certificate");
  }
  if (total != 0) throw Error("Farkas ray does not give a zero-sum delta certificate");
  return cert;
}

Verdict verify_delta(const Arrangement& a, std::span<const Flat> resonant,
                     const DeltaCertificate& delta) {
  if (delta.values.size() != a.size()) {
    throw DomainError("delta has " + std::to_string(delta.values.size()) +
                      " entries for " + std::to_string(a.size()) + " hyperplanes");
  }
  Rational total = 0;
  for (const auto& v : delta.values) total += v;
  if (total != 0) return Verdict::reject("total sum " + to_string(total) + " is not zero");
  for (const auto& f : resonant) {
    if (!f.members.subset_of(a.all())) throw DomainError("resonant flat out of range");
    Rational s = 0;
    for (auto h : f.members.members()) s += delta.values[h];
    if (s <= 0) {
      std::string names;
      for (auto h : f.members.members()) names += (names.empty() ? "" : ",") + a.label(h);
      return Verdict::reject("flat {" + names + "} has sum " + to_string(s));
    }
  }
  return Verdict::accept();
}

Verdict verify_lambda(const IncidenceMatrix& m, const LambdaWitness& lambda) {
  if (lambda.values.size() != m.rows.size()) {
    throw DomainError("lambda has " + std::to_string(lambda.values.size()) +
                      " entries for " + std::to_string(m.rows.size()) + " flats");
  }
  bool nonzero = false;
  for (std::size_t i = 0; i < lambda.values.size(); ++i) {
    if (lambda.values[i] < 0) {
      return Verdict::reject("entry " + std::to_string(i + 1) + " is negative");
    }
    if (lambda.values[i] != 0) nonzero = true;
  }
  if (!nonzero) return Verdict::reject("lambda is identically zero");
  auto sums = m.column_sums(lambda.values);
  for (std::size_t h = 0; h < sums.size(); ++h) {
    if (sums[h] != lambda.common_sum) {
      return Verdict::reject("hyperplane " + std::to_string(h + 1) + " has sum " +
                             sums[h].get_str() + ", expected " +
                             lambda.common_sum.get_str());
    }
  }
  return Verdict::accept();
}

DeltaCertificate delta_for_hyperplane(const Arrangement& a, std::size_t h) {
  if (h >= a.size()) throw DomainError("hyperplane index out of range");
  if (a.size() < 2) throw DomainError("need at least two hyperplanes");
  DeltaCertificate d{RationalVector(a.size(), 1)};
  d.values[h] = 1 - static_cast<long>(a.size());
  return d;
}

}  // namespace rescert
