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

#ifndef RESCERT_ARRANGEMENT_HPP_
#define RESCERT_ARRANGEMENT_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "rescert/index_set.hpp"
#include "rescert/matrix.hpp"
#include "rescert/rational.hpp"

namespace rescert {

/// Projective hyperplane given by a linear form on C^{n+1}, normalized so
/// that its first nonzero coefficient is 1.
class Hyperplane {
 public:
  /// Throws InputError on the zero form.
  explicit Hyperplane(RationalVector coeffs);

  const RationalVector& coeffs() const { return coeffs_; }
  std::size_t ambient_size() const { return coeffs_.size(); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
  friend auto operator<=>(const Hyperplane& a, const Hyperplane& b) {
    return a.coeffs_ <=> b.coeffs_;
  }

 private:
  RationalVector coeffs_;
};

/// Scales a nonzero vector so that its first nonzero entry is 1. Returns
/// nullopt for the zero vector.
std::optional<RationalVector> normalize_projective(RationalVector v);

/// Finite set of distinct hyperplanes in P^n, in a fixed order.
class Arrangement {
 public:
  /// Throws InputError when n < 1, a form has the wrong length, two forms
  /// are proportional, or more than kMaxHyperplanes are given. Labels
  /// default to H1, H2, ...
  Arrangement(std::size_t ambient_dim, std::vector<Hyperplane> hyperplanes,
              std::vector<std::string> labels = {});

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return hyperplanes_.size(); }
  const Hyperplane& hyperplane(std::size_t i) const { return hyperplanes_.at(i); }
  const std::vector<Hyperplane>& hyperplanes() const { return hyperplanes_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  IndexSet all() const { return IndexSet::range(size()); }

  /// Index of the hyperplane with the given label; throws InputError.
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find(const Hyperplane& h) const;

  /// Coefficient matrix whose rows are the forms of `members`.
  RatMatrix forms(IndexSet members) const;
  /// r(S) = codim Z(S); equals n+1 when Z(S) is empty.
  std::size_t rank(IndexSet members) const;

  friend bool operator==(const Arrangement&, const Arrangement&) = default;

 private:
  std::size_t ambient_dim_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<std::string> labels_;
};

}  // namespace rescert

#endif  // RESCERT_ARRANGEMENT_HPP_
