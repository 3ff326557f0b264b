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

#ifndef RESCERT_MATRIX_HPP_
#define RESCERT_MATRIX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "rescert/rational.hpp"

namespace rescert {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix from_rows(std::span<const RationalVector> rows,
                             std::size_t cols);
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  void append_row(std::span<const Rational> row);

  RationalVector multiply(std::span<const Rational> x) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank over Q by fraction-free (Bareiss) elimination on the integer
/// matrix obtained by clearing row denominators. Pivot: first nonzero entry
/// in column order.
std::size_t rat_rank(const RatMatrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row. Rows of the result beyond pivots.size() are zero and dropped.
RatMatrix row_echelon(const RatMatrix& m, std::vector<std::size_t>* pivots);

/// Basis of {x : Mx = 0}, one vector per free column of the echelon form.
std::vector<RationalVector> nullspace(const RatMatrix& m);

/// True when `v` lies in the row space of `m`.
bool in_row_space(const RatMatrix& m, std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace rescert

#endif  // RESCERT_MATRIX_HPP_
