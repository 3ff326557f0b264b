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

#include "rescert/matrix.hpp"

#include <algorithm>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::from_rows(std::span<const RationalVector> rows,
                               std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void RatMatrix::append_row(std::span<const Rational> row) {
  if (row.size() != cols_) throw DomainError("row length does not match matrix");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

RationalVector RatMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != cols_) throw DomainError("vector length does not match matrix");
  RationalVector y(rows_);
  for (std::size_t r = 0; r < rows_; ++r) y[r] = dot(row(r), x);
  return y;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t rat_rank(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Clear denominators row by row; row scaling preserves rank.
  std::vector<std::vector<Integer>> a(rows, std::vector<Integer>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    Integer l = common_denominator(m.row(r));
    for (std::size_t c = 0; c < cols; ++c) {
      a[r][c] = Rational(m(r, c) * l).get_num();
    }
  }
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]);
        mpz_divexact(a[r][k].get_mpz_t(), a[r][k].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

RatMatrix row_echelon(const RatMatrix& m, std::vector<std::size_t>* pivots) {
  RatMatrix a = m;
  std::vector<std::size_t> piv;
  std::size_t rank = 0;
  const std::size_t rows = a.rows(), cols = a.cols();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(p, k), a(rank, k));
    }
    Rational inv = 1 / a(rank, c);
    for (std::size_t k = c; k < cols; ++k) a(rank, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a(r, c) == 0) continue;
      Rational f = a(r, c);
      for (std::size_t k = c; k < cols; ++k) a(r, k) -= f * a(rank, k);
    }
    piv.push_back(c);
    ++rank;
  }
  RatMatrix out(0, cols);
  for (std::size_t r = 0; r < rank; ++r) out.append_row(a.row(r));
  if (pivots) *pivots = std::move(piv);
  return out;
}

std::vector<RationalVector> nullspace(const RatMatrix& m) {
  std::vector<std::size_t> pivots;
  RatMatrix e = row_echelon(m, &pivots);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -e(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_row_space(const RatMatrix& m, std::span<const Rational> v) {
  if (v.size() != m.cols()) throw DomainError("vector length does not match matrix");
  std::vector<std::size_t> pivots;
  RatMatrix e = row_echelon(m, &pivots);
  RationalVector w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (w[pivots[r]] == 0) continue;
    Rational f = w[pivots[r]];
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * e(r, k);
  }
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

}  // namespace rescert
