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

#include "rescert/simplex.hpp"

#include <optional>
#include <vector>

#include "rescert/error.hpp"

namespace rescert {
namespace {

class Tableau {
 public:
  Tableau(const RatMatrix& a, const RationalVector& b)
      : m_(a.rows()), n_(a.cols()), width_(n_ + m_ + 1), t_(m_ * width_),
        sign_(m_, 1), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      if (b[i] < 0) sign_[i] = -1;
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = sign_[i] * a(i, j);
      at(i, n_ + i) = 1;
      rhs(i) = sign_[i] * b[i];
      basis_[i] = n_ + i;
    }
    z_.assign(width_, 0);
  }

  Rational& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  Rational& rhs(std::size_t i) { return at(i, width_ - 1); }

  // Installs reduced costs for the cost vector `cost` over all columns.
  void set_objective(const RationalVector& cost) {
    for (std::size_t j = 0; j + 1 < width_; ++j) {
      Rational r = cost[j];
      for (std::size_t i = 0; i < m_; ++i) r -= cost[basis_[i]] * at(i, j);
      z_[j] = r;
    }
    Rational obj = 0;
    for (std::size_t i = 0; i < m_; ++i) obj += cost[basis_[i]] * rhs(i);
    z_[width_ - 1] = -obj;
  }

  Rational objective() const { return -z_[width_ - 1]; }

  // Bland iterations over columns [0, limit). Returns false when unbounded.
  bool optimize(std::size_t limit, std::size_t& pivots) {
    for (;;) {
      std::optional<std::size_t> enter;
      for (std::size_t j = 0; j < limit; ++j) {
        if (z_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, *enter) <= 0) continue;
        Rational ratio = rhs(i) / at(i, *enter);
        if (!leave || ratio < best || (ratio == best && basis_[i] < basis_[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
      ++pivots;
    }
  }

  void pivot(std::size_t p, std::size_t q) {
    Rational inv = 1 / at(p, q);
    for (std::size_t k = 0; k < width_; ++k) at(p, k) *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == p || at(i, q) == 0) continue;
      Rational f = at(i, q);
      for (std::size_t k = 0; k < width_; ++k) {
        if (at(p, k) != 0) at(i, k) -= f * at(p, k);
      }
    }
    if (z_[q] != 0) {
      Rational f = z_[q];
      for (std::size_t k = 0; k < width_; ++k) {
        if (at(p, k) != 0) z_[k] -= f * at(p, k);
      }
    }
    basis_[p] = q;
  }

  // Pivots basic artificials out on any nonzero structural entry; rows with
  // none are redundant and keep their artificial at level zero.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (at(i, j) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  RationalVector primal() {
    RationalVector x(n_, 0);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs(i);
    }
    return x;
  }

  // y_i = c_{a_i} - reduced cost of artificial i, mapped back through the
  // row signs.
  RationalVector duals(const Rational& artificial_cost) {
    RationalVector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      y[i] = sign_[i] * (artificial_cost - z_[n_ + i]);
    }
    return y;
  }

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }

 private:
  std::size_t m_, n_, width_;
  std::vector<Rational> t_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  RationalVector z_;
};

}  // namespace

LpResult solve_standard_form(const RatMatrix& a, const RationalVector& b,
                             const RationalVector& c) {
  if (b.size() != a.rows() || c.size() != a.cols()) {
    throw DomainError("LP dimensions do not match");
  }
  const std::size_t m = a.rows(), n = a.cols();
  Tableau t(a, b);
  LpResult result;

  RationalVector phase_one(n + m, 0);
  for (std::size_t i = 0; i < m; ++i) phase_one[n + i] = 1;
  t.set_objective(phase_one);
  t.optimize(n + m, result.pivots);
  if (t.objective() > 0) {
    result.status = LpStatus::kInfeasible;
    result.y = t.duals(1);
    return result;
  }

  t.drive_out_artificials();
  RationalVector phase_two(n + m, 0);
  for (std::size_t j = 0; j < n; ++j) phase_two[j] = c[j];
  t.set_objective(phase_two);
  if (!t.optimize(n, result.pivots)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.x = t.primal();
  result.y = t.duals(0);
  result.objective = t.objective();
  return result;
}

}  // namespace rescert
