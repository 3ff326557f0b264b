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

#include "rescert/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {
namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPolynomial divide_exact(IntPolynomial num, const IntPolynomial& den) {
  // den is monic.
  const std::size_t dn = den.size() - 1;
  IntPolynomial q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    Integer c = num[i];
    if (c == 0) continue;
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t i = 0; i < dn; ++i) {
    if (num[i] != 0) throw Error("cyclotomic division is not exact");
  }
  return q;
}

struct Cache {
  std::mutex mu;
  std::map<unsigned, IntPolynomial> polys;
};

Cache& cache() {
  static Cache c;
  return c;
}

IntPolynomial compute_cyclotomic(unsigned n) {
  IntPolynomial p(n + 1, 0);
  p[0] = -1;
  p[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  }
  return p;
}

// Remainder of `p` modulo the monic modulus, in place.
void reduce_mod(RatPoly& p, const IntPolynomial& modulus) {
  const std::size_t dn = modulus.size() - 1;
  for (std::size_t i = p.size(); i-- > dn;) {
    if (p[i] == 0) continue;
    Rational c = p[i];
    for (std::size_t j = 0; j <= dn; ++j) p[i - dn + j] -= c * modulus[j];
  }
  p.resize(dn);
}

// Polynomial division over Q: a = q*b + r.
void poly_divmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  trim(r);
  q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
  const Rational lead_inv = 1 / b.back();
  while (!r.empty() && r.size() >= b.size()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() * lead_inv;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] -= c * b[j];
    trim(r);
  }
}

RatPoly poly_mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

RatPoly poly_sub(const RatPoly& a, const RatPoly& b) {
  RatPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

}  // namespace

IntPolynomial cyclotomic_polynomial(unsigned level) {
  if (level == 0) throw DomainError("cyclotomic level must be positive");
  {
    std::lock_guard lock(cache().mu);
    auto it = cache().polys.find(level);
    if (it != cache().polys.end()) return it->second;
  }
  IntPolynomial p = compute_cyclotomic(level);
  std::lock_guard lock(cache().mu);
  cache().polys.emplace(level, p);
  return p;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloElement::CycloElement(unsigned level)
    : level_(level), coeffs_(euler_phi(level), 0) {
  if (level == 0 || level > kMaxCyclotomicLevel) {
    throw DomainError("cyclotomic level out of range: " + std::to_string(level));
  }
}

CycloElement::CycloElement(unsigned level, const Rational& constant)
    : CycloElement(level) {
  coeffs_[0] = constant;
}

CycloElement CycloElement::zeta_power(unsigned level, long long k) {
  long long e = k % static_cast<long long>(level);
  if (e < 0) e += level;
  RatPoly p(static_cast<std::size_t>(e) + 1, 0);
  p[static_cast<std::size_t>(e)] = 1;
  return from_polynomial(level, std::move(p));
}

CycloElement CycloElement::from_polynomial(unsigned level,
                                           std::vector<Rational> coeffs) {
  CycloElement out(level);
  reduce_mod(coeffs, cyclotomic_polynomial(level));
  out.coeffs_ = std::move(coeffs);
  return out;
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

void CycloElement::check_level(const CycloElement& o) const {
  if (o.level_ != level_) {
    throw DomainError("mixed cyclotomic levels " + std::to_string(level_) +
                      " and " + std::to_string(o.level_));
  }
}

CycloElement CycloElement::operator+(const CycloElement& o) const {
  CycloElement r = *this;
  r += o;
  return r;
}

CycloElement CycloElement::operator-(const CycloElement& o) const {
  CycloElement r = *this;
  r -= o;
  return r;
}

CycloElement CycloElement::operator-() const {
  CycloElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloElement CycloElement::operator*(const CycloElement& o) const {
  check_level(o);
  return from_polynomial(level_, poly_mul(coeffs_, o.coeffs_));
}

CycloElement& CycloElement::operator+=(const CycloElement& o) {
  check_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator-=(const CycloElement& o) {
  check_level(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloElement& CycloElement::operator*=(const CycloElement& o) {
  *this = *this * o;
  return *this;
}

CycloElement CycloElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in cyclotomic field");
  // Extended Euclid on (Phi_N, a), tracking only the coefficient of a.
  const IntPolynomial& phi_int = cyclotomic_polynomial(level_);
  RatPoly r0(phi_int.begin(), phi_int.end());
  RatPoly r1 = coeffs_;
  trim(r1);
  RatPoly t0, t1{1};
  while (r1.size() > 1) {
    RatPoly q, r;
    poly_divmod(r0, r1, q, r);
    RatPoly t = poly_sub(t0, poly_mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  // r1 is a nonzero constant here.
  Rational c = 1 / r1[0];
  for (auto& x : t1) x *= c;
  return from_polynomial(level_, std::move(t1));
}

std::size_t cyclo_rank(const CycloMatrix& m, unsigned level) {
  if (m.empty()) return 0;
  CycloMatrix a = m;
  const std::size_t rows = a.size(), cols = a[0].size();
  for (const auto& row : a) {
    if (row.size() != cols) throw DomainError("ragged cyclotomic matrix");
    for (const auto& x : row) {
      if (x.level() != level) {
        throw DomainError("matrix entry of level " + std::to_string(x.level()) +
                          " in a level " + std::to_string(level) + " rank computation");
      }
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[rank], a[p]);
    CycloElement inv = a[rank][c].inverse();
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c].is_zero()) continue;
      CycloElement f = a[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace rescert
