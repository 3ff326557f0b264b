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

#include "rescert/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "rescert/error.hpp"
#include "rescert/index_set.hpp"
#include "rescert/lattice.hpp"

namespace rescert {
namespace {

struct Line {
  Rational a, b, c;  // a x + b y + c = 0
};

using Point = std::pair<Rational, Rational>;

std::vector<Line> affine_lines(const AffineArrangement& affine) {
  if (affine.dim != 2) {
    throw DomainError("wiring diagrams need an affine line arrangement, got dimension " +
                      std::to_string(affine.dim));
  }
  std::vector<Line> lines;
  for (const auto& h : affine.hyperplanes) {
    lines.push_back({h.coeffs.at(0), h.coeffs.at(1), h.constant});
  }
  return lines;
}

// Multiple points with the lines through them, in exact coordinates.
std::map<Point, IndexSet> multiple_points(const std::vector<Line>& lines) {
  std::map<Point, IndexSet> points;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const Line& p = lines[i];
      const Line& q = lines[j];
      Rational det = p.a * q.b - q.a * p.b;
      if (det == 0) continue;
      Point pt{Rational((p.b * q.c - q.b * p.c) / det), Rational((p.c * q.a - q.c * p.a) / det)};
      auto& members = points[pt];
      members.insert(i);
      members.insert(j);
    }
  }
  return points;
}

std::vector<Rational> shear_candidates() {
  std::vector<Rational> out{Rational(0)};
  for (long t = 1; t <= 64; ++t) {
    for (Rational s : {Rational(t), Rational(1, t + 1), Rational(t + 1)}) {
      s.canonicalize();
      for (const Rational& v : {s, Rational(-s)}) {
        if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
      }
    }
  }
  return out;
}

bool shear_usable(const std::vector<Line>& lines, const std::map<Point, IndexSet>& points,
                  const Rational& s) {
  for (const auto& l : lines) {
    if (l.b - l.a * s == 0) return false;
  }
  std::vector<Rational> sweeps;
  for (const auto& [pt, members] : points) sweeps.emplace_back(pt.first + s * pt.second);
  std::sort(sweeps.begin(), sweeps.end());
  return std::adjacent_find(sweeps.begin(), sweeps.end()) == sweeps.end();
}

Word commutator(const Word& u, const Word& v) {
  return free_reduce(concat(concat(u, v), concat(inverse_word(u), inverse_word(v))));
}

long long mod(long long x, long long n) { return ((x % n) + n) % n; }

}  // namespace

WiringDiagram wiring_diagram(const AffineArrangement& affine, std::optional<Rational> shear) {
  const auto lines = affine_lines(affine);
  const auto points = multiple_points(lines);

  if (shear) {
    if (!shear_usable(lines, points, *shear)) {
      throw DomainError("shear " + to_string(*shear) +
                        " leaves a vertical line or two vertices on one sweep line");
    }
  } else {
    for (const auto& s : shear_candidates()) {
      if (shear_usable(lines, points, s)) {
        shear = s;
        break;
      }
    }
    if (!shear) throw Error("no usable shear among the candidates");
  }
  const Rational s = *shear;

  WiringDiagram w;
  w.shear = s;
  w.wires.resize(lines.size());
  std::iota(w.wires.begin(), w.wires.end(), std::size_t{0});
  auto slope = [&](std::size_t i) {
    return Rational(-lines[i].a / (lines[i].b - lines[i].a * s));
  };
  auto intercept = [&](std::size_t i) {
    return Rational(-lines[i].c / (lines[i].b - lines[i].a * s));
  };
  // Far to the left the smallest slope is highest; parallel wires by height.
  std::sort(w.wires.begin(), w.wires.end(), [&](std::size_t i, std::size_t j) {
    Rational si = slope(i), sj = slope(j);
    if (si != sj) return si < sj;
    return intercept(i) > intercept(j);
  });

  std::vector<std::pair<Rational, IndexSet>> sweep;
  for (const auto& [pt, members] : points) {
    sweep.emplace_back(pt.first + s * pt.second, members);
  }
  std::sort(sweep.begin(), sweep.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });

  std::vector<std::size_t> order = w.wires;
  for (const auto& [u, members] : sweep) {
    std::vector<std::size_t> pos;
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (members.contains(order[p])) pos.push_back(p);
    }
    const std::size_t start = pos.front();
    const std::size_t k = pos.size();
    if (pos.back() - start + 1 != k) {
      throw Error("wires of the vertex at sweep " + to_string(u) + " are not consecutive");
    }
    std::reverse(order.begin() + start, order.begin() + start + k);
    w.vertices.push_back({start, k, u});
  }
  return w;
}

Word free_reduce(const Word& w) {
  Word out;
  for (int x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GroupPresentation presentation(const WiringDiagram& w) {
  GroupPresentation p;
  p.generators = w.wires.size();
  p.generator_lines = w.wires;
  std::vector<Word> words(p.generators);
  for (std::size_t i = 0; i < p.generators; ++i) words[i] = {static_cast<int>(i) + 1};

  for (const auto& v : w.vertices) {
    const std::size_t k = v.multiplicity;
    std::vector<Word> local(words.begin() + v.start, words.begin() + v.start + k);
    Word total;
    for (const auto& a : local) total = free_reduce(concat(total, a));
    for (std::size_t j = 0; j + 1 < k; ++j) p.relators.push_back(commutator(total, local[j]));

    Word prefix;
    for (std::size_t j = 0; j < k; ++j) {
      words[v.start + k - 1 - j] =
          free_reduce(concat(concat(prefix, local[j]), inverse_word(prefix)));
      prefix = free_reduce(concat(prefix, local[j]));
    }
  }
  return p;
}

CycloElement ScalarRepresentation::image(const Word& w) const {
  long long e = 0;
  for (int x : w) {
    const long long g = exponents.at(static_cast<std::size_t>(std::abs(x)) - 1);
    e += x > 0 ? g : -g;
  }
  return CycloElement::zeta_power(level, e);
}

CycloMatrix fox_jacobian(const GroupPresentation& p, const ScalarRepresentation& rho) {
  const long long n = rho.level;
  CycloMatrix jac;
  for (const auto& r : p.relators) {
    // Group-ring coefficients in Z[Z/N] per generator.
    std::vector<std::vector<long long>> acc(p.generators, std::vector<long long>(n, 0));
    long long prefix = 0;
    for (int x : r) {
      const std::size_t j = static_cast<std::size_t>(std::abs(x)) - 1;
      const long long e = rho.exponents.at(j);
      if (x > 0) {
        acc[j][mod(prefix, n)] += 1;
        prefix += e;
      } else {
        prefix -= e;
        acc[j][mod(prefix, n)] -= 1;
      }
    }
    std::vector<CycloElement> row;
    for (const auto& coeffs : acc) {
      std::vector<Rational> poly;
      for (long long c : coeffs) poly.emplace_back(static_cast<long>(c));
      row.push_back(CycloElement::from_polynomial(rho.level, std::move(poly)));
    }
    jac.push_back(std::move(row));
  }
  return jac;
}

std::vector<CycloElement> boundary_column(const ScalarRepresentation& rho) {
  std::vector<CycloElement> col;
  for (long long e : rho.exponents) {
    col.push_back(CycloElement::zeta_power(rho.level, e) - CycloElement(rho.level, 1));
  }
  return col;
}

bool chain_condition_holds(const CycloMatrix& jacobian, const ScalarRepresentation& rho) {
  const auto d1 = boundary_column(rho);
  for (const auto& row : jacobian) {
    CycloElement sum(rho.level);
    for (std::size_t j = 0; j < row.size(); ++j) sum += row[j] * d1.at(j);
    if (!sum.is_zero()) return false;
  }
  return true;
}

std::size_t twisted_h1(const GroupPresentation& p, const ScalarRepresentation& rho) {
  const auto d1 = boundary_column(rho);
  const std::size_t rank_d1 =
      std::any_of(d1.begin(), d1.end(), [](const CycloElement& x) { return !x.is_zero(); });
  const std::size_t rank_j = cyclo_rank(fox_jacobian(p, rho), rho.level);
  return p.generators - rank_d1 - rank_j;
}

CohomologyDims twisted_cohomology(const Arrangement& a, const MonodromyMap& m,
                                  std::size_t decone_at, const OracleOptions& options) {
  check_compatible(a, m);
  if (a.ambient_dim() != 2) {
    throw DomainError("the cohomology oracle handles line arrangements only, got n = " +
                      std::to_string(a.ambient_dim()));
  }
  const Integer order = m.order();
  if (order > kMaxCyclotomicLevel) {
    throw DomainError("exponent denominators have lcm " + order.get_str() + " > " +
                      std::to_string(kMaxCyclotomicLevel));
  }
  const unsigned level = static_cast<unsigned>(order.get_ui());

  const AffineArrangement affine = decone(a, decone_at);
  const WiringDiagram w = wiring_diagram(affine, options.shear);
  const GroupPresentation p = presentation(w);

  ScalarRepresentation rho{level, {}};
  for (std::size_t line : p.generator_lines) {
    const Rational k = m.exponent(affine.hyperplanes[line].source) * level;
    rho.exponents.push_back(-k.get_num().get_si());
  }
  if (!chain_condition_holds(fox_jacobian(p, rho), rho)) {
    throw Error("Fox Jacobian violates the chain condition");
  }

  CohomologyDims out;
  out.h0 = m.is_trivial() ? 1 : 0;
  out.h1 = twisted_h1(p, rho);
  out.chi = euler_characteristic(a);
  const long long h2 = out.chi + static_cast<long long>(out.h1) - static_cast<long long>(out.h0);
  if (h2 < 0) throw Error("negative h2 from the Euler characteristic");
  out.h2 = static_cast<std::size_t>(h2);
  out.decone_at = decone_at;
  out.generators = p.generators;
  out.relators = p.relators.size();
  out.shear = w.shear;
  return out;
}

}  // namespace rescert
