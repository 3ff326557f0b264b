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

#include "rescert/lattice.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <unordered_set>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {
namespace {

// Reduces `v` against a reduced row echelon basis.
RationalVector reduce(const RatMatrix& echelon, const std::vector<std::size_t>& pivots,
                      std::span<const Rational> v) {
  RationalVector w(v.begin(), v.end());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (w[pivots[r]] == 0) continue;
    Rational f = w[pivots[r]];
    for (std::size_t k = 0; k < w.size(); ++k) w[k] -= f * echelon(r, k);
  }
  return w;
}

bool is_zero_vector(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

bool flat_less(const Flat& a, const Flat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.members.members() < b.members.members();
}

IntersectionLattice::IntersectionLattice(std::vector<Flat> flats)
    : flats_(std::move(flats)) {
  std::sort(flats_.begin(), flats_.end(), flat_less);
  std::size_t top = 0;
  for (const auto& f : flats_) top = std::max(top, f.rank);
  by_rank_.resize(top + 1);
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    by_rank_[flats_[i].rank].push_back(flats_[i]);
    index_.emplace(flats_[i].members, i);
  }
}

const Flat& IntersectionLattice::at(IndexSet members) const {
  auto it = index_.find(members);
  if (it == index_.end()) throw DomainError("index set is not a flat of the lattice");
  return flats_[it->second];
}

Flat closure(const Arrangement& a, IndexSet members) {
  if (!members.subset_of(a.all())) throw DomainError("index out of range in closure");
  if (members.empty()) return Flat{};
  std::vector<std::size_t> pivots;
  RatMatrix e = row_echelon(a.forms(members), &pivots);
  Flat f{members, pivots.size()};
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.members.contains(i)) continue;
    if (is_zero_vector(reduce(e, pivots, a.hyperplane(i).coeffs()))) f.members.insert(i);
  }
  return f;
}

bool is_flat(const Arrangement& a, IndexSet members) {
  return closure(a, members).members == members;
}

IntersectionLattice enumerate_lattice(const Arrangement& a) {
  std::vector<Flat> flats{Flat{}};
  std::unordered_set<IndexSet> seen{IndexSet{}};
  std::deque<Flat> queue;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Flat f = closure(a, IndexSet{i});
    if (seen.insert(f.members).second) {
      flats.push_back(f);
      queue.push_back(f);
    }
  }
  while (!queue.empty()) {
    Flat f = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (f.members.contains(i)) continue;
      IndexSet u = f.members;
      u.insert(i);
      Flat g = closure(a, u);
      if (seen.insert(g.members).second) {
        flats.push_back(g);
        queue.push_back(g);
      }
    }
  }
  return IntersectionLattice(std::move(flats));
}

std::vector<Flat> irreducible_decomposition(const Arrangement& a, const Flat& f) {
  if (f.members.empty()) throw DomainError("irreducible decomposition of the empty flat");
  const auto members = f.members.members();
  const std::size_t width = a.ambient_dim() + 1;

  // Greedy basis in index order.
  std::vector<std::size_t> basis;
  RatMatrix basis_rows(0, width);
  for (auto i : members) {
    RatMatrix trial = basis_rows;
    trial.append_row(a.hyperplane(i).coeffs());
    if (rat_rank(trial) > basis.size()) {
      basis.push_back(i);
      basis_rows = std::move(trial);
    }
  }

  // Solve basis^T c = v for each non-basis member; the support of c plus the
  // member itself is its fundamental circuit.
  DisjointSets sets(a.size());
  for (auto e : members) {
    if (std::find(basis.begin(), basis.end(), e) != basis.end()) continue;
    RatMatrix augmented(width, basis.size() + 1);
    for (std::size_t r = 0; r < width; ++r) {
      for (std::size_t b = 0; b < basis.size(); ++b) {
        augmented(r, b) = a.hyperplane(basis[b]).coeffs()[r];
      }
      augmented(r, basis.size()) = a.hyperplane(e).coeffs()[r];
    }
    std::vector<std::size_t> pivots;
    RatMatrix ech = row_echelon(augmented, &pivots);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (pivots[r] >= basis.size()) throw Error("member outside the span of its flat");
      if (ech(r, basis.size()) != 0) sets.unite(e, basis[pivots[r]]);
    }
  }

  std::vector<Flat> components;
  std::vector<IndexSet> groups(a.size());
  for (auto i : members) groups[sets.find(i)].insert(i);
  for (auto i : members) {
    if (sets.find(i) != i) continue;
    components.push_back(Flat{groups[i], a.rank(groups[i])});
  }
  return components;
}

bool is_irreducible(const Arrangement& a, const Flat& f) {
  return !f.members.empty() && irreducible_decomposition(a, f).size() == 1;
}

std::vector<Flat> irreducible_flats(const Arrangement& a,
                                    const IntersectionLattice& lattice) {
  std::vector<Flat> out;
  for (const auto& f : lattice.flats()) {
    if (!f.members.empty() && is_irreducible(a, f)) out.push_back(f);
  }
  return out;
}

Arrangement localization(const Arrangement& a, const Flat& f) {
  if (f.members.empty()) throw DomainError("localization at the empty flat");
  std::vector<std::size_t> pivots;
  row_echelon(a.forms(f.members), &pivots);
  std::vector<Hyperplane> local;
  std::vector<std::string> labels;
  for (auto i : f.members.members()) {
    RationalVector coords;
    for (auto p : pivots) coords.push_back(a.hyperplane(i).coeffs()[p]);
    Hyperplane h(std::move(coords));
    if (std::find(local.begin(), local.end(), h) != local.end()) continue;
    local.push_back(std::move(h));
    labels.push_back(a.label(i));
  }
  return Arrangement(pivots.size() - 1, std::move(local), std::move(labels));
}

Restriction restriction(const Arrangement& a, const Flat& f) {
  if (f.members.empty()) throw DomainError("restriction to the empty flat");
  const std::size_t r = a.rank(f.members);
  if (r > a.ambient_dim()) {
    throw DomainError("restriction to a flat of rank " + std::to_string(r) +
                      " > " + std::to_string(a.ambient_dim()) + " (empty intersection)");
  }
  auto basis = nullspace(a.forms(f.members));
  const std::size_t dim = basis.size() - 1;
  Restriction out{Arrangement(dim, {}), {}};
  if (dim == 0) return out;
  std::vector<Hyperplane> planes;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (f.members.contains(i)) continue;
    RationalVector coords;
    for (const auto& v : basis) coords.push_back(dot(a.hyperplane(i).coeffs(), v));
    Hyperplane h(std::move(coords));
    auto it = std::find(planes.begin(), planes.end(), h);
    if (it != planes.end()) {
      labels[static_cast<std::size_t>(it - planes.begin())] += "+" + a.label(i);
      continue;
    }
    planes.push_back(std::move(h));
    labels.push_back(a.label(i));
    IndexSet g = f.members;
    g.insert(i);
    out.tags.push_back(closure(a, g));
  }
  out.arrangement = Arrangement(dim, std::move(planes), std::move(labels));
  return out;
}

std::vector<long long> poincare_polynomial(const IntersectionLattice& lattice) {
  const auto& flats = lattice.flats();
  std::vector<long long> mobius(flats.size(), 0);
  std::vector<long long> central(lattice.max_rank() + 1, 0);
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (flats[i].members.empty()) {
      mobius[i] = 1;
    } else {
      long long s = 0;
      for (std::size_t j = 0; j < i; ++j) {
        if (flats[j].rank < flats[i].rank && flats[j].members.subset_of(flats[i].members)) {
          s += mobius[j];
        }
      }
      mobius[i] = -s;
    }
    long long sign = flats[i].rank % 2 == 0 ? 1 : -1;
    central[flats[i].rank] += sign * mobius[i];
  }
  // The central complement is C^* times the projective one: divide by 1 + t.
  std::vector<long long> projective(central.size() - 1, 0);
  long long carry = 0;
  for (std::size_t i = 0; i + 1 < central.size(); ++i) {
    projective[i] = central[i] - carry;
    carry = projective[i];
  }
  if (central.back() != carry) throw Error("Poincare polynomial not divisible by 1 + t");
  return projective;
}

std::vector<long long> poincare_polynomial(const Arrangement& a) {
  return poincare_polynomial(enumerate_lattice(a));
}

long long euler_characteristic(const Arrangement& a) {
  long long chi = 0, sign = 1;
  for (auto c : poincare_polynomial(a)) {
    chi += sign * c;
    sign = -sign;
  }
  return chi;
}

}  // namespace rescert
