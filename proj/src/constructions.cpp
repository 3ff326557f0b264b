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

#include "rescert/constructions.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {
namespace {

class CoefficientSampler {
 public:
  CoefficientSampler(const RandomSearch& search, std::uint64_t seed)
      : search_(search), rng_(seed), bound_(search.initial_bound) {}

  bool exhausted() const { return attempts_ >= search_.max_attempts; }
  int attempts() const { return attempts_; }

  // Starts a new attempt, doubling the bound every attempts_per_bound tries.
  void next_attempt() {
    if (attempts_ > 0 && attempts_ % search_.attempts_per_bound == 0) bound_ *= 2;
    ++attempts_;
  }

  Rational draw() {
    std::uniform_int_distribution<long> dist(-bound_, bound_);
    return Rational(dist(rng_));
  }

 private:
  RandomSearch search_;
  std::mt19937_64 rng_;
  long bound_;
  int attempts_ = 0;
};

// Row-reduced spanning set of V(F1) + V(F2).
struct SubspaceSum {
  IndexSet f1, f2;
  RatMatrix span;
  std::size_t dim = 0;
};

RatMatrix stack_nullspaces(const Arrangement& a, IndexSet f1, IndexSet f2) {
  RatMatrix m(0, a.ambient_dim() + 1);
  for (IndexSet f : {f1, f2}) {
    if (f.empty()) return RatMatrix::identity(a.ambient_dim() + 1);
    for (const auto& v : nullspace(a.forms(f))) m.append_row(v);
  }
  return m;
}

std::string names(const Arrangement& a, IndexSet s) {
  std::string out;
  for (auto i : s.members()) out += (out.empty() ? "" : ",") + a.label(i);
  return "{" + out + "}";
}

// Flats of the subarrangement on `part`, as index sets of `a`.
std::vector<IndexSet> part_flats(const Arrangement& a, IndexSet part) {
  if (part.empty()) return {IndexSet{}};
  auto idx = part.members();
  std::vector<Hyperplane> planes;
  for (auto i : idx) planes.push_back(a.hyperplane(i));
  Arrangement sub(a.ambient_dim(), std::move(planes));
  const auto lattice = enumerate_lattice(sub);
  std::vector<IndexSet> out;
  for (const auto& f : lattice.flats()) {
    IndexSet mapped;
    for (auto k : f.members.members()) mapped.insert(idx[k]);
    out.push_back(mapped);
  }
  return out;
}

}  // namespace

std::uint64_t derive_seed(const Arrangement& a, std::uint64_t salt) {
  // FNV-1a over the canonical coefficient strings.
  std::uint64_t h = 0xcbf29ce484222325ULL ^ salt;
  auto mix = [&h](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xff;
    h *= 0x100000001b3ULL;
  };
  mix(std::to_string(a.ambient_dim()));
  for (const auto& hp : a.hyperplanes()) {
    for (const auto& c : hp.coeffs()) mix(to_string(c));
  }
  return h;
}

RationalVector lifted_form(const Arrangement& a, const Bipartition& b,
                           const RationalVector& direction, std::size_t h) {
  RationalVector form = a.hyperplane(h).coeffs();
  form.push_back(b.part2.contains(h) ? Rational(-dot(form, direction)) : Rational(0));
  return form;
}

LiftedArrangement lift_bipartition(const Arrangement& a, const Bipartition& b,
                                   const RandomSearch& search) {
  b.validate(a.size(), /*allow_empty=*/true);
  const std::size_t width = a.ambient_dim() + 1;

  std::vector<SubspaceSum> proper;
  auto flats1 = part_flats(a, b.part1);
  auto flats2 = part_flats(a, b.part2);
  for (auto f1 : flats1) {
    for (auto f2 : flats2) {
      if (f1.empty() || f2.empty()) continue;
      RatMatrix span = row_echelon(stack_nullspaces(a, f1, f2), nullptr);
      if (span.rows() < width) proper.push_back({f1, f2, span, span.rows()});
    }
  }

  const std::uint64_t seed = search.seed.value_or(derive_seed(a, 0x6c696674));
  CoefficientSampler sampler(search, seed);
  std::string violation = "none";
  while (!sampler.exhausted()) {
    sampler.next_attempt();
    RationalVector z(width);
    for (auto& x : z) x = sampler.draw();
    auto bad = std::find_if(proper.begin(), proper.end(), [&](const SubspaceSum& s) {
      return in_row_space(s.span, z);
    });
    if (bad != proper.end()) {
      violation = names(a, bad->f1) + " / " + names(a, bad->f2);
      continue;
    }
    std::vector<Hyperplane> planes;
    for (std::size_t h = 0; h < a.size(); ++h) {
      planes.emplace_back(lifted_form(a, b, z, h));
    }
    return LiftedArrangement{a,
                             Arrangement(a.ambient_dim() + 1, std::move(planes), a.labels()),
                             b, std::move(z), seed, sampler.attempts()};
  }
  throw RetryBudgetExhausted("no generic lifting direction found; last violating pair " +
                             violation);
}

GenericSection generic_section(const Arrangement& a, const Flat& i,
                               const RandomSearch& search) {
  if (!is_flat(a, i.members) || !is_irreducible(a, i)) {
    throw DomainError(names(a, i.members) + " is not an irreducible flat");
  }
  const std::size_t rank = a.rank(i.members);
  if (rank < 2) throw DomainError("generic section needs a flat of rank >= 2");

  RatMatrix basis = row_echelon(a.forms(i.members), nullptr);
  auto lattice = enumerate_lattice(a);
  const std::uint64_t seed = search.seed.value_or(derive_seed(a, 0x73656374 ^ i.members.mask()));
  CoefficientSampler sampler(search, seed);
  while (!sampler.exhausted()) {
    sampler.next_attempt();
    RationalVector form(a.ambient_dim() + 1, 0);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
      Rational c = sampler.draw();
      for (std::size_t k = 0; k < form.size(); ++k) form[k] += c * basis(r, k);
    }
    auto normalized = normalize_projective(std::move(form));
    if (!normalized) continue;
    Hyperplane h0(std::move(*normalized));
    if (a.find(h0)) continue;
    bool good = std::all_of(lattice.flats().begin(), lattice.flats().end(), [&](const Flat& f) {
      bool inside = !f.members.empty() && in_row_space(a.forms(f.members), h0.coeffs());
      return inside == i.members.subset_of(f.members);
    });
    if (good) return GenericSection{std::move(h0), seed, sampler.attempts()};
  }
  throw RetryBudgetExhausted("no generic section through " + names(a, i.members) + " found");
}

SectionArrangement section_arrangement(const Arrangement& a, const Hyperplane& h0) {
  if (a.find(h0)) throw DomainError("section hyperplane belongs to the arrangement");
  std::vector<Hyperplane> planes = a.hyperplanes();
  planes.push_back(h0);
  std::vector<std::string> labels = a.labels();
  std::string extra = "H0";
  while (std::find(labels.begin(), labels.end(), extra) != labels.end()) extra += "'";
  labels.push_back(extra);
  Arrangement augmented(a.ambient_dim(), std::move(planes), std::move(labels));
  const std::size_t h0_index = a.size();
  auto res = restriction(augmented, Flat{IndexSet{h0_index}, 1});
  SectionArrangement out{std::move(res.arrangement), {}};
  for (const auto& tag : res.tags) {
    IndexSet src = tag.members;
    src.erase(h0_index);
    out.sources.push_back(src);
  }
  return out;
}

MonodromyMap section_monodromy(const SectionArrangement& s, const MonodromyMap& m) {
  RationalVector q;
  for (auto src : s.sources) q.push_back(monodromy_of_flat(m, src));
  return MonodromyMap(std::move(q));
}

AffineArrangement decone(const Arrangement& a, std::size_t h_inf) {
  if (h_inf >= a.size()) {
    throw DomainError("decone index " + std::to_string(h_inf + 1) + " out of range (" +
                      std::to_string(a.size()) + " hyperplanes)");
  }
  const auto& inf = a.hyperplane(h_inf).coeffs();
  const std::size_t p = static_cast<std::size_t>(
      std::find_if(inf.begin(), inf.end(), [](const Rational& x) { return x != 0; }) -
      inf.begin());
  AffineArrangement out;
  out.dim = a.ambient_dim();
  out.deleted = h_inf;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (h == h_inf) continue;
    const auto& l = a.hyperplane(h).coeffs();
    // l = sum_{j != p} (l_j - l_p inf_j) e_j + l_p l_inf, with inf_p = 1.
    AffineHyperplane ah;
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (j != p) ah.coeffs.push_back(l[j] - l[p] * inf[j]);
    }
    ah.constant = l[p];
    ah.source = h;
    out.hyperplanes.push_back(std::move(ah));
  }
  return out;
}

Arrangement recone(const AffineArrangement& affine) {
  std::vector<Hyperplane> planes;
  std::vector<std::string> labels;
  const std::size_t total = affine.hyperplanes.size() + 1;
  std::size_t next = 0;
  for (std::size_t h = 0; h < total; ++h) {
    RationalVector form;
    if (h == affine.deleted) {
      form.assign(affine.dim + 1, 0);
      form.back() = 1;
    } else {
      const auto& ah = affine.hyperplanes.at(next++);
      form = ah.coeffs;
      form.push_back(ah.constant);
    }
    planes.emplace_back(std::move(form));
    labels.push_back("H" + std::to_string(h + 1));
  }
  return Arrangement(affine.dim, std::move(planes), std::move(labels));
}

}  // namespace rescert
