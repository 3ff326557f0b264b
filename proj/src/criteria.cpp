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

#include "rescert/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "rescert/error.hpp"

namespace rescert {
namespace {

std::string names(const Arrangement& a, IndexSet s) {
  std::string out;
  for (auto i : s.members()) out += (out.empty() ? "" : ",") + a.label(i);
  return "{" + out + "}";
}

void require_lines(const CriteriaContext& ctx, const char* what) {
  if (ctx.n() != 2) {
    throw DomainError(std::string(what) + " applies to line arrangements (n = 2)");
  }
}

CriterionResult fired(std::string name, std::size_t level, std::size_t n, Evidence e,
                      std::string detail = {}) {
  CriterionResult r;
  r.criterion = std::move(name);
  r.status = CriterionStatus::kFired;
  r.level = level;
  r.nonresonant = level == n;
  r.evidence = std::move(e);
  r.detail = std::move(detail);
  return r;
}

CriterionResult inconclusive(std::string name, std::string detail, Evidence e = {}) {
  CriterionResult r;
  r.criterion = std::move(name);
  r.status = CriterionStatus::kInconclusive;
  r.evidence = std::move(e);
  r.detail = std::move(detail);
  return r;
}

bool has_nontrivial_line(const MonodromyMap& m, IndexSet part) {
  for (auto i : part.members()) {
    if (!m.is_trivial_at(i)) return true;
  }
  return false;
}

}  // namespace

void Bipartition::validate(std::size_t size, bool allow_empty) const {
  if (part1.intersects(part2)) throw InputError("partition parts overlap");
  if ((part1 | part2) != IndexSet::range(size)) {
    throw InputError("partition does not cover the arrangement exactly");
  }
  if (!allow_empty && (part1.empty() || part2.empty())) {
    throw InputError("partition has an empty part");
  }
}

const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::kFired:
      return "fired";
    case CriterionStatus::kInconclusive:
      return "inconclusive";
    case CriterionStatus::kError:
      return "error";
  }
  return "error";
}

CriteriaContext::CriteriaContext(Arrangement a, MonodromyMap m)
    : a_(std::move(a)), m_(std::move(m)), lattice_(enumerate_lattice(a_)) {
  if (a_.size() == 0) throw InputError("arrangement is empty");
  check_compatible(a_, m_);
  resonant_ = resonant_flats(a_, m_, lattice_);
}

IncidenceMatrix CriteriaContext::incidence() const {
  return IncidenceMatrix::from_flats(a_.size(), resonant_);
}

CriterionResult check_cdo(const CriteriaContext& ctx) {
  const auto& a = ctx.arrangement();
  for (std::size_t h = 0; h < a.size(); ++h) {
    bool covered = std::any_of(ctx.resonant().begin(), ctx.resonant().end(),
                               [h](const Flat& f) { return f.members.contains(h); });
    if (!covered) {
      return fired("cdo", ctx.n(), ctx.n(), delta_for_hyperplane(a, h),
                   a.label(h) + " lies in no resonant flat");
    }
  }
  return inconclusive("cdo", "every hyperplane lies in a resonant flat");
}

CriterionResult check_lambda_criterion(const CriteriaContext& ctx) {
  auto result = decide_constant_combination(ctx.incidence());
  if (auto* delta = std::get_if<DeltaCertificate>(&result)) {
    return fired("lambda", ctx.n(), ctx.n(), *delta,
                 "no nonzero lambda has constant hyperplane sums");
  }
  return inconclusive("lambda", "constant-sum combination of resonant flats exists",
                      std::get<LambdaWitness>(result));
}

CriterionResult check_unique_resonant_point(const CriteriaContext& ctx) {
  require_lines(ctx, "unique resonant point criterion");
  const auto& a = ctx.arrangement();
  const auto& m = ctx.monodromy();
  const auto& rf = ctx.resonant();
  bool any_point = false;
  for (const auto& f : rf) {
    if (f.rank != 2) continue;
    any_point = true;
    for (auto h1 : f.members.members()) {
      if (m.is_trivial_at(h1)) continue;
      bool alone = std::none_of(rf.begin(), rf.end(), [&](const Flat& g) {
        return g.members != f.members && g.members.contains(h1);
      });
      if (!alone) continue;
      for (auto h2 : (a.all() - f.members).members()) {
        if (m.is_trivial_at(h2)) continue;
        return fired("point", 2, 2, FlatReferences{{f}, {h1, h2}},
                     a.label(h1) + " meets only the resonant point " +
                         names(a, f.members) + "; " + a.label(h2) + " misses it");
      }
    }
  }
  if (!any_point) return inconclusive("point", "no resonant point");
  return inconclusive("point", "no line with a unique resonant point and a nontrivial line off it");
}

CriterionResult check_bipartition_lines(const CriteriaContext& ctx, const Bipartition& b) {
  require_lines(ctx, "line bipartition criterion");
  const auto& a = ctx.arrangement();
  b.validate(a.size());
  if (!has_nontrivial_line(ctx.monodromy(), b.part1)) {
    return inconclusive("bipartition", "part 1 has no line with m != 1", b);
  }
  if (!has_nontrivial_line(ctx.monodromy(), b.part2)) {
    return inconclusive("bipartition", "part 2 has no line with m != 1", b);
  }
  for (const auto& f : ctx.resonant()) {
    if (f.members.intersects(b.part1) && f.members.intersects(b.part2)) {
      return inconclusive("bipartition",
                          "resonant flat " + names(a, f.members) + " meets both parts",
                          FlatReferences{{f}, {}});
    }
  }
  return fired("bipartition", 2, 2, b, names(a, b.part1) + " | " + names(a, b.part2));
}

std::optional<Bipartition> search_bipartition_lines(const CriteriaContext& ctx) {
  require_lines(ctx, "line bipartition search");
  const auto& a = ctx.arrangement();
  std::vector<std::size_t> parent(a.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : ctx.resonant()) {
    if (f.rank != 2) continue;
    auto ms = f.members.members();
    for (std::size_t k = 1; k < ms.size(); ++k) {
      auto r0 = find(ms[0]), rk = find(ms[k]);
      if (r0 != rk) parent[std::max(r0, rk)] = std::min(r0, rk);
    }
  }
  std::optional<std::size_t> first_root;
  bool second = false;
  for (std::size_t h = 0; h < a.size(); ++h) {
    if (ctx.monodromy().is_trivial_at(h)) continue;
    if (!first_root) {
      first_root = find(h);
    } else if (find(h) != *first_root) {
      second = true;
    }
  }
  if (!first_root || !second) return std::nullopt;
  Bipartition b;
  for (std::size_t h = 0; h < a.size(); ++h) {
    (find(h) == *first_root ? b.part1 : b.part2).insert(h);
  }
  return b;
}

CriterionResult check_bipartition_general(const CriteriaContext& ctx, const Bipartition& b) {
  const auto& a = ctx.arrangement();
  b.validate(a.size());
  if (monodromy_of_flat(ctx.monodromy(), b.part1) == 0) {
    return inconclusive("bipartition-general", "product of m over part 1 equals 1", b);
  }
  for (const auto& s : ctx.lattice().flats()) {
    if (s.members.empty() || s.rank > ctx.n()) continue;
    std::size_t r1 = a.rank(s.members & b.part1);
    std::size_t r2 = a.rank(s.members & b.part2);
    if (r1 + r2 != s.rank) {
      return inconclusive("bipartition-general",
                          "flat " + names(a, s.members) + " splits with ranks " +
                              std::to_string(r1) + " + " + std::to_string(r2) +
                              " != " + std::to_string(s.rank),
                          FlatReferences{{s}, {}});
    }
  }
  return fired("bipartition-general", ctx.n(), ctx.n(), b,
               names(a, b.part1) + " | " + names(a, b.part2));
}

std::optional<Bipartition> search_bipartition_general(const CriteriaContext& ctx) {
  const std::size_t size = ctx.arrangement().size();
  if (size > kMaxBruteForcePartitionSize) {
    throw DomainError("bipartition search is limited to " +
                      std::to_string(kMaxBruteForcePartitionSize) + " hyperplanes");
  }
  if (size < 2) return std::nullopt;
  const IndexSet all = IndexSet::range(size);
  // part1 always contains index 0.
  for (std::uint64_t rest = 0; rest + 1 < (std::uint64_t{1} << (size - 1)); ++rest) {
    IndexSet p1 = IndexSet::from_mask(1 | (rest << 1));
    Bipartition b{p1, all - p1};
    if (check_bipartition_general(ctx, b).fired()) return b;
  }
  return std::nullopt;
}

CriterionResult check_irreducible_shelter(const CriteriaContext& ctx, const Flat& i) {
  const auto& a = ctx.arrangement();
  if (!ctx.lattice().contains(i.members) || !is_irreducible(a, i)) {
    throw DomainError(names(a, i.members) + " is not an irreducible flat");
  }
  const std::size_t r = ctx.lattice().at(i.members).rank;
  for (const auto& f : ctx.resonant()) {
    if (i.members.subset_of(f.members)) {
      return inconclusive("shelter",
                          "resonant flat " + names(a, f.members) + " contains " +
                              names(a, i.members),
                          FlatReferences{{f}, {}});
    }
  }
  return fired("shelter", ctx.n() + 1 - r, ctx.n(), FlatReferences{{ctx.lattice().at(i.members)}, {}},
               "no resonant flat contains " + names(a, i.members));
}

namespace {

CriterionResult bipartition_result(const CriteriaContext& ctx, const RunOptions& options) {
  if (options.partition) return check_bipartition_lines(ctx, *options.partition);
  if (auto b = search_bipartition_lines(ctx)) return check_bipartition_lines(ctx, *b);
  return inconclusive("bipartition", "lines with m != 1 lie in one resonance-graph component");
}

CriterionResult general_result(const CriteriaContext& ctx, const RunOptions& options) {
  if (options.partition) return check_bipartition_general(ctx, *options.partition);
  if (auto b = search_bipartition_general(ctx)) return check_bipartition_general(ctx, *b);
  return inconclusive("bipartition-general", "no bipartition satisfies both conditions");
}

CriterionResult shelter_result(const CriteriaContext& ctx, const RunOptions& options) {
  if (options.flat) return check_irreducible_shelter(ctx, *options.flat);
  // First sheltering flat in increasing rank order.
  for (const auto& f : irreducible_flats(ctx.arrangement(), ctx.lattice())) {
    if (f.rank > ctx.n()) continue;
    auto r = check_irreducible_shelter(ctx, f);
    if (r.fired()) return r;
  }
  return inconclusive("shelter", "every irreducible flat of rank <= n lies in a resonant flat");
}

}  // namespace

CriterionResult run_criterion(const CriteriaContext& ctx, const std::string& name,
                              const RunOptions& options) {
  if (name == "cdo") return check_cdo(ctx);
  if (name == "lambda") return check_lambda_criterion(ctx);
  if (name == "point") return check_unique_resonant_point(ctx);
  if (name == "bipartition") return bipartition_result(ctx, options);
  if (name == "bipartition-general") return general_result(ctx, options);
  if (name == "shelter") return shelter_result(ctx, options);
  throw InputError("unknown criterion \"" + name + "\"");
}

CriterionReport run_all(const CriteriaContext& ctx, const RunOptions& options) {
  CriterionReport report;
  auto& out = report.results;
  out.push_back(check_cdo(ctx));
  out.push_back(check_lambda_criterion(ctx));
  if (ctx.n() == 2) {
    out.push_back(check_unique_resonant_point(ctx));
    out.push_back(bipartition_result(ctx, options));
  }
  if (options.partition || options.search_general_partitions) {
    out.push_back(general_result(ctx, options));
  }
  out.push_back(shelter_result(ctx, options));

  for (const auto& r : out) {
    if (r.fired()) report.best_level = std::max(report.best_level, r.level);
  }
  report.nonresonant = report.best_level == ctx.n();
  return report;
}

}  // namespace rescert
