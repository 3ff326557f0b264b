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

#include <random>

#include "doctest.h"
#include "rescert/constructions.hpp"
#include "rescert/error.hpp"
#include "support/oracles.hpp"

namespace rescert {
namespace {

using testing::load_corpus;
using testing::make_arrangement;

const Arrangement& corpus(std::size_t i) {
  static const auto entries = load_corpus();
  return entries.at(i).instance.arrangement;
}

// Braid arrangement of P^3 together with one coordinate hyperplane.
Arrangement braid_plus() {
  return make_arrangement(3, {{1, -1, 0, 0},
                              {1, 0, -1, 0},
                              {0, 1, -1, 0},
                              {1, 0, 0, -1},
                              {0, 1, 0, -1},
                              {0, 0, 1, -1},
                              {1, 0, 0, 0}});
}

Bipartition split(IndexSet part1, std::size_t size) {
  return Bipartition{part1, IndexSet::range(size) - part1};
}

void check_lift_property(const Arrangement& a, const Bipartition& b) {
  const auto lift = lift_bipartition(a, b);
  REQUIRE(lift.lifted.size() == a.size());
  CHECK(lift.lifted.ambient_dim() == a.ambient_dim() + 1);
  RationalVector up(a.ambient_dim() + 2, 0);
  up.back() = 1;
  RationalVector through_z = lift.direction;
  through_z.push_back(1);
  for (std::size_t h = 0; h < a.size(); ++h) {
    const auto& form = lift.lifted.hyperplane(h).coeffs();
    const RationalVector head(form.begin(), form.end() - 1);
    CHECK(Hyperplane(head) == a.hyperplane(h));
    CHECK(dot(form, b.part2.contains(h) ? through_z : up) == 0);
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a.size()); ++mask) {
    const IndexSet s = IndexSet::from_mask(mask);
    const bool additive = a.rank(s & b.part1) + a.rank(s & b.part2) == a.rank(s);
    CHECK((lift.lifted.rank(s) == a.rank(s)) == additive);
  }
}

TEST_CASE("lifting a pencil breaks the concurrency") {
  const auto lift = lift_bipartition(corpus(1), split(IndexSet{0, 1}, 3));
  CHECK(lift.lifted.size() == 3);
  CHECK(lift.lifted.rank(lift.lifted.all()) == 3);
  CHECK(lift.lifted.labels() == corpus(1).labels());
}

TEST_CASE("lifting with an empty part preserves every rank") {
  const auto lift = lift_bipartition(corpus(0), Bipartition{IndexSet{0, 1, 2}, IndexSet{}});
  for (std::uint64_t mask = 1; mask < 8; ++mask) {
    const IndexSet s = IndexSet::from_mask(mask);
    CHECK(lift.lifted.rank(s) == corpus(0).rank(s));
  }
}

TEST_CASE("lift rank equivalence over every bipartition") {
  for (std::size_t e : {0, 1, 3}) {
    const Arrangement& a = corpus(e);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a.size()); ++mask) {
      check_lift_property(a, split(IndexSet::from_mask(mask), a.size()));
    }
  }
  check_lift_property(braid_plus(), split(IndexSet{0, 1, 2}, 7));
}

TEST_CASE("lifting is reproducible") {
  const Bipartition b = split(IndexSet{0, 1, 2}, 6);
  const auto first = lift_bipartition(corpus(3), b);
  const auto second = lift_bipartition(corpus(3), b);
  CHECK(first.direction == second.direction);
  CHECK(first.seed == second.seed);
  CHECK(first.seed == derive_seed(corpus(3), 0x6c696674));
  CHECK(derive_seed(corpus(3)) == derive_seed(corpus(3)));
  CHECK(derive_seed(corpus(3)) != derive_seed(corpus(2)));

  RandomSearch fixed;
  fixed.seed = 99;
  const auto seeded = lift_bipartition(corpus(3), b, fixed);
  CHECK(seeded.seed == 99);
  CHECK(lift_bipartition(corpus(3), b, fixed).direction == seeded.direction);
}

TEST_CASE("lift errors") {
  CHECK_THROWS_AS(lift_bipartition(corpus(0), Bipartition{IndexSet{0}, IndexSet{0, 1, 2}}),
                  InputError);
  RandomSearch none;
  none.max_attempts = 0;
  try {
    lift_bipartition(corpus(3), split(IndexSet{0, 1, 2}, 6), none);
    FAIL("expected RetryBudgetExhausted");
  } catch (const RetryBudgetExhausted& e) {
    CHECK(std::string(e.what()).find("no generic lifting direction") != std::string::npos);
  }
}

void check_section(const Arrangement& a, IndexSet members) {
  const auto lattice = enumerate_lattice(a);
  const Flat i = lattice.at(members);
  const auto section = generic_section(a, i);
  const auto& h0 = section.hyperplane;
  CHECK_FALSE(a.find(h0).has_value());
  CHECK(a.rank(members) == i.rank);
  for (const auto& f : lattice.flats()) {
    if (f.members.empty() || f.rank > a.ambient_dim()) continue;
    RatMatrix forms = a.forms(f.members);
    forms.append_row(h0.coeffs());
    const bool contains_zero_set = rat_rank(forms) == f.rank;
    CHECK(contains_zero_set == members.subset_of(f.members));
  }

  // Irreducible flats of the section above the image of I come from
  // irreducible flats of A above I, one rank higher.
  const auto s = section_arrangement(a, h0);
  IndexSet image;
  for (std::size_t j = 0; j < s.sources.size(); ++j) {
    if (s.sources[j].intersects(members)) image.insert(j);
  }
  const auto section_lattice = enumerate_lattice(s.arrangement);
  CHECK(section_lattice.contains(image));
  for (const auto& g : irreducible_flats(s.arrangement, section_lattice)) {
    if (!image.subset_of(g.members) || g.rank > s.arrangement.ambient_dim()) continue;
    IndexSet lifted;
    for (auto j : g.members.members()) lifted = lifted | s.sources[j];
    const Flat tilde = closure(a, lifted);
    CHECK(tilde.members == lifted);
    CHECK(tilde.rank == g.rank + 1);
    CHECK(is_irreducible(a, tilde));
    CHECK(members.subset_of(lifted));
  }
}

TEST_CASE("generic sections") {
  check_section(corpus(2), IndexSet{0, 1, 2});
  check_section(corpus(1), IndexSet{0, 1, 2});
  check_section(braid_plus(), IndexSet{0, 1, 2});
  check_section(braid_plus(), IndexSet{0, 1, 2, 3, 4, 5});
  check_section(braid_plus(), IndexSet{0, 3, 4});
}

TEST_CASE("generic section errors") {
  CHECK_THROWS_AS(generic_section(corpus(0), Flat{IndexSet{0}, 1}), DomainError);
  CHECK_THROWS_AS(generic_section(corpus(2), Flat{IndexSet{0, 3}, 2}), DomainError);
  CHECK_THROWS_AS(generic_section(corpus(2), Flat{IndexSet{0, 1}, 2}), DomainError);
  const auto h0 = generic_section(corpus(2), Flat{IndexSet{0, 1, 2}, 2}).hyperplane;
  CHECK_THROWS_AS(section_arrangement(corpus(2), corpus(2).hyperplane(0)), DomainError);
  const auto s = section_arrangement(corpus(2), h0);
  CHECK(s.arrangement.ambient_dim() == 1);
  CHECK(s.sources.front() == IndexSet{0, 1, 2});
}

TEST_CASE("section monodromy sums the sources") {
  const auto entries = load_corpus();
  const auto& e4 = entries.at(3).instance;
  const auto h0 = generic_section(e4.arrangement, Flat{IndexSet{0, 1, 2}, 2}).hyperplane;
  const auto s = section_arrangement(e4.arrangement, h0);
  const auto m = section_monodromy(s, e4.monodromy);
  REQUIRE(m.size() == s.sources.size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    CHECK(m.exponent(j) == monodromy_of_flat(e4.monodromy, s.sources[j]));
  }
}

TEST_CASE("decone examples") {
  const auto pencil = decone(corpus(1), 2);
  REQUIRE(pencil.hyperplanes.size() == 2);
  const auto& u = pencil.hyperplanes[0].coeffs;
  const auto& v = pencil.hyperplanes[1].coeffs;
  CHECK(u[0] * v[1] - u[1] * v[0] == 0);
  CHECK(pencil.hyperplanes[0].constant != 0);

  const auto generic = decone(corpus(0), 2);
  REQUIRE(generic.hyperplanes.size() == 2);
  CHECK(generic.hyperplanes[0].coeffs == RationalVector{1, 0});
  CHECK(generic.hyperplanes[1].coeffs == RationalVector{0, 1});
  CHECK(generic.hyperplanes[0].constant == 0);
  CHECK(generic.deleted == 2);

  CHECK_THROWS_AS(decone(corpus(0), 7), DomainError);
}

void check_recone(const Arrangement& a) {
  for (std::size_t h = 0; h < a.size(); ++h) {
    const Arrangement back = recone(decone(a, h));
    REQUIRE(back.size() == a.size());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << a.size()); ++mask) {
      const IndexSet s = IndexSet::from_mask(mask);
      CHECK(back.rank(s) == a.rank(s));
    }
  }
}

TEST_CASE("decone then recone keeps the rank spectrum") {
  for (std::size_t e = 0; e < 5; ++e) check_recone(corpus(e));
  check_recone(braid_plus());
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    check_recone(testing::random_line_instance(rng, 3 + trial % 4).arrangement);
  }
}

}  // namespace
}  // namespace rescert
