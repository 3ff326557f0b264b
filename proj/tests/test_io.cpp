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

#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "rescert/error.hpp"
#include "rescert/io.hpp"
#include "support/oracles.hpp"

namespace rescert {
namespace {

using testing::corpus_path;

const std::vector<std::string>& corpus_files() {
  static const std::vector<std::string> files = {
      "e1_generic3.json", "e2_pencil3.json", "e3_twin_triples.json",
      "e4_disjoint_triples.json", "e5_nonres_triple.json"};
  return files;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

ArrangementDocument corpus_doc(std::size_t i) {
  return load_arrangement(corpus_path(corpus_files().at(i)));
}

std::string parse_error(const std::string& text) {
  try {
    parse_arrangement(text);
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST_CASE("corpus documents load") {
  const auto e3 = corpus_doc(2);
  CHECK(e3.name == "twin-triples");
  CHECK(e3.arrangement.size() == 5);
  CHECK(e3.monodromy.exponents() ==
        RationalVector{Rational(1, 2), Rational(1, 2), 0, Rational(1, 2), Rational(1, 2)});
  CHECK(e3.arrangement.label(4) == "H5");
  CHECK_THROWS_AS(load_arrangement(corpus_path("missing.json")), InputError);
}

TEST_CASE("corpus files are canonical and round-trip") {
  for (std::size_t i = 0; i < 5; ++i) {
    const std::string text = read_file(corpus_path(corpus_files()[i]));
    const auto doc = parse_arrangement(text);
    CHECK(serialize(doc) == text);
    const auto again = parse_arrangement(serialize(doc));
    CHECK(again.arrangement == doc.arrangement);
    CHECK(again.monodromy == doc.monodromy);
    CHECK(again.name == doc.name);
  }
}

TEST_CASE("documents are canonicalized") {
  const auto doc = parse_arrangement(R"({
    "ambient_dim": 2,
    "hyperplanes": [["2", "-2", "0"], ["0", "3", "0"], ["0", "0", "-1/2"]],
    "monodromy_exponents": ["4/3", "-1/3", "0"]
  })");
  CHECK(doc.arrangement.hyperplane(0).coeffs() == RationalVector{1, -1, 0});
  CHECK(doc.arrangement.hyperplane(2).coeffs() == RationalVector{0, 0, 1});
  CHECK(doc.monodromy.exponent(0) == Rational(1, 3));
  CHECK(doc.arrangement.labels() == std::vector<std::string>{"H1", "H2", "H3"});
  const auto canonical = serialize(doc);
  CHECK(serialize(parse_arrangement(canonical)) == canonical);
  CHECK(to_json(doc)["monodromy_exponents"][1] == "2/3");
}

TEST_CASE("parse errors carry positions") {
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0","0"],["0","1","0"]],
                                 "monodromy_exponents": ["1/3", "1/3"]})"),
                 "exponent sum 2/3 not an integer"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0","0"],["0","1","0"]],
                                 "monodromy_exponents": ["1/0", "0"]})"),
                 "zero denominator"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0","0"],["2","0","0"]],
                                 "monodromy_exponents": ["0", "0"]})"),
                 "/hyperplanes/1: proportional to /hyperplanes/0"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["0","0","0"]],
                                 "monodromy_exponents": ["0"]})"),
                 "/hyperplanes/0"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0",0.5]],
                                 "monodromy_exponents": ["0"]})"),
                 "floating-point numbers are not accepted"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0"]],
                                 "monodromy_exponents": ["0"]})"),
                 "expected 3 coefficients, got 2"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0","0"]],
                                 "monodromy_exponents": ["0"], "colour": "red"})"),
                 "/colour: unknown field"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": []})"), "/hyperplanes"));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0","0"]]})"),
                 "missing field \"monodromy_exponents\""));
  CHECK(contains(parse_error(R"({"ambient_dim": 2, "hyperplanes": [["1","0","x"]],
                                 "monodromy_exponents": ["0"]})"),
                 "/hyperplanes/0"));
  CHECK(contains(parse_error("{\"ambient_dim\": 2,"), "malformed JSON"));
  CHECK(contains(parse_error("[1, 2]"), "expected a JSON object"));
}

TEST_CASE("content hash") {
  const auto e1 = corpus_doc(0);
  const std::string h = content_hash(e1.arrangement, e1.monodromy);
  CHECK(h.size() == 64);
  CHECK(h.find_first_not_of("0123456789abcdef") == std::string::npos);
  auto renamed = e1;
  renamed.name = "other";
  renamed.provenance = Json{{"note", "x"}};
  CHECK(content_hash(renamed.arrangement, renamed.monodromy) == h);
  CHECK(content_hash(parse_arrangement(serialize(renamed)).arrangement, e1.monodromy) == h);
  const auto other = corpus_doc(1);
  CHECK(content_hash(other.arrangement, other.monodromy) != h);
  const MonodromyMap shifted(RationalVector{Rational(2, 3), Rational(2, 3), Rational(2, 3)});
  CHECK(content_hash(e1.arrangement, shifted) != h);
}

TEST_CASE("partitions and flats from labels") {
  const auto e4 = corpus_doc(3);
  const auto b = parse_partition(e4.arrangement, "H1,H2,H3|H4,H5,H6");
  CHECK(b.part1 == IndexSet{0, 1, 2});
  CHECK(b.part2 == IndexSet{3, 4, 5});
  CHECK(parse_partition(e4.arrangement, "H1,H2,H3,H4,H5,H6|").part2.empty());
  CHECK_THROWS_AS(parse_partition(e4.arrangement, "H1,H2,H3"), InputError);
  CHECK_THROWS_AS(parse_partition(e4.arrangement, "H1,H9|H2"), InputError);
  CHECK_THROWS_AS(parse_partition(e4.arrangement, "H1,H1|H2"), InputError);

  const auto e3 = corpus_doc(2);
  const auto f = parse_flat(e3.arrangement, "H1,H2,H3");
  CHECK(f.members == IndexSet{0, 1, 2});
  CHECK(f.rank == 2);
  try {
    parse_flat(e3.arrangement, "H1,H2");
    FAIL("expected InputError");
  } catch (const InputError& e) {
    CHECK(contains(e.what(), "is not a flat"));
  }
  CHECK(flat_to_json(e3.arrangement, IndexSet{0, 2}) == Json{"H1", "H3"});
}

CertificateDocument emitted(const ArrangementDocument& doc) {
  const CriteriaContext ctx(doc.arrangement, doc.monodromy);
  return make_certificate(ctx, decide_constant_combination(ctx.incidence()));
}

TEST_CASE("certificate round trip") {
  for (std::size_t i = 0; i < 5; ++i) {
    const auto doc = corpus_doc(i);
    const auto cert = emitted(doc);
    const std::string text = to_json(doc.arrangement, cert).dump(2);
    const auto parsed = parse_certificate(doc.arrangement, text);
    CHECK(parsed.certificate == cert.certificate);
    CHECK(parsed.resonant_flats == cert.resonant_flats);
    CHECK(parsed.arrangement_hash == cert.arrangement_hash);
    CHECK(verify_certificate(doc, parsed));
  }
  const auto e4 = corpus_doc(3);
  const Json j = to_json(e4.arrangement, emitted(e4));
  CHECK(j["type"] == "lambda");
  CHECK(j["values"] == Json{"1", "1"});
  CHECK(j["common_sum"] == "1");
  CHECK(j["resonant_flats"] == Json{Json{"H1", "H2", "H3"}, Json{"H4", "H5", "H6"}});
}

TEST_CASE("certificate is tied to its arrangement") {
  const auto e3 = corpus_doc(2);
  const auto cert = emitted(e3);
  auto doc = e3;
  doc.monodromy = MonodromyMap(RationalVector{Rational(1, 2), Rational(1, 2), 0, 0, 0});
  const auto v = verify_certificate(doc, cert);
  CHECK_FALSE(v);
  CHECK(v.reason == "arrangement hash mismatch");
}

// One random single-field corruption of a certificate document.
Json mutate(Json j, std::mt19937_64& rng, const Arrangement& a) {
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto& values = j["values"];
  auto& flats = j["resonant_flats"];
  switch (pick(4)) {
    case 0: {
      std::vector<std::size_t> nonzero;
      for (std::size_t k = 0; k < values.size(); ++k) {
        if (parse_rational(values[k].get<std::string>()) != 0) nonzero.push_back(k);
      }
      if (!nonzero.empty()) {
        const auto k = nonzero[pick(nonzero.size())];
        values[k] = to_string(-parse_rational(values[k].get<std::string>()));
        return j;
      }
      [[fallthrough]];
    }
    case 1: {
      const auto k = pick(values.size());
      long delta = static_cast<long>(1 + pick(5));
      if (rng() % 2) delta = -delta;
      values[k] = to_string(parse_rational(values[k].get<std::string>()) + delta);
      return j;
    }
    case 2: {
      if (flats.empty()) {
        flats.push_back(Json{a.label(pick(a.size()))});
        return j;
      }
      const auto f = pick(flats.size());
      switch (pick(4)) {
        case 0:
          flats.erase(flats.begin() + static_cast<long>(f));
          break;
        case 1:
          flats.push_back(flats[f]);
          break;
        case 2: {
          Json& labels = flats[f];
          if (labels.size() > 1) {
            labels.erase(labels.begin() + static_cast<long>(pick(labels.size())));
            break;
          }
          [[fallthrough]];
        }
        default: {
          std::vector<std::string> missing;
          for (const auto& l : a.labels()) {
            if (std::find(flats[f].begin(), flats[f].end(), l) == flats[f].end()) {
              missing.push_back(l);
            }
          }
          if (missing.empty()) {
            flats.erase(flats.begin() + static_cast<long>(f));
          } else {
            flats[f].push_back(missing[pick(missing.size())]);
          }
          break;
        }
      }
      return j;
    }
    default: {
      if (j.contains("common_sum") && rng() % 2) {
        j["common_sum"] = to_string(parse_rational(j["common_sum"].get<std::string>()) + 1);
        return j;
      }
      std::string hash = j["arrangement_hash"];
      const auto k = pick(hash.size());
      hash[k] = hash[k] == '0' ? '1' : '0';
      j["arrangement_hash"] = hash;
      return j;
    }
  }
}

TEST_CASE("every single-field corruption is rejected") {
  std::mt19937_64 rng(424242);
  for (std::size_t i = 0; i < 5; ++i) {
    const auto doc = corpus_doc(i);
    const Json original = to_json(doc.arrangement, emitted(doc));
    for (int trial = 0; trial < 100; ++trial) {
      const Json bad = mutate(original, rng, doc.arrangement);
      REQUIRE(bad != original);
      bool rejected = false;
      try {
        rejected = !verify_certificate(doc, parse_certificate(doc.arrangement, bad.dump()));
      } catch (const InputError&) {
        rejected = true;
      }
      CHECK_MESSAGE(rejected, bad.dump());
    }
  }
}

TEST_CASE("malformed certificates") {
  const auto e4 = corpus_doc(3);
  CHECK_THROWS_AS(parse_certificate(e4.arrangement, "{"), InputError);
  CHECK_THROWS_AS(parse_certificate(e4.arrangement, R"({"type": "gamma"})"), InputError);
  Json j = to_json(e4.arrangement, emitted(e4));
  j["values"][0] = "1/2";
  CHECK_THROWS_AS(parse_certificate(e4.arrangement, j.dump()), InputError);
  j = to_json(e4.arrangement, emitted(e4));
  j["resonant_flats"][0][0] = "H9";
  CHECK_THROWS_AS(parse_certificate(e4.arrangement, j.dump()), InputError);
}

TEST_CASE("reports serialize") {
  const auto e3 = corpus_doc(2);
  const CriteriaContext ctx(e3.arrangement, e3.monodromy);
  const Json report = to_json(e3.arrangement, run_all(ctx));
  CHECK(report["verdict"] == "nonresonant");
  CHECK(report["results"][0]["criterion"] == "cdo");
  CHECK(report["results"][0]["status"] == "inconclusive");
  CHECK(report["results"][1]["certificate"]["values"] == Json{"-1", "-1", "4", "-1", "-1"});

  const auto e2 = corpus_doc(1);
  const CriteriaContext ctx2(e2.arrangement, e2.monodromy);
  CHECK(to_json(e2.arrangement, run_all(ctx2))["verdict"] == "inconclusive by all criteria");
  const Json dims = to_json(e2.arrangement, twisted_cohomology(e2.arrangement, e2.monodromy, 0));
  CHECK(dims["h"] == Json{0, 1, 0});
  CHECK(dims["decone_at"] == "H1");

  const Json lattice = lattice_to_json(e2.arrangement, enumerate_lattice(e2.arrangement));
  CHECK(lattice["size"] == 5);
  CHECK(lattice["poincare"] == Json{1, 2});
}

TEST_CASE("constructed documents carry provenance") {
  const auto e4 = corpus_doc(3);
  const auto b = parse_partition(e4.arrangement, "H1,H2,H3|H4,H5,H6");
  const auto lift = lifted_document(e4, lift_bipartition(e4.arrangement, b));
  CHECK(lift.name == "disjoint-triples-lift");
  CHECK(lift.provenance["construction"] == "lift");
  CHECK(lift.provenance["base_hash"] == content_hash(e4.arrangement, e4.monodromy));
  CHECK(lift.provenance["partition"][1] == Json{"H4", "H5", "H6"});
  const auto reparsed = parse_arrangement(serialize(lift));
  CHECK(reparsed.arrangement == lift.arrangement);
  CHECK(reparsed.monodromy == e4.monodromy);
  CHECK(reparsed.provenance == lift.provenance);

  const auto e3 = corpus_doc(2);
  const auto f = parse_flat(e3.arrangement, "H1,H2,H3");
  const auto section = section_document(e3, f, generic_section(e3.arrangement, f));
  CHECK(section.provenance["construction"] == "section");
  CHECK(section.provenance["flat"] == Json{"H1", "H2", "H3"});
  CHECK(section.arrangement.ambient_dim() == 1);
  CHECK(parse_arrangement(serialize(section)).arrangement == section.arrangement);
}

}  // namespace
}  // namespace rescert
