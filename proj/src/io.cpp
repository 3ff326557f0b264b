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

#include "rescert/io.hpp"

#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include "rescert/error.hpp"
#include "rescert/lattice.hpp"

namespace rescert {
namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw InputError(where + ": " + what);
}

Rational rational_at(const Json& v, const std::string& where) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(std::to_string(v.get<std::uint64_t>()))
                                  : Rational(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_number_float()) fail(where, "floating-point numbers are not accepted");
  if (!v.is_string()) fail(where, "expected a rational string");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InputError& e) {
    fail(where, e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail("/", std::string("missing field \"") + key + "\"");
  return *it;
}

Json rational_array(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Json integer_array(std::span<const Integer> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

Json canonical_content(const Arrangement& a, const MonodromyMap& m) {
  Json out;
  out["ambient_dim"] = a.ambient_dim();
  Json planes = Json::array();
  for (const auto& h : a.hyperplanes()) planes.push_back(rational_array(h.coeffs()));
  out["hyperplanes"] = std::move(planes);
  out["monodromy_exponents"] = rational_array(m.exponents());
  out["labels"] = a.labels();
  return out;
}

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto pos = text.find(sep, start);
    std::string item(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

IndexSet labels_to_set(const Arrangement& a, const std::vector<std::string>& labels,
                       const std::string& where) {
  IndexSet out;
  for (const auto& l : labels) {
    std::size_t i = 0;
    try {
      i = a.index_of(l);
    } catch (const InputError&) {
      fail(where, "unknown hyperplane label \"" + l + "\"");
    }
    if (out.contains(i)) fail(where, "hyperplane \"" + l + "\" listed twice");
    out.insert(i);
  }
  return out;
}

Json labels_json(const Arrangement& a, const std::vector<std::size_t>& idx) {
  Json out = Json::array();
  for (auto i : idx) out.push_back(a.label(i));
  return out;
}

Json evidence_json(const Arrangement& a, const Evidence& e) {
  Json out = Json::object();
  if (const auto* d = std::get_if<DeltaCertificate>(&e)) {
    out["certificate"] = {{"type", "delta"}, {"values", rational_array(d->values)}};
  } else if (const auto* l = std::get_if<LambdaWitness>(&e)) {
    out["witness"] = {{"type", "lambda"},
                      {"values", integer_array(l->values)},
                      {"common_sum", l->common_sum.get_str()}};
  } else if (const auto* b = std::get_if<Bipartition>(&e)) {
    out["partition"] = Json::array({flat_to_json(a, b->part1), flat_to_json(a, b->part2)});
  } else if (const auto* f = std::get_if<FlatReferences>(&e)) {
    Json flats = Json::array();
    for (const auto& fl : f->flats) flats.push_back(flat_to_json(a, fl.members));
    out["flats"] = std::move(flats);
    if (!f->hyperplanes.empty()) out["hyperplanes"] = labels_json(a, f->hyperplanes);
  }
  return out;
}

}  // namespace

ArrangementDocument parse_arrangement(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("/", "expected a JSON object");
  for (const auto& [key, value] : root.items()) {
    if (key != "name" && key != "ambient_dim" && key != "hyperplanes" &&
        key != "monodromy_exponents" && key != "labels" && key != "provenance") {
      fail("/" + key, "unknown field");
    }
  }

  const Json& dim = field(root, "ambient_dim");
  if (!dim.is_number_integer() || dim.get<std::int64_t>() < 1) {
    fail("/ambient_dim", "expected a positive integer");
  }
  const auto n = dim.get<std::size_t>();

  const Json& planes = field(root, "hyperplanes");
  if (!planes.is_array() || planes.empty()) fail("/hyperplanes", "expected a nonempty array");
  std::vector<Hyperplane> hyperplanes;
  for (std::size_t i = 0; i < planes.size(); ++i) {
    const std::string where = "/hyperplanes/" + std::to_string(i);
    const Json& row = planes[i];
    if (!row.is_array()) fail(where, "expected an array of coefficients");
    if (row.size() != n + 1) {
      fail(where, "expected " + std::to_string(n + 1) + " coefficients, got " +
                      std::to_string(row.size()));
    }
    RationalVector coeffs;
    for (std::size_t j = 0; j < row.size(); ++j) {
      coeffs.push_back(rational_at(row[j], where + "/" + std::to_string(j)));
    }
    try {
      hyperplanes.emplace_back(std::move(coeffs));
    } catch (const InputError& e) {
      fail(where, e.what());
    }
    for (std::size_t k = 0; k + 1 < hyperplanes.size(); ++k) {
      if (hyperplanes[k] == hyperplanes.back()) {
        fail(where, "proportional to /hyperplanes/" + std::to_string(k));
      }
    }
  }

  std::vector<std::string> labels;
  if (auto it = root.find("labels"); it != root.end()) {
    if (!it->is_array() || it->size() != hyperplanes.size()) {
      fail("/labels", "expected " + std::to_string(hyperplanes.size()) + " strings");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) fail("/labels/" + std::to_string(i), "expected a string");
      labels.push_back((*it)[i].get<std::string>());
    }
  }

  const Json& exps = field(root, "monodromy_exponents");
  if (!exps.is_array() || exps.size() != hyperplanes.size()) {
    fail("/monodromy_exponents",
         "expected " + std::to_string(hyperplanes.size()) + " exponents, one per hyperplane");
  }
  RationalVector q;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    q.push_back(rational_at(exps[i], "/monodromy_exponents/" + std::to_string(i)));
  }

  ArrangementDocument doc{"", Arrangement(1, {Hyperplane({1, 0})}), MonodromyMap({0}),
                          Json::object()};
  try {
    doc.arrangement = Arrangement(n, std::move(hyperplanes), std::move(labels));
  } catch (const InputError& e) {
    fail("/labels", e.what());
  }
  try {
    doc.monodromy = MonodromyMap(std::move(q));
  } catch (const InputError& e) {
    fail("/monodromy_exponents", e.what());
  }
  if (auto it = root.find("name"); it != root.end()) {
    if (!it->is_string()) fail("/name", "expected a string");
    doc.name = it->get<std::string>();
  }
  if (auto it = root.find("provenance"); it != root.end()) {
    if (!it->is_object()) fail("/provenance", "expected an object");
    doc.provenance = *it;
  }
  return doc;
}

ArrangementDocument load_arrangement(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_arrangement(ss.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const ArrangementDocument& doc) {
  Json out;
  if (!doc.name.empty()) out["name"] = doc.name;
  Json content = canonical_content(doc.arrangement, doc.monodromy);
  for (auto& [k, v] : content.items()) out[k] = v;
  if (!doc.provenance.empty()) out["provenance"] = doc.provenance;
  return out;
}

std::string serialize(const ArrangementDocument& doc) { return to_json(doc).dump(2) + "\n"; }

std::string content_hash(const Arrangement& a, const MonodromyMap& m) {
  return sha256_hex(canonical_content(a, m).dump());
}

Json flat_to_json(const Arrangement& a, IndexSet members) {
  return labels_json(a, members.members());
}

IndexSet parse_label_set(const Arrangement& a, const Json& labels, const std::string& where) {
  if (!labels.is_array()) fail(where, "expected an array of labels");
  std::vector<std::string> names;
  for (const auto& l : labels) {
    if (!l.is_string()) fail(where, "expected an array of labels");
    names.push_back(l.get<std::string>());
  }
  return labels_to_set(a, names, where);
}

Bipartition parse_partition(const Arrangement& a, std::string_view text) {
  auto parts = split(text, '|');
  if (parts.size() != 2) fail("--partition", "expected two label lists separated by '|'");
  Bipartition b;
  for (int p = 0; p < 2; ++p) {
    std::vector<std::string> labels;
    if (!parts[p].empty()) labels = split(parts[p], ',');
    (p == 0 ? b.part1 : b.part2) = labels_to_set(a, labels, "--partition");
  }
  return b;
}

Flat parse_flat(const Arrangement& a, std::string_view text) {
  IndexSet members = labels_to_set(a, split(text, ','), "--flat");
  if (!is_flat(a, members)) {
    fail("--flat", "{" + std::string(text) + "} is not a flat (its closure is " +
                       flat_to_json(a, closure(a, members).members).dump() + ")");
  }
  return Flat{members, a.rank(members)};
}

CertificateDocument make_certificate(const CriteriaContext& ctx,
                                     const ConstantCombinationResult& result) {
  CertificateDocument cert{result, {}, content_hash(ctx.arrangement(), ctx.monodromy())};
  for (const auto& f : ctx.resonant()) cert.resonant_flats.push_back(f.members);
  return cert;
}

Json to_json(const Arrangement& a, const CertificateDocument& cert) {
  Json out;
  if (const auto* d = std::get_if<DeltaCertificate>(&cert.certificate)) {
    out["type"] = "delta";
    out["values"] = rational_array(d->values);
  } else {
    const auto& l = std::get<LambdaWitness>(cert.certificate);
    out["type"] = "lambda";
    out["values"] = integer_array(l.values);
    out["common_sum"] = l.common_sum.get_str();
  }
  Json flats = Json::array();
  for (auto f : cert.resonant_flats) flats.push_back(flat_to_json(a, f));
  out["resonant_flats"] = std::move(flats);
  out["arrangement_hash"] = cert.arrangement_hash;
  return out;
}

CertificateDocument parse_certificate(const Arrangement& a, std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!root.is_object()) fail("/", "expected a JSON object");
  const Json& type = field(root, "type");
  if (type != "delta" && type != "lambda") fail("/type", "expected \"delta\" or \"lambda\"");
  const Json& values = field(root, "values");
  if (!values.is_array()) fail("/values", "expected an array");
  RationalVector v;
  for (std::size_t i = 0; i < values.size(); ++i) {
    v.push_back(rational_at(values[i], "/values/" + std::to_string(i)));
  }

  CertificateDocument cert;
  if (type == "delta") {
    cert.certificate = DeltaCertificate{std::move(v)};
  } else {
    LambdaWitness l;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!is_integer(v[i])) fail("/values/" + std::to_string(i), "expected an integer");
      l.values.push_back(v[i].get_num());
    }
    Rational s = rational_at(field(root, "common_sum"), "/common_sum");
    if (!is_integer(s)) fail("/common_sum", "expected an integer");
    l.common_sum = s.get_num();
    cert.certificate = std::move(l);
  }
  const Json& flats = field(root, "resonant_flats");
  if (!flats.is_array()) fail("/resonant_flats", "expected an array of label lists");
  for (std::size_t i = 0; i < flats.size(); ++i) {
    cert.resonant_flats.push_back(
        parse_label_set(a, flats[i], "/resonant_flats/" + std::to_string(i)));
  }
  const Json& hash = field(root, "arrangement_hash");
  if (!hash.is_string()) fail("/arrangement_hash", "expected a string");
  cert.arrangement_hash = hash.get<std::string>();
  return cert;
}

Verdict verify_certificate(const ArrangementDocument& doc, const CertificateDocument& cert) {
  if (cert.arrangement_hash != content_hash(doc.arrangement, doc.monodromy)) {
    return Verdict::reject("arrangement hash mismatch");
  }
  const auto resonant = resonant_flats(doc.arrangement, doc.monodromy);
  std::vector<IndexSet> expected;
  for (const auto& f : resonant) expected.push_back(f.members);
  if (cert.resonant_flats != expected) {
    return Verdict::reject("resonant flat list differs from the one derived from the arrangement");
  }
  if (const auto* d = std::get_if<DeltaCertificate>(&cert.certificate)) {
    if (d->values.size() != doc.arrangement.size()) {
      return Verdict::reject("delta has " + std::to_string(d->values.size()) + " entries, expected " +
                             std::to_string(doc.arrangement.size()));
    }
    return verify_delta(doc.arrangement, resonant, *d);
  }
  const auto& l = std::get<LambdaWitness>(cert.certificate);
  if (l.values.size() != resonant.size()) {
    return Verdict::reject("lambda has " + std::to_string(l.values.size()) + " entries, expected " +
                           std::to_string(resonant.size()));
  }
  return verify_lambda(IncidenceMatrix::from_flats(doc.arrangement.size(), resonant), l);
}

Json to_json(const Arrangement& a, const CriterionResult& r) {
  Json out;
  out["criterion"] = r.criterion;
  out["status"] = to_string(r.status);
  out["level"] = r.level;
  out["nonresonant"] = r.nonresonant;
  const Json evidence = evidence_json(a, r.evidence);
  for (const auto& [k, v] : evidence.items()) out[k] = v;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

Json to_json(const Arrangement& a, const CriterionReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) results.push_back(to_json(a, r));
  Json out;
  out["results"] = std::move(results);
  out["best_level"] = report.best_level;
  out["nonresonant"] = report.nonresonant;
  out["verdict"] = report.nonresonant      ? "nonresonant"
                   : report.best_level > 0 ? "vanishing below level " +
                                                 std::to_string(report.best_level)
                                           : "inconclusive by all criteria";
  return out;
}

Json to_json(const Arrangement& a, const CohomologyDims& dims) {
  Json out;
  out["h"] = {dims.h0, dims.h1, dims.h2};
  out["chi"] = dims.chi;
  out["decone_at"] = a.label(dims.decone_at);
  out["presentation_stats"] = {{"generators", dims.generators}, {"relators", dims.relators}};
  out["shear"] = to_string(dims.shear);
  return out;
}

Json lattice_to_json(const Arrangement& a, const IntersectionLattice& lattice) {
  Json ranks = Json::array();
  for (const auto& level : lattice.by_rank()) {
    Json row = Json::array();
    for (const auto& f : level) row.push_back(flat_to_json(a, f.members));
    ranks.push_back(std::move(row));
  }
  Json out;
  out["size"] = lattice.size();
  out["ranks"] = std::move(ranks);
  out["poincare"] = poincare_polynomial(lattice);
  return out;
}

ArrangementDocument lifted_document(const ArrangementDocument& base,
                                    const LiftedArrangement& lift) {
  ArrangementDocument doc{base.name.empty() ? "" : base.name + "-lift", lift.lifted,
                          base.monodromy, Json::object()};
  doc.provenance["construction"] = "lift";
  doc.provenance["base_hash"] = content_hash(base.arrangement, base.monodromy);
  doc.provenance["partition"] = Json::array(
      {flat_to_json(base.arrangement, lift.partition.part1),
       flat_to_json(base.arrangement, lift.partition.part2)});
  doc.provenance["z"] = rational_array(lift.direction);
  doc.provenance["seed"] = std::to_string(lift.seed);
  doc.provenance["attempts"] = lift.attempts;
  return doc;
}

ArrangementDocument section_document(const ArrangementDocument& base, const Flat& i,
                                     const GenericSection& section) {
  auto s = section_arrangement(base.arrangement, section.hyperplane);
  ArrangementDocument doc{base.name.empty() ? "" : base.name + "-section", s.arrangement,
                          section_monodromy(s, base.monodromy), Json::object()};
  doc.provenance["construction"] = "section";
  doc.provenance["base_hash"] = content_hash(base.arrangement, base.monodromy);
  doc.provenance["flat"] = flat_to_json(base.arrangement, i.members);
  doc.provenance["hyperplane"] = rational_array(section.hyperplane.coeffs());
  Json sources = Json::array();
  for (auto src : s.sources) sources.push_back(flat_to_json(base.arrangement, src));
  doc.provenance["sources"] = std::move(sources);
  doc.provenance["seed"] = std::to_string(section.seed);
  doc.provenance["attempts"] = section.attempts;
  return doc;
}

}  // namespace rescert
