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

// Command-line front end. Exit codes: 0 nonresonance certified,
// 1 inconclusive, 2 the oracle finds h0 + h1 > 0, 3 input error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rescert/constructions.hpp"
#include "rescert/criteria.hpp"
#include "rescert/error.hpp"
#include "rescert/io.hpp"
#include "rescert/lattice.hpp"
#include "rescert/local_system.hpp"
#include "rescert/oracle.hpp"

namespace {

using namespace rescert;

constexpr int kCertified = 0;
constexpr int kInconclusive = 1;
constexpr int kOracleNonzero = 2;
constexpr int kInputError = 3;

struct Options {
  std::string format = "text";
  std::string file;
  std::string cert_file;
  std::string criterion = "all";
  std::string partition;
  std::string flat;
  std::string decone;
  std::string output;
  bool search_partitions = false;
  std::optional<std::uint64_t> seed;
};

bool json_output(const Options& o) { return o.format == "json"; }

std::string braces(const Arrangement& a, IndexSet s) {
  std::string out;
  for (auto i : s.members()) out += (out.empty() ? "" : ",") + a.label(i);
  return "{" + out + "}";
}

std::string tuple(const Json& values) {
  std::string out;
  for (const auto& v : values) {
    out += (out.empty() ? "" : ", ") + (v.is_string() ? v.get<std::string>() : v.dump());
  }
  return "(" + out + ")";
}

void print_result_line(const Json& r) {
  std::cout << r["criterion"].get<std::string>() << ": " << r["status"].get<std::string>();
  if (r["status"] == "fired") {
    std::cout << ", vanishing below level " << r["level"].get<std::size_t>()
              << (r["nonresonant"].get<bool>() ? " (nonresonant)" : "");
  }
  if (r.contains("certificate")) std::cout << ", delta = " << tuple(r["certificate"]["values"]);
  if (r.contains("witness")) {
    std::cout << ", lambda = " << tuple(r["witness"]["values"])
              << " with common sum " << r["witness"]["common_sum"].get<std::string>();
  }
  if (r.contains("partition")) {
    std::cout << ", partition " << r["partition"][0].dump() << " | " << r["partition"][1].dump();
  }
  if (r.contains("flats")) std::cout << ", flats " << r["flats"].dump();
  if (r.contains("hyperplanes")) std::cout << ", hyperplanes " << r["hyperplanes"].dump();
  if (r.contains("detail")) std::cout << " [" << r["detail"].get<std::string>() << "]";
  std::cout << "\n";
}

void write_document(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw InputError("cannot write " + o.output);
  out << text;
}

RunOptions run_options(const Options& o, const Arrangement& a) {
  RunOptions r;
  r.search_general_partitions = o.search_partitions;
  if (!o.partition.empty()) r.partition = parse_partition(a, o.partition);
  if (!o.flat.empty()) r.flat = parse_flat(a, o.flat);
  return r;
}

int cmd_lattice(const Options& o) {
  auto doc = load_arrangement(o.file);
  auto lattice = enumerate_lattice(doc.arrangement);
  Json j = lattice_to_json(doc.arrangement, lattice);
  if (json_output(o)) {
    std::cout << j.dump(2) << "\n";
    return kCertified;
  }
  std::cout << "flats: " << lattice.size() << "\n";
  for (std::size_t r = 0; r < lattice.by_rank().size(); ++r) {
    std::cout << "rank " << r << ":";
    for (const auto& f : lattice.by_rank()[r]) std::cout << " " << braces(doc.arrangement, f.members);
    std::cout << "\n";
  }
  std::cout << "poincare: " << tuple(j["poincare"]) << "\n";
  return kCertified;
}

int cmd_resonant(const Options& o) {
  auto doc = load_arrangement(o.file);
  CriteriaContext ctx(doc.arrangement, doc.monodromy);
  if (json_output(o)) {
    Json flats = Json::array();
    for (const auto& f : ctx.resonant()) {
      flats.push_back({{"flat", flat_to_json(doc.arrangement, f.members)}, {"rank", f.rank}});
    }
    std::cout << Json{{"resonant_flats", flats}}.dump(2) << "\n";
    return kCertified;
  }
  std::cout << "resonant flats: " << ctx.resonant().size() << "\n";
  for (const auto& f : ctx.resonant()) {
    std::cout << "  " << braces(doc.arrangement, f.members) << " rank " << f.rank << "\n";
  }
  return kCertified;
}

int cmd_check(const Options& o) {
  auto doc = load_arrangement(o.file);
  CriteriaContext ctx(doc.arrangement, doc.monodromy);
  const RunOptions ro = run_options(o, doc.arrangement);
  CriterionReport report;
  if (o.criterion == "all") {
    report = run_all(ctx, ro);
  } else {
    report.results.push_back(run_criterion(ctx, o.criterion, ro));
    if (report.results.back().fired()) report.best_level = report.results.back().level;
    report.nonresonant = report.best_level == ctx.n();
  }
  Json j = to_json(doc.arrangement, report);
  if (json_output(o)) {
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : j["results"]) print_result_line(r);
    std::cout << "verdict: " << j["verdict"].get<std::string>() << "\n";
  }
  return report.nonresonant ? kCertified : kInconclusive;
}

int cmd_certify(const Options& o) {
  auto doc = load_arrangement(o.file);
  CriteriaContext ctx(doc.arrangement, doc.monodromy);
  auto result = decide_constant_combination(ctx.incidence());
  auto cert = make_certificate(ctx, result);
  write_document(o, to_json(doc.arrangement, cert).dump(2) + "\n");
  return std::holds_alternative<DeltaCertificate>(result) ? kCertified : kInconclusive;
}

int cmd_verify(const Options& o) {
  auto doc = load_arrangement(o.file);
  std::ifstream in(o.cert_file);
  if (!in) throw InputError("cannot open " + o.cert_file);
  std::stringstream ss;
  ss << in.rdbuf();
  auto cert = parse_certificate(doc.arrangement, ss.str());
  Verdict v = verify_certificate(doc, cert);
  const bool delta = std::holds_alternative<DeltaCertificate>(cert.certificate);
  if (json_output(o)) {
    Json j{{"accepted", v.accepted}, {"type", delta ? "delta" : "lambda"}};
    if (!v.accepted) j["reason"] = v.reason;
    std::cout << j.dump(2) << "\n";
  } else if (v.accepted) {
    std::cout << (delta ? "delta" : "lambda") << " certificate accepted\n";
  } else {
    std::cout << "certificate rejected: " << v.reason << "\n";
  }
  if (!v.accepted) return kInputError;
  return delta ? kCertified : kInconclusive;
}

int cmd_cohomology(const Options& o) {
  auto doc = load_arrangement(o.file);
  const std::size_t at = o.decone.empty() ? 0 : doc.arrangement.index_of(o.decone);
  auto dims = twisted_cohomology(doc.arrangement, doc.monodromy, at);
  Json j = to_json(doc.arrangement, dims);
  if (json_output(o)) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "h = (" << dims.h0 << ", " << dims.h1 << ", " << dims.h2 << ")\n"
              << "chi = " << dims.chi << "\n"
              << "decone_at = " << doc.arrangement.label(at) << "\n"
              << "presentation: " << dims.generators << " generators, " << dims.relators
              << " relators\n";
  }
  return dims.h0 + dims.h1 > 0 ? kOracleNonzero : kCertified;
}

RandomSearch search_options(const Options& o) {
  RandomSearch s;
  s.seed = o.seed;
  return s;
}

int cmd_lift(const Options& o) {
  auto doc = load_arrangement(o.file);
  auto b = parse_partition(doc.arrangement, o.partition);
  auto lift = lift_bipartition(doc.arrangement, b, search_options(o));
  write_document(o, serialize(lifted_document(doc, lift)));
  return kCertified;
}

int cmd_section(const Options& o) {
  auto doc = load_arrangement(o.file);
  auto flat = parse_flat(doc.arrangement, o.flat);
  auto section = generic_section(doc.arrangement, flat, search_options(o));
  write_document(o, serialize(section_document(doc, flat, section)));
  return kCertified;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact nonresonance criteria for rank-one local systems on arrangement complements"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto add = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", o.file, "Arrangement document (JSON)")->required();
    return sub;
  };
  auto* lattice = add("lattice", "Intersection lattice and Poincare polynomial");
  auto* resonant = add("resonant", "Resonant flats");
  auto* check = add("check", "Run nonresonance criteria");
  check->add_option("--criterion", o.criterion, "Criterion to run")
      ->check(CLI::IsMember(
          {"cdo", "lambda", "point", "bipartition", "bipartition-general", "shelter", "all"}))
      ->capture_default_str();
  check->add_option("--partition", o.partition, "Bipartition, e.g. H1,H2|H3,H4");
  check->add_option("--flat", o.flat, "Irreducible flat for the shelter criterion, e.g. H1,H2,H3");
  check->add_flag("--search-partitions", o.search_partitions,
                  "Brute-force search for a general bipartition");
  auto* certify = add("certify", "Emit a delta certificate or lambda witness");
  certify->add_option("-o,--output", o.output, "Write the certificate to this file");
  auto* verify = add("verify-cert", "Verify a certificate against an arrangement");
  verify->add_option("certificate", o.cert_file, "Certificate document (JSON)")->required();
  auto* cohomology = add("cohomology", "Twisted cohomology of a real line arrangement");
  cohomology->add_option("--decone", o.decone, "Label of the hyperplane sent to infinity");
  auto* lift = add("lift", "Lift along a bipartition");
  lift->add_option("--partition", o.partition, "Bipartition, e.g. H1,H2|H3,H4")->required();
  auto* section = add("section", "Generic section through an irreducible flat");
  section->add_option("--flat", o.flat, "Irreducible flat, e.g. H1,H2,H3")->required();
  for (auto* sub : {lift, section}) {
    sub->add_option("--seed", o.seed, "Seed of the coefficient generator");
    sub->add_option("-o,--output", o.output, "Write the document to this file");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (lattice->parsed()) return cmd_lattice(o);
    if (resonant->parsed()) return cmd_resonant(o);
    if (check->parsed()) return cmd_check(o);
    if (certify->parsed()) return cmd_certify(o);
    if (verify->parsed()) return cmd_verify(o);
    if (cohomology->parsed()) return cmd_cohomology(o);
    if (lift->parsed()) return cmd_lift(o);
    if (section->parsed()) return cmd_section(o);
  } catch (const RetryBudgetExhausted& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
