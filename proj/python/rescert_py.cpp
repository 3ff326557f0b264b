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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "rescert/constructions.hpp"
#include "rescert/criteria.hpp"
#include "rescert/error.hpp"
#include "rescert/io.hpp"
#include "rescert/lattice.hpp"
#include "rescert/oracle.hpp"

namespace py = pybind11;
using namespace rescert;

namespace {

// Parsed arrangement document together with its criteria context.
class Problem {
 public:
  explicit Problem(ArrangementDocument doc)
      : doc_(std::move(doc)), ctx_(doc_.arrangement, doc_.monodromy) {}

  static Problem from_json(const std::string& text) { return Problem(parse_arrangement(text)); }
  static Problem load(const std::string& path) { return Problem(load_arrangement(path)); }

  const ArrangementDocument& doc() const { return doc_; }
  const CriteriaContext& ctx() const { return ctx_; }
  const Arrangement& arrangement() const { return doc_.arrangement; }

 private:
  ArrangementDocument doc_;
  CriteriaContext ctx_;
};

RunOptions options(const Problem& p, const std::optional<std::string>& partition,
                   const std::optional<std::string>& flat, bool search) {
  RunOptions r;
  r.search_general_partitions = search;
  if (partition) r.partition = parse_partition(p.arrangement(), *partition);
  if (flat) r.flat = parse_flat(p.arrangement(), *flat);
  return r;
}

RandomSearch search(std::optional<std::uint64_t> seed) {
  RandomSearch s;
  s.seed = seed;
  return s;
}

}  // namespace

PYBIND11_MODULE(_rescert, m) {
  m.doc() = "Exact nonresonance criteria for rank-one local systems on arrangement complements.";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<InputError>(m, "InputError", error.ptr());
  py::register_exception<DomainError>(m, "DomainError", error.ptr());
  py::register_exception<RetryBudgetExhausted>(m, "RetryBudgetExhausted", error.ptr());

  py::class_<Problem>(m, "Problem")
      .def_static("from_json", &Problem::from_json, py::arg("text"))
      .def_static("load", &Problem::load, py::arg("path"))
      .def_property_readonly("name", [](const Problem& p) { return p.doc().name; })
      .def_property_readonly("ambient_dim",
                             [](const Problem& p) { return p.arrangement().ambient_dim(); })
      .def_property_readonly("labels", [](const Problem& p) { return p.arrangement().labels(); })
      .def_property_readonly("content_hash",
                             [](const Problem& p) {
                               return content_hash(p.arrangement(), p.doc().monodromy);
                             })
      .def("to_json", [](const Problem& p) { return serialize(p.doc()); })
      .def("__len__", [](const Problem& p) { return p.arrangement().size(); });

  m.def("lattice_json", [](const Problem& p) {
    return lattice_to_json(p.arrangement(), p.ctx().lattice()).dump();
  });
  m.def("resonant_flats", [](const Problem& p) {
    std::vector<std::vector<std::string>> out;
    for (const auto& f : p.ctx().resonant()) {
      out.push_back(flat_to_json(p.arrangement(), f.members).get<std::vector<std::string>>());
    }
    return out;
  });
  m.def(
      "check_json",
      [](const Problem& p, const std::string& criterion, std::optional<std::string> partition,
         std::optional<std::string> flat, bool search_partitions) {
        auto ro = options(p, partition, flat, search_partitions);
        CriterionReport report;
        if (criterion == "all") {
          report = run_all(p.ctx(), ro);
        } else {
          report.results.push_back(run_criterion(p.ctx(), criterion, ro));
          if (report.results.back().fired()) report.best_level = report.results.back().level;
          report.nonresonant = report.best_level == p.ctx().n();
        }
        return to_json(p.arrangement(), report).dump();
      },
      py::arg("problem"), py::arg("criterion") = "all", py::arg("partition") = py::none(),
      py::arg("flat") = py::none(), py::arg("search_partitions") = false);
  m.def("certify_json", [](const Problem& p) {
    auto result = decide_constant_combination(p.ctx().incidence());
    return to_json(p.arrangement(), make_certificate(p.ctx(), result)).dump();
  });
  m.def(
      "verify_certificate",
      [](const Problem& p, const std::string& certificate) {
        Verdict v = verify_certificate(p.doc(), parse_certificate(p.arrangement(), certificate));
        return py::make_tuple(v.accepted, v.reason);
      },
      py::arg("problem"), py::arg("certificate"));
  m.def(
      "cohomology_json",
      [](const Problem& p, std::optional<std::string> decone) {
        const std::size_t at = decone ? p.arrangement().index_of(*decone) : 0;
        return to_json(p.arrangement(), twisted_cohomology(p.arrangement(), p.doc().monodromy, at))
            .dump();
      },
      py::arg("problem"), py::arg("decone") = py::none());
  m.def(
      "lift_json",
      [](const Problem& p, const std::string& partition, std::optional<std::uint64_t> seed) {
        auto b = parse_partition(p.arrangement(), partition);
        return serialize(lifted_document(p.doc(), lift_bipartition(p.arrangement(), b, search(seed))));
      },
      py::arg("problem"), py::arg("partition"), py::arg("seed") = py::none());
  m.def(
      "section_json",
      [](const Problem& p, const std::string& flat, std::optional<std::uint64_t> seed) {
        auto f = parse_flat(p.arrangement(), flat);
        return serialize(section_document(p.doc(), f, generic_section(p.arrangement(), f, search(seed))));
      },
      py::arg("problem"), py::arg("flat"), py::arg("seed") = py::none());
}
