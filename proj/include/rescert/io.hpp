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

#ifndef RESCERT_IO_HPP_
#define RESCERT_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "rescert/arrangement.hpp"
#include "rescert/certificates.hpp"
#include "rescert/constructions.hpp"
#include "rescert/criteria.hpp"
#include "rescert/local_system.hpp"
#include "rescert/oracle.hpp"

namespace rescert {

using Json = nlohmann::ordered_json;

/// Arrangement document:
///   {"name": ..., "ambient_dim": n, "hyperplanes": [["1", "-1/2", "0"], ...],
///    "monodromy_exponents": ["1/3", ...], "labels": [...], "provenance": {...}}
/// name, labels and provenance are optional.
struct ArrangementDocument {
  std::string name;
  Arrangement arrangement;
  MonodromyMap monodromy;
  Json provenance;
};

/// Throws InputError with a JSON pointer (or line and column for syntax
/// errors) in the message.
ArrangementDocument parse_arrangement(std::string_view text);
ArrangementDocument load_arrangement(const std::filesystem::path& path);

/// Canonical document: normalized forms, exponents reduced into [0, 1),
/// explicit labels, fixed key order.
Json to_json(const ArrangementDocument& doc);
std::string serialize(const ArrangementDocument& doc);

/// SHA-256 hex digest of the canonical ambient_dim, hyperplanes, labels and
/// exponents; name and provenance do not contribute.
std::string content_hash(const Arrangement& a, const MonodromyMap& m);

Json flat_to_json(const Arrangement& a, IndexSet members);
/// Label list to index set; throws InputError on unknown or repeated labels.
IndexSet parse_label_set(const Arrangement& a, const Json& labels, const std::string& where);
/// "H1,H2|H3,H4" to a partition; throws InputError.
Bipartition parse_partition(const Arrangement& a, std::string_view text);
/// "H1,H2,H3" to a flat of `a`; throws InputError unless it is a flat.
Flat parse_flat(const Arrangement& a, std::string_view text);

struct CertificateDocument {
  ConstantCombinationResult certificate;
  std::vector<IndexSet> resonant_flats;
  std::string arrangement_hash;
};

CertificateDocument make_certificate(const CriteriaContext& ctx,
                                     const ConstantCombinationResult& result);
Json to_json(const Arrangement& a, const CertificateDocument& cert);
/// Throws InputError on schema violations and unknown labels.
CertificateDocument parse_certificate(const Arrangement& a, std::string_view text);

/// Re-derives the resonant flats from the arrangement and checks the hash,
/// the flat list and the certificate itself.
Verdict verify_certificate(const ArrangementDocument& doc, const CertificateDocument& cert);

Json to_json(const Arrangement& a, const CriterionResult& r);
Json to_json(const Arrangement& a, const CriterionReport& report);
Json to_json(const Arrangement& a, const CohomologyDims& dims);
Json lattice_to_json(const Arrangement& a, const IntersectionLattice& lattice);

/// Arrangement documents for constructed arrangements, with provenance.
ArrangementDocument lifted_document(const ArrangementDocument& base,
                                    const LiftedArrangement& lift);
ArrangementDocument section_document(const ArrangementDocument& base, const Flat& i,
                                     const GenericSection& section);

}  // namespace rescert

#endif  // RESCERT_IO_HPP_
