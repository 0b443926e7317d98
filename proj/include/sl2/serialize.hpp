#pragma once

// Text, JSON and DOT renderings.
//
// JSON schema (all weights are integers):
//   character      [[exponent, coefficient], ...], exponents descending
//   diagram        {"layers": [[w, ...], ...], "edges": [[[l, i], [l', j]], ...]}
//   decomposition  {"p", "r", "s", "summands": [{"u": [...], "kind", "weight", "socle"}]}
//   structure      {"p", "r", "other", "case", "kind", "simple_weight", "components",
//                   "diagram", "family_weights", "residue", "shift_k",
//                   "base_tilting", "via_natural"}

#include <string>

#include <json.hpp>

#include "sl2/classify.hpp"
#include "sl2/decompose.hpp"
#include "sl2/diagram.hpp"
#include "sl2/structure.hpp"

namespace sl2 {

using Json = nlohmann::json;

std::string kind_name(SummandKind k);
SummandKind parse_summand_kind(const std::string& s);
std::string case_name(StructureCase c);
StructureCase parse_structure_case(const std::string& s);

/// "T(w)", "L(w)" or "J(u0,...,um; socle=w)".
std::string summand_text(const Summand& s);
/// Summands joined by " ⊕ ".
std::string decomposition_text(const Decomposition& d);
/// "[2,0,4,0,2] = T(4)", "layers [4 | 6,0 | 4] = T(6)", "T(7) ⊕ L(5)", "L(7)".
std::string structure_text(const StructureReport& rep);
std::string series_text(const std::vector<Weight>& series);

Json character_to_json(const FormalCharacter& x);
FormalCharacter character_from_json(const Json& j);
Json factors_to_json(const FactorMultiset& f);

Json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const Json& j);

Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json structure_to_json(const StructureReport& rep);
StructureReport structure_from_json(const Json& j);

Json factorization_to_json(const FactorizationReport& f);

/// Undirected graph, bottom-to-top, one rank=same group per layer.
std::string diagram_dot(const Diagram& d, const std::string& name = "M");
/// Split sums become one cluster per component (simple or twisted tilting).
std::string structure_dot(const StructureReport& rep);

}  // namespace sl2
