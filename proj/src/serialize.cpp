#include "sl2/serialize.hpp"

#include <sstream>

namespace sl2 {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string weights_text(const std::vector<Weight>& ws, const char* sep) {
  std::vector<std::string> parts;
  for (Weight w : ws) parts.push_back(std::to_string(w));
  return join(parts, sep);
}

std::string component_text(const Component& c) {
  if (c.kind == Component::Kind::Simple) return "L(" + std::to_string(c.weight) + ")";
  std::string out = "T(" + std::to_string(c.weight) + ")";
  if (c.k != 0) out += " ⊗ L(" + std::to_string(c.k) + ")^(F^" + std::to_string(c.level) + ")";
  return out;
}

// Name of the module a uniserial/biserial report describes.
std::string family_module_text(const StructureReport& rep) {
  if (!rep.base_tilting) return "";
  Component c{Component::Kind::TwistedTilting, *rep.base_tilting, rep.shift_k, rep.residue ? rep.residue->t + 1 : 0};
  if (rep.shift_k == 0) c.weight = rep.family_weights.front();
  return component_text(c);
}

Json optional_weight(const std::optional<Weight>& w) { return w ? Json(*w) : Json(nullptr); }

std::optional<Weight> weight_or_null(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<Weight>();
}

}  // namespace

std::string kind_name(SummandKind k) {
  switch (k) {
    case SummandKind::Tilting: return "Tilting";
    case SummandKind::Simple: return "Simple";
    case SummandKind::SimpleTilting: return "SimpleTilting";
    case SummandKind::Neither: return "Neither";
  }
  return "";
}

SummandKind parse_summand_kind(const std::string& s) {
  for (auto k : {SummandKind::Tilting, SummandKind::Simple, SummandKind::SimpleTilting, SummandKind::Neither})
    if (kind_name(k) == s) return k;
  throw PreconditionError("unknown summand kind '" + s + "'");
}

std::string case_name(StructureCase c) {
  switch (c) {
    case StructureCase::Simple: return "Simple";
    case StructureCase::SplitSum: return "SplitSum";
    case StructureCase::Uniserial: return "Uniserial";
    case StructureCase::Biserial: return "Biserial";
  }
  return "";
}

StructureCase parse_structure_case(const std::string& s) {
  for (auto c : {StructureCase::Simple, StructureCase::SplitSum, StructureCase::Uniserial, StructureCase::Biserial})
    if (case_name(c) == s) return c;
  throw PreconditionError("unknown structure kind '" + s + "'");
}

std::string summand_text(const Summand& s) {
  const Weight w = s.cls.weight;
  const Weight p = s.profile.p;
  switch (s.cls.kind) {
    case SummandKind::Tilting: return "T(" + std::to_string(w) + ")";
    case SummandKind::Simple: return "L(" + std::to_string(w) + ")";
    case SummandKind::SimpleTilting: return (w <= p - 1 ? "L(" : "T(") + std::to_string(w) + ")";
    case SummandKind::Neither: break;
  }
  return "J(" + weights_text(s.profile.trimmed(), ",") + "; socle=" + std::to_string(s.profile.socle_weight()) + ")";
}

std::string decomposition_text(const Decomposition& d) {
  std::vector<std::string> parts;
  for (const auto& s : d.summands) parts.push_back(summand_text(s));
  return join(parts, " ⊕ ");
}

std::string series_text(const std::vector<Weight>& series) { return "[" + weights_text(series, ",") + "]"; }

std::string structure_text(const StructureReport& rep) {
  switch (rep.kind) {
    case StructureCase::Simple:
      return "L(" + std::to_string(rep.simple_weight) + ")";
    case StructureCase::SplitSum: {
      std::vector<std::string> parts;
      for (const auto& c : rep.components) parts.push_back(component_text(c));
      return join(parts, " ⊕ ");
    }
    case StructureCase::Uniserial:
      return series_text(rep.series()) + " = " + family_module_text(rep);
    case StructureCase::Biserial: {
      std::vector<std::string> layers;
      for (const auto& l : rep.diagram.layers()) layers.push_back(weights_text(l, ","));
      return "layers [" + join(layers, " | ") + "] = " + family_module_text(rep);
    }
  }
  return "";
}

Json character_to_json(const FormalCharacter& x) {
  Json out = Json::array();
  for (const auto& [e, c] : x.terms()) out.push_back({e, c});
  return out;
}

FormalCharacter character_from_json(const Json& j) {
  std::vector<FormalCharacter::Term> terms;
  for (const auto& t : j) terms.emplace_back(t.at(0).get<Weight>(), t.at(1).get<std::int64_t>());
  return FormalCharacter(std::move(terms));
}

Json factors_to_json(const FactorMultiset& f) {
  Json out = Json::array();
  for (auto it = f.rbegin(); it != f.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

Json diagram_to_json(const Diagram& d) {
  Json edges = Json::array();
  for (const auto& [a, b] : d.edges()) edges.push_back({{a.layer, a.pos}, {b.layer, b.pos}});
  return {{"layers", d.layers()}, {"edges", edges}};
}

Diagram diagram_from_json(const Json& j) {
  auto layers = j.at("layers").get<std::vector<std::vector<Weight>>>();
  std::vector<Edge> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges"))
      edges.push_back({{e.at(0).at(0).get<int>(), e.at(0).at(1).get<int>()},
                       {e.at(1).at(0).get<int>(), e.at(1).at(1).get<int>()}});
  for (const auto& [a, b] : edges)
    for (const auto& v : {a, b})
      if (v.layer < 0 || v.layer >= static_cast<int>(layers.size()) || v.pos < 0 ||
          v.pos >= static_cast<int>(layers[v.layer].size()))
        throw PreconditionError("diagram edge refers to a missing vertex");
  return Diagram(std::move(layers), std::move(edges));
}

Json decomposition_to_json(const Decomposition& d) {
  Json summands = Json::array();
  for (const auto& s : d.summands)
    summands.push_back({{"u", s.profile.u},
                        {"kind", kind_name(s.cls.kind)},
                        {"weight", s.cls.weight},
                        {"socle", s.profile.socle_weight()},
                        {"text", summand_text(s)}});
  return {{"p", d.p.value()}, {"r", d.r}, {"s", d.s}, {"summands", summands}, {"text", decomposition_text(d)}};
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d{Prime(j.at("p").get<std::int64_t>()), j.at("r").get<Weight>(), j.at("s").get<Weight>(), {}};
  for (const auto& s : j.at("summands")) {
    SummandProfile prof{d.p, s.at("u").get<std::vector<Weight>>()};
    SummandClass cls{parse_summand_kind(s.at("kind").get<std::string>()), s.at("weight").get<Weight>()};
    d.summands.push_back({std::move(prof), cls});
  }
  return d;
}

Json structure_to_json(const StructureReport& rep) {
  Json comps = Json::array();
  for (const auto& c : rep.components)
    comps.push_back({{"kind", c.kind == Component::Kind::Simple ? "Simple" : "TwistedTilting"},
                     {"weight", c.weight},
                     {"k", c.k},
                     {"level", c.level}});
  Json residue = nullptr;
  if (rep.residue) residue = {{"t", rep.residue->t}, {"a", rep.residue->a}, {"k", rep.residue->k}};
  return {{"p", rep.p.value()},
          {"r", rep.r},
          {"other", rep.other},
          {"case", rep.theorem_case},
          {"kind", case_name(rep.kind)},
          {"simple_weight", rep.simple_weight},
          {"components", comps},
          {"diagram", diagram_to_json(rep.diagram)},
          {"family_weights", rep.family_weights},
          {"residue", residue},
          {"shift_k", rep.shift_k},
          {"base_tilting", optional_weight(rep.base_tilting)},
          {"via_natural", optional_weight(rep.via_natural)},
          {"text", structure_text(rep)}};
}

StructureReport structure_from_json(const Json& j) {
  StructureReport rep{Prime(j.at("p").get<std::int64_t>())};
  rep.r = j.at("r").get<Weight>();
  rep.other = j.at("other").get<int>();
  rep.theorem_case = j.at("case").get<std::string>();
  rep.kind = parse_structure_case(j.at("kind").get<std::string>());
  rep.simple_weight = j.at("simple_weight").get<Weight>();
  for (const auto& c : j.at("components")) {
    const auto kind = c.at("kind").get<std::string>();
    if (kind != "Simple" && kind != "TwistedTilting") throw PreconditionError("unknown component kind '" + kind + "'");
    rep.components.push_back({kind == "Simple" ? Component::Kind::Simple : Component::Kind::TwistedTilting,
                              c.at("weight").get<Weight>(), c.at("k").get<Weight>(), c.at("level").get<int>()});
  }
  rep.diagram = diagram_from_json(j.at("diagram"));
  rep.family_weights = j.at("family_weights").get<std::vector<Weight>>();
  if (const auto& r = j.at("residue"); !r.is_null())
    rep.residue = ResidueData{r.at("t").get<int>(), r.at("a").get<Weight>(), r.at("k").get<Weight>()};
  rep.shift_k = j.at("shift_k").get<Weight>();
  rep.base_tilting = weight_or_null(j.at("base_tilting"));
  rep.via_natural = weight_or_null(j.at("via_natural"));
  return rep;
}

Json factorization_to_json(const FactorizationReport& f) {
  Json pairs = Json::array();
  for (const auto& pr : f.pairs) pairs.push_back({pr.r, pr.s});
  Json out = {{"p", f.p.value()},
              {"u", f.u},
              {"admissible", admissible_expansion(f.u, f.p).digits},
              {"factorizable", f.factorizable},
              {"pairs", pairs},
              {"count", f.pairs.size()}};
  if (f.odd) out["closed_form"] = *f.odd;
  if (f.p2_all_digits) out["closed_form_t_all_digits"] = *f.p2_all_digits;
  if (f.p2_below_top) out["closed_form_t_below_top"] = *f.p2_below_top;
  return out;
}

namespace {

void emit_layers(std::ostringstream& os, const Diagram& d, const std::string& prefix, const std::string& indent) {
  for (std::size_t l = 0; l < d.layers().size(); ++l) {
    os << indent << "{ rank=same;";
    for (std::size_t k = 0; k < d.layers()[l].size(); ++k)
      os << " " << prefix << "v" << l << "_" << k << " [label=\"" << d.layers()[l][k] << "\"];";
    os << " }\n";
  }
  for (const auto& [a, b] : d.edges())
    os << indent << prefix << "v" << a.layer << "_" << a.pos << " -- " << prefix << "v" << b.layer << "_" << b.pos
       << ";\n";
}

}  // namespace

std::string diagram_dot(const Diagram& d, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  emit_layers(os, d, "", "  ");
  os << "}\n";
  return os.str();
}

std::string structure_dot(const StructureReport& rep) {
  const std::string name = "L(" + std::to_string(rep.r) + ") x L(" + std::to_string(rep.other) + ")";
  switch (rep.kind) {
    case StructureCase::Uniserial:
    case StructureCase::Biserial:
      return diagram_dot(rep.diagram, name);
    case StructureCase::Simple:
      return diagram_dot(Diagram::chain({rep.simple_weight}), name);
    case StructureCase::SplitSum:
      break;
  }
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (std::size_t i = 0; i < rep.components.size(); ++i) {
    const auto& c = rep.components[i];
    // Components are drawn as single nodes; their internal structure is not
    // part of the report.
    os << "  c" << i << " [label=\"" << component_text(c) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sl2
