#include "sl2/corpus.hpp"

#include <algorithm>
#include <fstream>

#include "sl2/predict.hpp"
#include "sl2/serialize.hpp"

namespace sl2 {

std::string Descriptor::text() const {
  switch (kind) {
    case Kind::Tilting: return "T(" + std::to_string(weight) + ")";
    case Kind::Simple: return "L(" + std::to_string(weight) + ")";
    case Kind::Series: return series_text(series);
    case Kind::Diagram: break;
  }
  std::string out = "layers [";
  for (std::size_t l = 0; l < diagram.layers().size(); ++l) {
    if (l) out += " | ";
    for (std::size_t k = 0; k < diagram.layers()[l].size(); ++k)
      out += (k ? "," : "") + std::to_string(diagram.layers()[l][k]);
  }
  return out + "]";
}

namespace {

Weight max_weight(const std::vector<Weight>& ws) { return *std::max_element(ws.begin(), ws.end()); }

Weight nonnegative(const Json& j, const char* field) {
  if (!j.contains(field) || !j.at(field).is_number_integer()) throw PreconditionError(std::string("missing integer '") + field + "'");
  const auto v = j.at(field).get<Weight>();
  if (v < 0) throw PreconditionError(std::string("negative '") + field + "'");
  return v;
}

Descriptor parse_descriptor(const Json& j) {
  if (!j.is_object()) throw PreconditionError("descriptor is not an object");
  Descriptor d;
  int found = 0;
  if (j.contains("T")) {
    d.kind = Descriptor::Kind::Tilting;
    d.weight = nonnegative(j, "T");
    ++found;
  }
  if (j.contains("L")) {
    d.kind = Descriptor::Kind::Simple;
    d.weight = nonnegative(j, "L");
    ++found;
  }
  if (j.contains("series")) {
    d.kind = Descriptor::Kind::Series;
    d.series = j.at("series").get<std::vector<Weight>>();
    if (d.series.empty()) throw PreconditionError("empty series");
    d.weight = max_weight(d.series);
    ++found;
  }
  if (j.contains("diagram")) {
    d.kind = Descriptor::Kind::Diagram;
    d.diagram = diagram_from_json(j.at("diagram"));
    if (d.diagram.vertex_count() == 0) throw PreconditionError("empty diagram");
    d.weight = d.diagram.factors().rbegin()->first;
    d.layers_only = j.value("layers_only", false);
    ++found;
  }
  if (found != 1) throw PreconditionError("descriptor needs exactly one of T, L, series, diagram");
  return d;
}

bool palindrome(const std::vector<Weight>& s) { return std::equal(s.begin(), s.end(), s.rbegin()); }

// Structural descriptor against a computed summand. Appends problems and
// returns the level actually checked.
CheckLevel check_structure(const Descriptor& d, const Summand& s, std::vector<std::string>& problems) {
  const auto where = d.text() + ": ";
  const Weight socle = s.profile.socle_weight();
  const Diagram expected = d.kind == Descriptor::Kind::Series ? Diagram::chain(d.series) : d.diagram;

  if (expected.factors() != summand_factors(s.profile)) problems.push_back(where + "composition factors differ");
  if (expected.layers().front() != std::vector<Weight>{socle}) problems.push_back(where + "bottom layer is not the socle");
  if (expected.layers().back() != std::vector<Weight>{socle}) problems.push_back(where + "top layer is not the head");
  if (!is_self_dual(expected)) problems.push_back(where + "not self-dual");
  if (d.kind == Descriptor::Kind::Diagram && !expected.is_well_layered()) problems.push_back(where + "not well layered");
  if (d.kind == Descriptor::Kind::Series && !palindrome(d.series)) problems.push_back(where + "series is not a palindrome");

  const auto pred = predict_summand_structure(s.profile);
  if (!pred) return CheckLevel::Consistency;
  if (pred->level == PredictionLevel::Exact && !d.layers_only) {
    const bool same = d.kind == Descriptor::Kind::Series ? pred->diagram.is_chain() && pred->diagram.series() == d.series
                                                         : isomorphic(pred->diagram, expected);
    if (!same) problems.push_back(where + "differs from derived structure " + Descriptor{Descriptor::Kind::Diagram, 0, {}, pred->diagram}.text());
    return CheckLevel::Exact;
  }
  if (!same_layers(pred->diagram, expected))
    problems.push_back(where + "socle layers differ from derived " + Descriptor{Descriptor::Kind::Diagram, 0, {}, pred->diagram}.text());
  return CheckLevel::Layers;
}

}  // namespace

CorpusEntry parse_corpus_line(const std::string& text, std::size_t line) {
  try {
    const Json j = Json::parse(text);
    if (!j.is_object()) throw PreconditionError("entry is not an object");
    if (!j.contains("p") || !j.at("p").is_number_integer()) throw PreconditionError("missing integer 'p'");
    CorpusEntry e{Prime(j.at("p").get<std::int64_t>())};
    e.r = nonnegative(j, "r");
    e.s = nonnegative(j, "s");
    e.line = line;
    e.source = j.value("source", "");
    if (!j.contains("expected") || !j.at("expected").is_array() || j.at("expected").empty())
      throw PreconditionError("missing nonempty 'expected' list");
    for (const auto& d : j.at("expected")) e.expected.push_back(parse_descriptor(d));
    return e;
  } catch (const CorpusParseError&) {
    throw;
  } catch (const std::exception& ex) {
    throw CorpusParseError(line, ex.what());
  }
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string text;
  std::size_t line = 0;
  while (std::getline(in, text)) {
    ++line;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    out.push_back(parse_corpus_line(text, line));
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open corpus file '" + path + "'");
  return parse_corpus(in);
}

EntryResult check_entry(const CorpusEntry& e) {
  EntryResult res;
  const auto d = decompose(e.r, e.s, e.p);
  res.computed = decomposition_text(d);

  auto expected = e.expected;
  std::stable_sort(expected.begin(), expected.end(),
                   [](const Descriptor& a, const Descriptor& b) { return a.weight > b.weight; });
  if (expected.size() != d.summands.size())
    res.problems.push_back("expected " + std::to_string(expected.size()) + " summands, computed " +
                           std::to_string(d.summands.size()));

  const std::size_t n = std::min(expected.size(), d.summands.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& want = expected[i];
    const auto& got = d.summands[i];
    if (got.cls.weight != want.weight) {
      res.problems.push_back(want.text() + ": computed summand has highest weight " + std::to_string(got.cls.weight));
      continue;
    }
    switch (want.kind) {
      case Descriptor::Kind::Tilting:
        if (!got.cls.is_tilting()) res.problems.push_back(want.text() + ": computed summand is " + summand_text(got));
        res.levels.push_back(CheckLevel::Label);
        break;
      case Descriptor::Kind::Simple:
        if (!got.cls.is_simple()) res.problems.push_back(want.text() + ": computed summand is " + summand_text(got));
        res.levels.push_back(CheckLevel::Label);
        break;
      case Descriptor::Kind::Series:
      case Descriptor::Kind::Diagram:
        res.levels.push_back(check_structure(want, got, res.problems));
        break;
    }
  }
  res.passed = res.problems.empty();
  return res;
}

VerifyReport verify_corpus(const std::vector<CorpusEntry>& entries) {
  VerifyReport rep;
  for (const auto& e : entries) {
    ++rep.total;
    EntryResult res;
    try {
      res = check_entry(e);
    } catch (const std::exception& ex) {
      res.passed = false;
      res.problems.push_back(std::string("error: ") + ex.what());
    }
    for (auto level : res.levels) {
      switch (level) {
        case CheckLevel::Label: ++rep.label_checks; break;
        case CheckLevel::Exact: ++rep.exact_checks; break;
        case CheckLevel::Layers: ++rep.layer_checks; break;
        case CheckLevel::Consistency: ++rep.consistency_checks; break;
      }
    }
    if (res.passed) {
      ++rep.passed;
      continue;
    }
    ++rep.failed;
    std::string expected;
    for (std::size_t i = 0; i < e.expected.size(); ++i) expected += (i ? " ⊕ " : "") + e.expected[i].text();
    rep.failures.push_back({e.line, e.source, expected, res.computed, res.problems});
  }
  return rep;
}

}  // namespace sl2
