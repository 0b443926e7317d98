#include "sl2/commands.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "sl2/classify.hpp"
#include "sl2/corpus.hpp"
#include "sl2/serialize.hpp"
#include "sl2/structure.hpp"
#include "sl2/sweep.hpp"

namespace sl2 {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string character_text(const FormalCharacter& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : x.terms()) {
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const auto a = c < 0 ? -c : c;
    if (a != 1) out += std::to_string(a);
    out += "q^" + std::to_string(e);
  }
  return out;
}

std::string multiset_text(const std::map<Weight, std::int64_t>& m) {
  std::string out;
  for (auto it = m.rbegin(); it != m.rend(); ++it)
    out += (out.empty() ? "" : ", ") + std::to_string(it->first) + ":" + std::to_string(it->second);
  return "{" + out + "}";
}

Json signed_multiset_json(const std::map<Weight, std::int64_t>& m) {
  Json out = Json::array();
  for (auto it = m.rbegin(); it != m.rend(); ++it) out.push_back({it->first, it->second});
  return out;
}

std::string digits_text(const std::vector<Weight>& d) { return series_text(d); }

void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw UsageError("unsupported --format '" + f + "'");
}

struct Options {
  std::int64_t p = 0;
  std::string format = "text";
  std::string out_path;
  Weight r = 0, s = 0, u = 0, w = 0;
  int with = 1;
  std::string kind = "weyl";
  std::string tilting_action;
  std::string corpus_path;
  std::string primes = "2,3,5,7";
  Weight max_weight = 200;
  std::uint64_t seed = 1;
  int threads = 0;
};

std::vector<std::int64_t> parse_primes(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    try {
      std::size_t used = 0;
      const auto v = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(Prime(v).value());
    } catch (const PreconditionError&) {
      throw;
    } catch (const std::exception&) {
      throw UsageError("bad prime list '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("empty prime list");
  return out;
}

CommandResult cmd_decompose(const Options& o) {
  require_format(o.format, {"text", "json"});
  const auto d = decompose(o.r, o.s, Prime(o.p));
  if (o.format == "json") return {0, decomposition_to_json(d).dump(2) + "\n", ""};
  return {0, decomposition_text(d) + "\n", ""};
}

CommandResult cmd_structure(const Options& o) {
  require_format(o.format, {"text", "json", "dot"});
  if (o.with != 1 && o.with != 2) throw UsageError("--with must be 1 or 2");
  const Prime p(o.p);
  const auto rep = o.with == 1 ? tensor_with_natural(o.r, p) : tensor_with_L2(o.r, p);
  if (o.format == "json") return {0, structure_to_json(rep).dump(2) + "\n", ""};
  if (o.format == "dot") return {0, structure_dot(rep), ""};
  return {0, structure_text(rep) + "\n", ""};
}

CommandResult cmd_tilting(const Options& o) {
  require_format(o.format, {"text", "json"});
  const Prime p(o.p);
  if (o.u < 0) throw PreconditionError("negative weight");
  if (o.tilting_action == "expand") {
    const auto e = admissible_expansion(o.u, p);
    if (o.format == "json") return {0, Json{{"p", o.p}, {"u", o.u}, {"admissible", e.digits}}.dump(2) + "\n", ""};
    std::string factors;
    for (std::size_t i = 0; i < e.digits.size(); ++i) {
      if (i) factors += " ⊗ ";
      factors += "T(" + std::to_string(e.digits[i]) + ")";
      if (i == 1) factors += "^F";
      if (i > 1) factors += "^(F^" + std::to_string(i) + ")";
    }
    return {0, "T(" + std::to_string(o.u) + ") = " + factors + "  admissible " + digits_text(e.digits) + "\n", ""};
  }
  if (o.tilting_action == "char") {
    const auto ch = tilting_character(o.u, p);
    if (o.format == "json")
      return {0,
              Json{{"p", o.p},
                   {"u", o.u},
                   {"character", character_to_json(ch)},
                   {"simple_factors", factors_to_json(peel_into_simples(ch, p))},
                   {"weyl_multiplicities", signed_multiset_json(peel_into_weyls(ch))}}
                      .dump(2) + "\n",
              ""};
    return {0,
            "ch T(" + std::to_string(o.u) + ") = " + character_text(ch) + "\nsimple factors " +
                multiset_text(peel_into_simples(ch, p)) + "\nweyl multiplicities " + multiset_text(peel_into_weyls(ch)) +
                "\n",
            ""};
  }
  if (o.tilting_action == "factorize") {
    const auto rep = enumerate_tilting_factorizations(o.u, p);
    if (o.format == "json") return {0, factorization_to_json(rep).dump(2) + "\n", ""};
    std::ostringstream os;
    os << "T(" << o.u << ") admissible " << digits_text(admissible_expansion(o.u, p).digits) << "\n";
    if (rep.pairs.empty()) os << "no factorization L(r) ⊗ L(s) = T(" << o.u << ")\n";
    for (const auto& pr : rep.pairs) os << "L(" << pr.r << ") ⊗ L(" << pr.s << ") = T(" << o.u << ")\n";
    os << "count " << rep.pairs.size();
    if (rep.odd) os << ", closed form " << *rep.odd;
    if (rep.p2_below_top)
      os << ", closed form 2^t: t below top " << *rep.p2_below_top << ", t over all digits " << *rep.p2_all_digits;
    os << "\n";
    return {0, os.str(), ""};
  }
  throw UsageError("tilting needs one of expand, char, factorize");
}

CommandResult cmd_char(const Options& o) {
  require_format(o.format, {"text", "json"});
  const Prime p(o.p);
  if (o.w < 0) throw PreconditionError("negative weight");
  if (o.kind == "peel") {
    const auto weyl = peel_into_simples(weyl_character(o.w), p);
    const auto simple = peel_into_weyls(simple_character(o.w, p));
    const auto tilt = peel_into_weyls(tilting_character(o.w, p));
    if (o.format == "json")
      return {0,
              Json{{"p", o.p},
                   {"w", o.w},
                   {"weyl_simple_factors", factors_to_json(weyl)},
                   {"simple_in_weyls", signed_multiset_json(simple)},
                   {"tilting_in_weyls", signed_multiset_json(tilt)}}
                      .dump(2) + "\n",
              ""};
    return {0,
            "nabla(" + std::to_string(o.w) + ") simple factors " + multiset_text(weyl) + "\nL(" + std::to_string(o.w) +
                ") in Weyl characters " + multiset_text(simple) + "\nT(" + std::to_string(o.w) +
                ") in Weyl characters " + multiset_text(tilt) + "\n",
            ""};
  }
  FormalCharacter ch;
  std::string name;
  if (o.kind == "weyl") {
    ch = weyl_character(o.w);
    name = "nabla";
  } else if (o.kind == "simple") {
    ch = simple_character(o.w, p);
    name = "L";
  } else if (o.kind == "tilting") {
    ch = tilting_character(o.w, p);
    name = "T";
  } else {
    throw UsageError("--kind must be weyl, simple, tilting or peel");
  }
  if (o.format == "json")
    return {0,
            Json{{"p", o.p}, {"kind", o.kind}, {"w", o.w}, {"dimension", dimension(ch)}, {"character", character_to_json(ch)}}
                    .dump(2) + "\n",
            ""};
  return {0, "ch " + name + "(" + std::to_string(o.w) + ") = " + character_text(ch) + "\n", ""};
}

CommandResult cmd_verify(const Options& o) {
  require_format(o.format, {"text", "json"});
  std::vector<CorpusEntry> entries;
  try {
    entries = load_corpus(o.corpus_path);
  } catch (const CorpusParseError& e) {
    return {2, "", o.corpus_path + ":" + e.what() + "\n"};
  }
  const auto rep = verify_corpus(entries);
  const int code = rep.ok() ? 0 : 1;
  if (o.format == "json") {
    Json failures = Json::array();
    for (const auto& f : rep.failures)
      failures.push_back({{"line", f.line},
                          {"source", f.source},
                          {"expected", f.expected},
                          {"computed", f.computed},
                          {"problems", f.problems}});
    Json j{{"total", rep.total},
           {"passed", rep.passed},
           {"failed", rep.failed},
           {"checks",
            {{"label", rep.label_checks},
             {"exact", rep.exact_checks},
             {"layers", rep.layer_checks},
             {"consistency", rep.consistency_checks}}},
           {"failures", failures}};
    return {code, j.dump(2) + "\n", ""};
  }
  std::ostringstream os;
  for (const auto& f : rep.failures) {
    os << "FAIL line " << f.line << " (" << f.source << ")\n  expected " << f.expected << "\n  computed "
       << f.computed << "\n";
    for (const auto& pr : f.problems) os << "  " << pr << "\n";
  }
  os << rep.passed << "/" << rep.total << " entries pass; structure checks: " << rep.exact_checks << " exact, "
     << rep.layer_checks << " layers, " << rep.consistency_checks << " consistency; " << rep.label_checks
     << " label checks\n";
  return {code, os.str(), ""};
}

CommandResult cmd_sweep(const Options& o) {
  require_format(o.format, {"text", "json"});
  if (o.max_weight < 1) throw UsageError("--max-weight must be at least 1");
  SweepOptions opts;
  opts.primes = parse_primes(o.primes);
  opts.max_weight = o.max_weight;
  opts.seed = o.seed;
  opts.threads = o.threads;
  const auto rep = run_sweep(opts);
  const int code = rep.ok() ? 0 : 1;
  std::ostringstream timing;
  for (const auto& s : rep.suites) timing << s.name << ": " << s.seconds << " s\n";
  if (o.format == "json") {
    Json suites = Json::array();
    for (const auto& s : rep.suites)
      suites.push_back({{"name", s.name},
                        {"checks", s.checks},
                        {"mismatches", s.mismatches},
                        {"examples", s.examples},
                        {"notes", s.notes}});
    return {code, Json{{"ok", rep.ok()}, {"suites", suites}}.dump(2) + "\n", timing.str()};
  }
  std::ostringstream os;
  for (const auto& s : rep.suites) {
    os << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.checks << " checks, " << s.mismatches
       << " mismatches\n";
    for (const auto& e : s.examples) os << "  mismatch " << e << "\n";
    for (const auto& n : s.notes) os << "  note " << n << "\n";
  }
  return {code, os.str(), timing.str()};
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args) {
  Options o;
  CLI::App app{"Tensor products of simple SL2-modules in characteristic p", "sl2tilt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write output to this file");

  auto add_p = [&](CLI::App* sub) { sub->add_option("-p,--p", o.p, "Characteristic")->required(); };
  auto add_format = [&](CLI::App* sub) { sub->add_option("--format", o.format, "Output format"); };
  const auto nonneg = CLI::NonNegativeNumber;

  auto* dec = app.add_subcommand("decompose", "Indecomposable summands of L(r) (x) L(s)");
  add_p(dec);
  add_format(dec);
  dec->add_option("r", o.r)->required()->check(nonneg);
  dec->add_option("s", o.s)->required()->check(nonneg);

  auto* st = app.add_subcommand("structure", "Structure of L(r) (x) L(1) or L(r) (x) L(2)");
  add_p(st);
  add_format(st);
  st->add_option("r", o.r)->required()->check(nonneg);
  st->add_option("--with", o.with, "Second factor, 1 or 2");

  auto* til = app.add_subcommand("tilting", "Tilting modules T(u)");
  til->require_subcommand(1);
  for (const char* action : {"expand", "char", "factorize"}) {
    auto* sub = til->add_subcommand(action);
    add_p(sub);
    add_format(sub);
    sub->add_option("u", o.u)->required()->check(nonneg);
    sub->callback([&o, action] { o.tilting_action = action; });
  }

  auto* ch = app.add_subcommand("char", "Formal characters");
  add_p(ch);
  add_format(ch);
  ch->add_option("--kind", o.kind, "weyl, simple, tilting or peel");
  ch->add_option("w", o.w)->required()->check(nonneg);

  auto* ver = app.add_subcommand("verify-corpus", "Check a JSONL corpus of worked products");
  add_format(ver);
  ver->add_option("path", o.corpus_path)->required();

  auto* sw = app.add_subcommand("sweep", "Property sweeps");
  add_format(sw);
  sw->add_option("--primes", o.primes, "Comma-separated primes");
  sw->add_option("--max-weight", o.max_weight);
  sw->add_option("--seed", o.seed);
  sw->add_option("--threads", o.threads);

  CommandResult res;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (*dec)
      res = cmd_decompose(o);
    else if (*st)
      res = cmd_structure(o);
    else if (*til)
      res = cmd_tilting(o);
    else if (*ch)
      res = cmd_char(o);
    else if (*ver)
      res = cmd_verify(o);
    else
      res = cmd_sweep(o);
  } catch (const CLI::CallForHelp&) {
    return {0, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {0, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const UsageError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const PreconditionError& e) {
    return {2, "", std::string(e.what()) + "\n"};
  } catch (const InvariantViolation& e) {
    return {3, "", std::string("invariant violation: ") + e.what() + "\n"};
  } catch (const NotAModuleCharacter& e) {
    return {3, "", std::string("not a module character: ") + e.what() + "\n"};
  }

  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path);
    if (!f) return {2, "", "cannot write '" + o.out_path + "'\n"};
    f << res.out;
    res.out.clear();
  }
  return res;
}

}  // namespace sl2
