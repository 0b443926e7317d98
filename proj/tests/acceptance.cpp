// One PASS/FAIL line per acceptance criterion. Exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "sl2/corpus.hpp"
#include "sl2/sweep.hpp"

using namespace sl2;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " C" << id << " " << name << ": " << detail << std::endl;
}

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

std::string suite_detail(const SuiteResult& r) {
  std::string out = std::to_string(r.checks) + " checks, " + std::to_string(r.mismatches) + " mismatches";
  for (const auto& e : r.examples) out += "\n    mismatch " + e;
  return out;
}

void corpus(int id, const std::string& file, std::size_t min_entries) {
  const auto start = Clock::now();
  const auto entries = load_corpus(std::string(SL2_DATA_DIR) + "/" + file);
  const auto rep = verify_corpus(entries);
  const double t = since(start);
  std::string detail = std::to_string(rep.passed) + "/" + std::to_string(rep.total) + " entries, " +
                       std::to_string(rep.exact_checks) + " exact, " + std::to_string(rep.layer_checks) +
                       " layers, " + std::to_string(rep.consistency_checks) + " consistency, " + seconds(t);
  for (const auto& f : rep.failures) detail += "\n    line " + std::to_string(f.line) + " computed " + f.computed;
  report(id, "golden corpus " + file, rep.ok() && rep.total >= min_entries && t < 1.0, detail);
}

}  // namespace

int main() {
  corpus(1, "corpus-p2.jsonl", 45);
  corpus(2, "corpus-p3.jsonl", 60);

  auto start = Clock::now();
  const auto cons = conservation_suite({2, 3, 5, 7}, 200);
  double t = since(start);
  report(3, "character conservation", cons.conservation.ok() && t < 30.0,
         suite_detail(cons.conservation) + ", " + seconds(t));

  const auto indec = indecomposability_suite({2, 3, 5}, 500);
  report(4, "indecomposability predicate", indec.ok(), suite_detail(indec));

  report(5, "tilting classification", cons.tilting.ok(), suite_detail(cons.tilting));

  const auto fact = factorization_suite({2, 3, 5}, 200);
  std::string detail = suite_detail(fact);
  for (const auto& n : fact.notes) detail += "\n    " + n;
  report(6, "factorization enumeration", fact.ok(), detail);

  start = Clock::now();
  const auto structure = structure_suite({2, 3, 5, 7});
  t = since(start);
  report(7, "structure of L(r) x L(1) and L(r) x L(2)", structure.ok() && t < 60.0,
         suite_detail(structure) + ", " + seconds(t));

  const auto weyl = weyl_simplicity_suite({2, 3, 5, 7}, 4);
  report(8, "simple Weyl modules", weyl.ok(), suite_detail(weyl));

  const auto cons9 = construction_suite({2, 3, 5}, 300);
  report(9, "tilting summand construction", cons9.ok(), suite_detail(cons9));

  return failures == 0 ? 0 : 1;
}
