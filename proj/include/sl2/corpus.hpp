#pragma once

// Golden corpus of worked tensor products, one JSON object per line:
//   {"p": 3, "r": 8, "s": 8,
//    "expected": [{"T": 16}, {"L": 5}, {"series": [...]},
//                 {"diagram": {"layers": [...], "edges": [...]}, "layers_only": true}],
//    "source": "..."}
// Expected summands are matched to computed ones in order of descending
// highest weight.

#include <cstddef>
#include <istream>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

#include "sl2/decompose.hpp"
#include "sl2/diagram.hpp"

namespace sl2 {

struct Descriptor {
  enum class Kind { Tilting, Simple, Series, Diagram };
  Kind kind = Kind::Tilting;
  Weight weight = 0;            // T(w), L(w); highest weight otherwise
  std::vector<Weight> series;   // Kind::Series
  Diagram diagram;              // Kind::Diagram
  bool layers_only = false;     // Kind::Diagram: compare layer multisets only

  std::string text() const;
};

struct CorpusEntry {
  Prime p;
  Weight r = 0;
  Weight s = 0;
  std::vector<Descriptor> expected;
  std::string source;
  std::size_t line = 0;
};

class CorpusParseError : public std::runtime_error {
public:
  CorpusParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

CorpusEntry parse_corpus_line(const std::string& text, std::size_t line);
/// Blank lines and lines starting with '#' are skipped.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);

/// How strongly a structural descriptor was checked.
enum class CheckLevel {
  Label,        // T(w) / L(w)
  Exact,        // series or diagram equal to the derived structure
  Layers,       // socle layers equal to the derived structure
  Consistency,  // factors, socle, self-duality and layering only
};

struct EntryResult {
  bool passed = true;
  std::string computed;
  std::vector<std::string> problems;
  std::vector<CheckLevel> levels;
};

EntryResult check_entry(const CorpusEntry& e);

struct VerifyFailure {
  std::size_t line = 0;
  std::string source;
  std::string expected;
  std::string computed;
  std::vector<std::string> problems;
};

struct VerifyReport {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t label_checks = 0;
  std::size_t exact_checks = 0;
  std::size_t layer_checks = 0;
  std::size_t consistency_checks = 0;
  std::vector<VerifyFailure> failures;

  bool ok() const { return failed == 0; }
};

VerifyReport verify_corpus(const std::vector<CorpusEntry>& entries);

}  // namespace sl2
