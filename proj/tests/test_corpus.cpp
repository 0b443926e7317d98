#include <doctest.h>

#include <sstream>

#include "sl2/corpus.hpp"

using namespace sl2;

namespace {

VerifyReport verify_text(const std::string& text) {
  std::istringstream in(text);
  return verify_corpus(parse_corpus(in));
}

}  // namespace

TEST_CASE("corpus lines parse") {
  const auto e = parse_corpus_line(
      R"({"p":3,"r":5,"s":1,"expected":[{"diagram":{"layers":[[4],[6,0],[4]],"edges":[[[0,0],[1,0]],[[0,0],[1,1]],[[1,0],[2,0]],[[1,1],[2,0]]]}}],"source":"x"})",
      7);
  CHECK(e.p == Prime(3));
  CHECK(e.line == 7);
  REQUIRE(e.expected.size() == 1);
  CHECK(e.expected[0].kind == Descriptor::Kind::Diagram);
  CHECK(e.expected[0].weight == 6);
  CHECK(e.expected[0].text() == "layers [4 | 6,0 | 4]");
}

TEST_CASE("malformed lines report their line number") {
  std::istringstream in("# comment\n\n{\"p\":3,\"r\":1,\"s\":1,\"expected\":[{\"T\":2}]}\n{\"p\":4,\"r\":1,\"s\":1,\"expected\":[{\"T\":2}]}\n");
  try {
    parse_corpus(in);
    FAIL("expected a parse error");
  } catch (const CorpusParseError& e) {
    CHECK(e.line() == 4);
  }
  CHECK_THROWS_AS(parse_corpus_line("{not json", 1), CorpusParseError);
  CHECK_THROWS_AS(parse_corpus_line(R"({"p":3,"r":1,"s":1,"expected":[]})", 1), CorpusParseError);
  CHECK_THROWS_AS(parse_corpus_line(R"({"p":3,"r":1,"s":1,"expected":[{"T":2,"L":2}]})", 1), CorpusParseError);
  CHECK_THROWS_AS(parse_corpus_line(R"({"p":3,"r":-1,"s":1,"expected":[{"T":2}]})", 1), CorpusParseError);
}

TEST_CASE("correct entries pass at the expected level") {
  const auto rep = verify_text(
      R"({"p":2,"r":3,"s":1,"expected":[{"series":[2,0,4,0,2]}]}
{"p":3,"r":8,"s":8,"expected":[{"T":16},{"T":14},{"T":10},{"T":8}]}
{"p":3,"r":4,"s":3,"expected":[{"L":7},{"L":1}]}
{"p":2,"r":3,"s":3,"expected":[{"diagram":{"layers":[[0],[4,2],[6,0,0],[4,2],[0]],"edges":[[[0,0],[1,0]],[[0,0],[1,1]],[[1,0],[2,0]],[[1,0],[2,1]],[[1,1],[2,0]],[[1,1],[2,2]],[[2,0],[3,0]],[[2,0],[3,1]],[[2,1],[3,1]],[[2,2],[3,0]],[[3,0],[4,0]],[[3,1],[4,0]]]}}]}
)");
  CHECK(rep.total == 4);
  CHECK(rep.passed == 4);
  CHECK(rep.failed == 0);
  CHECK(rep.exact_checks == 1);
  CHECK(rep.layer_checks == 1);
  CHECK(rep.label_checks == 6);
}

TEST_CASE("wrong entries are reported") {
  const auto rep = verify_text(
      R"({"p":3,"r":4,"s":4,"expected":[{"L":8},{"L":6},{"L":2},{"L":0}],"source":"right"}
{"p":3,"r":4,"s":1,"expected":[{"L":5}],"source":"missing summand"}
{"p":2,"r":3,"s":1,"expected":[{"series":[2,4,0,0,2]}],"source":"wrong order"}
{"p":3,"r":2,"s":2,"expected":[{"L":4},{"T":2}],"source":"wrong label"}
{"p":2,"r":3,"s":3,"expected":[{"diagram":{"layers":[[0],[4,2],[6,0,0],[4,2],[0]],"edges":[]}}],"source":"no edges"}
)");
  CHECK(rep.total == 5);
  CHECK(rep.passed == 1);
  CHECK(rep.failed == 4);
  REQUIRE(rep.failures.size() == 4);
  CHECK(rep.failures[0].line == 2);
  CHECK(rep.failures[0].source == "missing summand");
  CHECK(rep.failures[0].computed == "T(5) ⊕ L(3)");
  CHECK(rep.failures[1].source == "wrong order");
  CHECK(rep.failures[2].computed == "T(4) ⊕ L(2)");
  CHECK(rep.failures[3].source == "no edges");
}

TEST_CASE("shipped corpora pass") {
  for (const char* name : {"/corpus-p2.jsonl", "/corpus-p3.jsonl"}) {
    const auto entries = load_corpus(std::string(SL2_DATA_DIR) + name);
    const auto rep = verify_corpus(entries);
    CAPTURE(name);
    for (const auto& f : rep.failures)
      for (const auto& pr : f.problems) MESSAGE("line " << f.line << ": " << pr);
    CHECK(rep.ok());
    CHECK(rep.total >= 45);
  }
}
