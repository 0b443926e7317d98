#include <doctest.h>

#include "sl2/serialize.hpp"

using namespace sl2;

TEST_CASE("decomposition text") {
  CHECK(decomposition_text(decompose(8, 8, Prime(3))) == "T(16) ⊕ T(14) ⊕ T(10) ⊕ T(8)");
  CHECK(decomposition_text(decompose(7, 7, Prime(2))) == "T(14)");
  CHECK(decomposition_text(decompose(3, 0, Prime(5))) == "L(3)");
  CHECK(decomposition_text(decompose(4, 3, Prime(3))) == "L(7) ⊕ L(1)");
  CHECK(decomposition_text(decompose(6, 2, Prime(3))) == "T(8)");
  CHECK(summand_text({{Prime(3), {4, 2}}, classify_summand({Prime(3), {4, 2}})}) == "T(10)");
  CHECK(summand_text({{Prime(3), {1, 3}}, classify_summand({Prime(3), {1, 3}})}) == "J(1,3; socle=4)");
}

TEST_CASE("structure text") {
  CHECK(structure_text(tensor_with_natural(3, Prime(2))) == "[2,0,4,0,2] = T(4)");
  CHECK(structure_text(tensor_with_natural(5, Prime(3))) == "layers [4 | 6,0 | 4] = T(6)");
  CHECK(structure_text(tensor_with_L2(5, Prime(3))) == "T(7) ⊕ L(5)");
  CHECK(structure_text(tensor_with_natural(6, Prime(3))) == "L(7)");
  CHECK(structure_text(tensor_with_natural(9, Prime(2))) == "[8,10,8] = T(2) ⊗ L(2)^(F^2)");
}

TEST_CASE("character json") {
  const auto x = weyl_character(2) - 3 * weyl_character(0);
  const auto j = character_to_json(x);
  CHECK(j.dump() == "[[2,1],[0,-2],[-2,1]]");
  CHECK(character_from_json(j) == x);
}

TEST_CASE("decomposition json round trip") {
  for (Weight p : {2, 3, 5, 7})
    for (Weight r = 0; r <= 60; r += 7)
      for (Weight s = 0; s <= 60; s += 5) {
        const auto d = decompose(r, s, Prime(p));
        const auto j = decomposition_to_json(d);
        CHECK(decomposition_from_json(Json::parse(j.dump())) == d);
      }
}

TEST_CASE("structure json round trip") {
  for (Weight p : {2, 3, 5})
    for (Weight r = 0; r <= 90; ++r) {
      const auto a = tensor_with_natural(r, Prime(p));
      CHECK(structure_from_json(Json::parse(structure_to_json(a).dump())) == a);
      if (p >= 3) {
        const auto b = tensor_with_L2(r, Prime(p));
        CHECK(structure_from_json(Json::parse(structure_to_json(b).dump())) == b);
      }
    }
}

TEST_CASE("diagram json rejects dangling edges") {
  CHECK_THROWS_AS(diagram_from_json(Json::parse(R"({"layers":[[1]],"edges":[[[0,0],[1,0]]]})")), PreconditionError);
}

TEST_CASE("dot output") {
  const auto dot = structure_dot(tensor_with_natural(5, Prime(3)));
  CHECK(dot.find("graph \"L(5) x L(1)\" {") == 0);
  CHECK(dot.find("rankdir=BT;") != std::string::npos);
  CHECK(dot.find("{ rank=same; v1_0 [label=\"6\"]; v1_1 [label=\"0\"]; }") != std::string::npos);
  CHECK(dot.find("v0_0 -- v1_1;") != std::string::npos);
  CHECK(dot.find("->") == std::string::npos);

  const auto split = structure_dot(tensor_with_L2(5, Prime(3)));
  CHECK(split.find("label=\"T(7)\"") != std::string::npos);
  CHECK(split.find("label=\"L(5)\"") != std::string::npos);
}
