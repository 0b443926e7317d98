#include <doctest.h>

#include "sl2/decompose.hpp"
#include "sl2/structure.hpp"

using namespace sl2;

TEST_CASE("L(r) x L(1) examples") {
  const auto t4 = tensor_with_natural(3, Prime(2));
  CHECK(t4.kind == StructureCase::Uniserial);
  CHECK(t4.series() == std::vector<Weight>{2, 0, 4, 0, 2});
  CHECK(t4.base_tilting == 4);
  CHECK(t4.shift_k == 0);

  const auto t6 = tensor_with_natural(5, Prime(3));
  CHECK(t6.kind == StructureCase::Biserial);
  CHECK(t6.diagram.layers() == std::vector<std::vector<Weight>>{{4}, {6, 0}, {4}});
  CHECK(t6.diagram.edges().size() == 4);
  CHECK(t6.base_tilting == 6);
  CHECK(t6.family_weights == std::vector<Weight>{6, 4, 0});

  const auto s7 = tensor_with_natural(6, Prime(3));
  CHECK(s7.kind == StructureCase::Simple);
  CHECK(s7.simple_weight == 7);

  const auto split = tensor_with_natural(4, Prime(3));
  CHECK(split.kind == StructureCase::SplitSum);
  CHECK(split.components ==
        std::vector<Component>{{Component::Kind::Simple, 5, 0, 0}, {Component::Kind::Simple, 3, 0, 0}});

  // 9 = (1*2 - 1) + 2*4: the shift is by k p^(t+1) = 8.
  const auto shifted = tensor_with_natural(9, Prime(2));
  CHECK(shifted.series() == std::vector<Weight>{8, 10, 8});
  CHECK(shifted.shift_k == 2);
  CHECK(shifted.base_tilting == 2);

  const auto t8 = tensor_with_natural(7, Prime(2));
  CHECK(t8.series() == std::vector<Weight>{6, 4, 0, 8, 0, 4, 6});
}

TEST_CASE("L(r) x L(2) examples") {
  const auto a = tensor_with_L2(5, Prime(3));
  CHECK(a.kind == StructureCase::SplitSum);
  CHECK(a.components == std::vector<Component>{{Component::Kind::TwistedTilting, 7, 0, 2},
                                               {Component::Kind::Simple, 5, 0, 0}});
  CHECK(a.residue == ResidueData{1, 2, 0});

  const auto b = tensor_with_L2(4, Prime(3));
  CHECK(b.kind == StructureCase::Biserial);
  CHECK(b.via_natural == 5);
  CHECK(b.base_tilting == 6);
  CHECK(b.theorem_case == "b");

  const auto e = tensor_with_L2(7, Prime(5));
  CHECK(e.theorem_case == "e");
  CHECK(e.components == std::vector<Component>{{Component::Kind::Simple, 9, 0, 0},
                                               {Component::Kind::Simple, 7, 0, 0},
                                               {Component::Kind::Simple, 5, 0, 0}});

  const auto d = tensor_with_L2(3, Prime(5));
  CHECK(d.theorem_case == "d");
  CHECK(d.components == std::vector<Component>{{Component::Kind::TwistedTilting, 5, 0, 2},
                                               {Component::Kind::Simple, 1, 0, 0}});

  CHECK_THROWS_AS(tensor_with_L2(3, Prime(2)), PreconditionError);
}

TEST_CASE("simple Weyl weights") {
  CHECK(is_simple_weyl_weight(8, Prime(3)));
  CHECK_FALSE(is_simple_weyl_weight(4, Prime(3)));
  for (Weight p : {2, 3, 5, 7})
    for (Weight r = 0; r <= p - 1; ++r) CHECK(is_simple_weyl_weight(r, Prime(p)));
}

TEST_CASE("Weyl series in the family") {
  CHECK(weyl_series_in_family(6, Prime(3)) == std::vector<Weight>{6, 4});
  CHECK(weyl_series_in_family(4, Prime(2)) == std::vector<Weight>{4, 0, 2});
  CHECK(weyl_series_in_family(1, Prime(3)) == std::vector<Weight>{1});
  // r - 1 readings: r = 5 at p = 3 (a = 2) and r = 7 at p = 2 (a = 1).
  CHECK(weyl_series_in_family(4, Prime(3)) == std::vector<Weight>{4, 0});
  CHECK(weyl_series_in_family(6, Prime(2)) == std::vector<Weight>{6, 4, 0});
  CHECK_THROWS_AS(weyl_series_in_family(2, Prime(3)), PreconditionError);

  // Every family member, checked against the peeling oracle inside the call.
  for (Weight p : {2, 3, 5, 7})
    for (int t = 1; t <= 4; ++t)
      for (Weight a = 1; a < p; ++a) {
        const Weight r = a * ipow(p, t) - 1;
        CHECK(weyl_series_in_family(r + 1, Prime(p)).front() == r + 1);
        if (r >= 1) CHECK_NOTHROW(weyl_series_in_family(r - 1, Prime(p)));
      }
}

TEST_CASE("shift decomposition") {
  const auto rep = tensor_with_natural(14, Prime(3));
  CHECK(rep.diagram.layers() == std::vector<std::vector<Weight>>{{13}, {15, 9}, {13}});
  const auto sd = shift_decomposition(rep);
  CHECK(sd.base == tensor_with_natural(5, Prime(3)));
  CHECK(sd.k == 1);
  CHECK(sd.level == 2);
  CHECK(sd.offset == 9);

  const auto nine = shift_decomposition(tensor_with_natural(9, Prime(2)));
  CHECK(nine.base.series() == std::vector<Weight>{0, 2, 0});
  CHECK(nine.offset == 8);

  const auto fixed = shift_decomposition(tensor_with_natural(5, Prime(3)));
  CHECK(fixed.base == tensor_with_natural(5, Prime(3)));
  CHECK(fixed.k == 0);

  CHECK_THROWS_AS(shift_decomposition(tensor_with_natural(4, Prime(3))), PreconditionError);
}

TEST_CASE("structure reports agree with the character oracle") {
  for (Weight p : {2, 3, 5}) {
    const Prime pp(p);
    for (Weight r = 0; r <= ipow(p, 3); ++r) {
      const auto rep = tensor_with_natural(r, pp);
      const auto product = simple_character(r, pp) * weyl_character(1);
      CAPTURE(p);
      CAPTURE(r);
      CHECK(report_factors(rep) == peel_into_simples(product, pp));
      CHECK(report_character(rep) == product);
      if (rep.kind == StructureCase::Uniserial || rep.kind == StructureCase::Biserial) {
        CHECK(rep.socle() == decompose(r, 1, pp).summands.at(0).profile.socle_weight());
        CHECK(is_self_dual(rep.diagram));
        for (Weight w : rep.family_weights) CHECK(w >= 0);
        if (rep.shift_k == 0) CHECK(product == tilting_character(r + 1, pp));
      }
      if (p >= 3) {
        const auto rep2 = tensor_with_L2(r, pp);
        CHECK(report_character(rep2) == simple_character(r, pp) * simple_character(2, pp));
      }
    }
  }
}
