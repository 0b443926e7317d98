#include <doctest.h>

#include <set>

#include "sl2/classify.hpp"
#include "sl2/decompose.hpp"
#include "sl2/fundamental.hpp"

using namespace sl2;

namespace {

std::vector<Weight> weights(const Decomposition& d) {
  std::vector<Weight> out;
  for (const auto& s : d.summands) out.push_back(s.profile.highest_weight());
  return out;
}

}  // namespace

TEST_CASE("decompose examples") {
  const auto d88 = decompose(8, 8, Prime(3));
  CHECK(weights(d88) == std::vector<Weight>{16, 14, 10, 8});
  for (const auto& s : d88.summands) CHECK(s.cls.is_tilting());

  const auto d77 = decompose(7, 7, Prime(2));
  REQUIRE(d77.summands.size() == 1);
  CHECK(d77.summands[0].profile.u == std::vector<Weight>{2, 2, 2});
  CHECK(d77.summands[0].profile.highest_weight() == 14);

  const auto d50 = decompose(50, 0, Prime(7));
  REQUIRE(d50.summands.size() == 1);
  CHECK(d50.summands[0].cls.is_simple());
  CHECK(d50.summands[0].cls.weight == 50);
}

TEST_CASE("summand characters, factors and socles") {
  const Prime p2(2), p3(3);
  CHECK(summand_character({p3, {2}}) == weyl_character(2));
  CHECK(summand_character({p3, {4, 2}}) == tilting_character(10, p3));
  CHECK(dimension(summand_character({p2, {2, 1}})) == 8);

  CHECK(summand_factors({p2, {2, 1}}) == FactorMultiset{{2, 2}, {0, 2}, {4, 1}});
  CHECK(summand_factors({p3, {3, 1}}) == FactorMultiset{{4, 2}, {6, 1}, {0, 1}});
  CHECK(summand_factors({p3, {2}}) == FactorMultiset{{2, 1}});

  CHECK(socle_weight({p2, {2, 1}}) == 2);
  CHECK(socle_weight({p3, {3, 1}}) == 4);
  CHECK(socle_weight({p3, {2}}) == 2);

  CHECK(SummandProfile{p3, {3, 1, 0, 0}}.trimmed() == std::vector<Weight>{3, 1});
  CHECK(SummandProfile{p3, {0, 0}}.trimmed().empty());
}

TEST_CASE("decomposition invariants") {
  for (Weight p : {2, 3, 5, 7}) {
    const Prime pp(p);
    for (Weight r = 0; r <= 120; r += 3)
      for (Weight s = 0; s <= r; s += 2) {
        const auto d = decompose(r, s, pp);
        const auto dr = padic_digits(r, pp), ds = padic_digits(s, pp);
        std::size_t expected = 1;
        std::int64_t dim = 1;
        for (std::size_t i = 0; i < std::max(dr.size(), ds.size()); ++i) {
          expected *= small_tensor_W(dr.at(i), ds.at(i), pp).weights.size();
          dim *= (dr.at(i) + 1) * (ds.at(i) + 1);
        }
        CAPTURE(p);
        CAPTURE(r);
        CAPTURE(s);
        CHECK(d.summands.size() == expected);

        std::set<std::vector<Weight>> profiles;
        std::int64_t total = 0;
        Weight last = -1;
        for (const auto& sm : d.summands) {
          CHECK(profiles.insert(sm.profile.u).second);
          const Weight hw = sm.profile.highest_weight();
          if (last >= 0) CHECK(hw < last);
          last = hw;
          const auto ch = summand_character(sm.profile);
          total += dimension(ch);
          const auto f = summand_factors(sm.profile);
          CHECK(f.count(sm.profile.socle_weight()));
          CHECK(sm.profile.socle_weight() <= hw);
          CHECK(f.rbegin()->first == hw);
          if (sm.cls.is_tilting()) CHECK(f == peel_into_simples(tilting_character(sm.cls.weight, pp), pp));
        }
        CHECK(total == dim);
        if (p == 2) CHECK(d.summands.size() == 1);
      }
  }
}
