#include <doctest.h>

#include <functional>
#include <map>

#include "sl2/padic.hpp"

using namespace sl2;

TEST_CASE("prime construction checks primality") {
  CHECK(Prime(2).value() == 2);
  CHECK(Prime(7919).value() == 7919);
  CHECK_THROWS_AS(Prime(1), PreconditionError);
  CHECK_THROWS_AS(Prime(9), PreconditionError);
  CHECK_THROWS_AS(Prime(-3), PreconditionError);
}

TEST_CASE("ipow detects overflow") {
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(5, 0) == 1);
  CHECK_THROWS(ipow(2, 70));
}

TEST_CASE("padic digits") {
  CHECK(padic_digits(8, Prime(3)).digits == std::vector<Weight>{2, 2});
  CHECK(padic_digits(7, Prime(2)).digits == std::vector<Weight>{1, 1, 1});
  CHECK(padic_digits(0, Prime(5)).digits == std::vector<Weight>{0});
  CHECK(padic_digits(8, Prime(3)).at(5) == 0);

  for (Weight p : {2, 3, 5}) {
    const Prime pp(p);
    for (Weight r = 0; r < ipow(p, 6); r += (p == 2 ? 1 : 7)) {
      const auto d = padic_digits(r, pp);
      CHECK(d.value() == r);
      if (r > 0) CHECK(d.digits.back() != 0);
      for (Weight x : d.digits) CHECK((x >= 0 && x < p));
    }
  }
}

TEST_CASE("admissible expansion examples") {
  CHECK(admissible_expansion(14, Prime(2)).digits == std::vector<Weight>{2, 2, 2, 0});
  CHECK(admissible_expansion(6, Prime(3)).digits == std::vector<Weight>{3, 1});
  CHECK(admissible_expansion(4, Prime(7)).digits == std::vector<Weight>{4});
  CHECK(admissible_expansion(0, Prime(3)).digits == std::vector<Weight>{0});
}

namespace {

// All digit vectors of a given length inside the admissible bounds, bucketed
// by value. A vector ending (.., p-1, 0) is the same expansion as the one
// without the trailing zero, so those are left out.
void enumerate(Weight p, std::size_t len, Weight limit, std::map<Weight, std::vector<std::vector<Weight>>>& out) {
  std::vector<Weight> v(len);
  std::function<void(std::size_t, Weight, Weight)> rec = [&](std::size_t i, Weight value, Weight scale) {
    if (value > limit) return;
    if (i == len) {
      if (len >= 2 && v[len - 1] == 0 && v[len - 2] == p - 1) return;
      out[value].push_back(v);
      return;
    }
    const bool top = i + 1 == len;
    const Weight lo = top ? 0 : p - 1, hi = top ? p - 1 : 2 * p - 2;
    for (Weight d = lo; d <= hi; ++d) {
      v[i] = d;
      rec(i + 1, value + d * scale, scale * p);
    }
  };
  rec(0, 0, 1);
}

}  // namespace

TEST_CASE("admissible expansion is the unique vector within the bounds") {
  for (Weight p : {2, 3, 5}) {
    const Weight limit = ipow(p, 4);
    std::map<Weight, std::vector<std::vector<Weight>>> found;
    for (std::size_t len = 1; len <= 7; ++len) enumerate(p, len, limit, found);
    for (Weight u = 0; u <= limit; ++u) {
      CAPTURE(p);
      CAPTURE(u);
      REQUIRE(found[u].size() == 1);
      CHECK(admissible_expansion(u, Prime(p)).digits == found[u].front());
      CHECK(admissible_expansion(u, Prime(p)).value() == u);
    }
  }
}

TEST_CASE("tilde") {
  CHECK(tilde(4, Prime(3)) == 0);
  CHECK(tilde(2, Prime(5)) == 2);
  for (Weight p : {2, 3, 5, 7}) {
    CHECK(tilde(2 * p - 2, Prime(p)) == 0);
    for (Weight u = 0; u <= 2 * p - 2; ++u) {
      const Weight t = tilde(u, Prime(p));
      CHECK((t >= 0 && t <= p - 1));
      CHECK((t - u) % 2 == 0);
      CHECK(tilde(t, Prime(p)) == t);
    }
    CHECK_THROWS_AS(tilde(2 * p - 1, Prime(p)), PreconditionError);
    CHECK_THROWS_AS(tilde(-1, Prime(p)), PreconditionError);
  }
}

TEST_CASE("residue data examples") {
  CHECK(residue_data(5, Prime(3)) == ResidueData{1, 2, 0});
  CHECK(residue_data(3, Prime(2)) == ResidueData{2, 1, 0});
  CHECK(residue_data(14, Prime(3)) == ResidueData{1, 2, 1});
  // 9 = (1*2 - 1) + 2*4
  CHECK(residue_data(9, Prime(2)) == ResidueData{1, 1, 2});
  CHECK_THROWS_AS(residue_data(4, Prime(3)), PreconditionError);
  CHECK_THROWS_AS(residue_data(0, Prime(3)), PreconditionError);
}

TEST_CASE("residue data agrees with an exhaustive scan and is unique") {
  for (Weight p : {2, 3, 5}) {
    for (Weight r = p - 1; r <= ipow(p, 5); r += p) {
      std::vector<ResidueData> hits;
      for (int t = 1; ipow(p, t) - 1 <= r; ++t)
        for (Weight a = 1; a < p; ++a) {
          const Weight base = a * ipow(p, t) - 1;
          if (base <= r && (r - base) % ipow(p, t + 1) == 0) hits.push_back({t, a, (r - base) / ipow(p, t + 1)});
        }
      CAPTURE(p);
      CAPTURE(r);
      REQUIRE(hits.size() == 1);
      CHECK(residue_data(r, Prime(p)) == hits.front());
      CHECK(residue_value(hits.front(), Prime(p)) == r);
    }
  }
}
