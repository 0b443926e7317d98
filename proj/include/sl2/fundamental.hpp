#pragma once

// Restricted layer: fundamental tilting modules T(u), 0 <= u <= 2p-2, and the
// summand sets W(a, b) with L(a) (x) L(b) = sum over u in W(a, b) of T(u).

#include <vector>

#include "sl2/padic.hpp"

namespace sl2 {

/// T(u) with its unique composition series, socle first.
struct FundamentalTilting {
  Prime p;
  Weight u;
  std::vector<Weight> series;

  Weight socle() const { return series.front(); }
};

FundamentalTilting fundamental_structure(Weight u, Prime p);

/// Summand set of L(a) (x) L(b) for restricted a, b. Weights descending.
struct WSet {
  Prime p;
  Weight a;
  Weight b;
  std::vector<Weight> weights;

  bool contains(Weight u) const;
};

/// Walks the list a+b, a+b-2, ..., |a-b| and strikes 2p-2-u for every u >= p,
/// then cross-checks the result against the set-difference formula.
WSet small_tensor_W(Weight a, Weight b, Prime p);

}  // namespace sl2
