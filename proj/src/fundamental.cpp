#include "sl2/fundamental.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace sl2 {

FundamentalTilting fundamental_structure(Weight u, Prime p) {
  const Weight soc = tilde(u, p);
  if (u <= p - 1) return {p, u, {u}};
  return {p, u, {soc, u, soc}};
}

bool WSet::contains(Weight u) const { return std::find(weights.begin(), weights.end(), u) != weights.end(); }

WSet small_tensor_W(Weight a, Weight b, Prime p) {
  if (a < 0 || b < 0 || a > p - 1 || b > p - 1)
    throw PreconditionError("small_tensor_W: weights " + std::to_string(a) + ", " + std::to_string(b) +
                            " are not restricted");
  const Weight lo = std::min(a, b);

  // The list S = a+b, a+b-2, ..., a+b-2*min(a,b), with struck entries marked.
  std::vector<Weight> list;
  for (Weight i = 0; i <= lo; ++i) list.push_back(a + b - 2 * i);
  std::vector<bool> struck(list.size(), false);
  for (Weight u : list) {
    if (u < p) continue;
    const Weight victim = 2 * p - 2 - u;
    for (std::size_t j = 0; j < list.size(); ++j)
      if (list[j] == victim) struck[j] = true;
  }
  WSet out{p, a, b, {}};
  for (std::size_t j = 0; j < list.size(); ++j)
    if (!struck[j]) out.weights.push_back(list[j]);

  std::set<Weight, std::greater<>> formula(list.begin(), list.end());
  for (Weight u : list)
    if (u >= p) formula.erase(2 * p - 2 - u);
  if (!std::equal(formula.begin(), formula.end(), out.weights.begin(), out.weights.end()))
    throw InvariantViolation("strike rule and set formula disagree");
  return out;
}

}  // namespace sl2
