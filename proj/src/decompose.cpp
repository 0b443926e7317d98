#include "sl2/decompose.hpp"

#include <algorithm>
#include <set>

#include "sl2/classify.hpp"
#include "sl2/fundamental.hpp"

namespace sl2 {

Weight SummandProfile::highest_weight() const {
  Weight v = 0;
  for (std::size_t i = u.size(); i-- > 0;) v = v * p + u[i];
  return v;
}

Weight SummandProfile::socle_weight() const {
  Weight v = 0;
  for (std::size_t i = u.size(); i-- > 0;) v = v * p + tilde(u[i], p);
  return v;
}

std::vector<Weight> SummandProfile::trimmed() const {
  std::vector<Weight> out = u;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

Weight socle_weight(const SummandProfile& j) { return j.socle_weight(); }

FormalCharacter summand_character(const SummandProfile& j) {
  FormalCharacter out = FormalCharacter::monomial(0);
  for (std::size_t i = 0; i < j.u.size(); ++i)
    if (j.u[i] != 0)
      out = out * frobenius_twist(fundamental_tilting_character(j.u[i], j.p), j.p, static_cast<int>(i));
  return out;
}

FactorMultiset summand_factors(const SummandProfile& j) {
  try {
    return peel_into_simples(summand_character(j), j.p);
  } catch (const NotAModuleCharacter& e) {
    throw InvariantViolation(std::string("summand character failed to peel: ") + e.what());
  }
}

Decomposition decompose(Weight r, Weight s, Prime p) {
  const auto dr = padic_digits(r, p);
  const auto ds = padic_digits(s, p);
  const std::size_t len = std::max(dr.size(), ds.size());

  std::vector<WSet> sets;
  sets.reserve(len);
  for (std::size_t i = 0; i < len; ++i) sets.push_back(small_tensor_W(dr.at(i), ds.at(i), p));

  Decomposition out{p, r, s, {}};
  std::vector<Weight> u(len, 0);
  // Odometer over the Cartesian product of the W-sets.
  std::vector<std::size_t> idx(len, 0);
  while (true) {
    for (std::size_t i = 0; i < len; ++i) u[i] = sets[i].weights[idx[i]];
    SummandProfile prof{p, u};
    out.summands.push_back({prof, classify_summand(prof)});
    std::size_t i = 0;
    while (i < len && ++idx[i] == sets[i].weights.size()) idx[i++] = 0;
    if (i == len) break;
  }

  std::set<Weight> seen;
  bool distinct = true;
  for (const auto& sm : out.summands) distinct &= seen.insert(sm.profile.highest_weight()).second;
  if (distinct) {
    std::sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
      return a.profile.highest_weight() > b.profile.highest_weight();
    });
  } else {
    // Not expected to happen; keep a reproducible order regardless.
    std::sort(out.summands.begin(), out.summands.end(), [](const Summand& a, const Summand& b) {
      return std::lexicographical_compare(b.profile.u.rbegin(), b.profile.u.rend(), a.profile.u.rbegin(),
                                          a.profile.u.rend());
    });
  }
  return out;
}

}  // namespace sl2
