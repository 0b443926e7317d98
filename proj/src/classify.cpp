#include "sl2/classify.hpp"

#include <algorithm>
#include <set>

namespace sl2 {

SummandClass classify_summand(const SummandProfile& j) {
  const auto u = j.trimmed();
  const Weight p = j.p;
  bool tilting = true;
  bool simple = true;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i + 1 < u.size() && u[i] < p - 1) tilting = false;
    if (u[i] > p - 1) simple = false;
  }
  SummandClass out;
  out.weight = j.highest_weight();
  if (tilting && simple)
    out.kind = SummandKind::SimpleTilting;
  else if (tilting)
    out.kind = SummandKind::Tilting;
  else if (simple)
    out.kind = SummandKind::Simple;
  else
    out.kind = SummandKind::Neither;
  return out;
}

bool is_indecomposable_product(Weight r, Weight s, Prime p) {
  const auto dr = padic_digits(r, p);
  const auto ds = padic_digits(s, p);
  const std::size_t len = std::max(dr.size(), ds.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Weight a = dr.at(i), b = ds.at(i);
    const bool zero = a == 0 || b == 0;
    const bool sum_p = a + b == p && (a == 1 || b == 1);
    if (!zero && !sum_p) return false;
  }
  return true;
}

std::optional<Weight> indecomposable_tilting_product(Weight r, Weight s, Prime p) {
  const auto dr = padic_digits(r, p);
  const auto ds = padic_digits(s, p);
  const std::size_t len = std::max(dr.size(), ds.size());
  const std::size_t m = len - 1;
  for (std::size_t i = 0; i < len; ++i) {
    const Weight a = dr.at(i), b = ds.at(i), sum = a + b;
    if (i < m && (sum < p - 1 || sum > p)) return std::nullopt;
    if (i == m && sum > p) return std::nullopt;
    if (sum == p && a != 1 && b != 1) return std::nullopt;
    if (sum < p && a != 0 && b != 0) return std::nullopt;
  }
  return r + s;
}

FactorizationReport enumerate_tilting_factorizations(Weight u, Prime p) {
  FactorizationReport out{p, u};
  const auto e = admissible_expansion(u, p);
  const std::size_t m = e.top();
  out.factorizable = true;
  for (std::size_t i = 0; i < m; ++i)
    if (e.digits[i] != p - 1 && e.digits[i] != p) out.factorizable = false;
  if (!out.factorizable) return out;

  // Per-digit candidate pairs, combined as an odometer.
  std::vector<std::vector<std::pair<Weight, Weight>>> cand(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const Weight d = e.digits[i];
    if (d <= p - 1)
      cand[i] = {{0, d}, {d, 0}};
    else
      cand[i] = {{1, p - 1}, {p - 1, 1}};
  }
  std::set<FactorizationPair> found;
  std::vector<std::size_t> idx(m + 1, 0);
  while (true) {
    Weight r = 0, s = 0;
    for (std::size_t i = m + 1; i-- > 0;) {
      r = r * p + cand[i][idx[i]].first;
      s = s * p + cand[i][idx[i]].second;
    }
    found.insert({std::max(r, s), std::min(r, s)});
    std::size_t i = 0;
    while (i <= m && ++idx[i] == cand[i].size()) idx[i++] = 0;
    if (i > m) break;
  }
  out.pairs.assign(found.rbegin(), found.rend());

  if (p > 2) {
    if (e.digits[m] > 0)
      out.odd = std::int64_t{1} << m;
    else if (m > 0)
      out.odd = std::int64_t{1} << (m - 1);
  } else {
    int t_all = 0, t_below = 0;
    for (std::size_t i = 0; i <= m; ++i)
      if (e.digits[i] == 1) {
        ++t_all;
        if (i < m) ++t_below;
      }
    out.p2_all_digits = std::int64_t{1} << t_all;
    out.p2_below_top = std::int64_t{1} << t_below;
  }
  return out;
}

std::pair<Weight, Weight> construct_tensor_containing(Weight u, Prime p) {
  const auto e = admissible_expansion(u, p);
  Weight r = 0, s = 0;
  for (std::size_t i = e.digits.size(); i-- > 0;) {
    const Weight ri = std::min(e.digits[i], p - 1);
    r = r * p + ri;
    s = s * p + (e.digits[i] - ri);
  }
  return {r, s};
}

}  // namespace sl2
