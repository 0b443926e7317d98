#include "sl2/structure.hpp"

namespace sl2 {

FormalCharacter component_character(const Component& c, Prime p) {
  if (c.kind == Component::Kind::Simple) return simple_character(c.weight, p);
  return tilting_character(c.weight, p) * frobenius_twist(simple_character(c.k, p), p, c.level);
}

Weight StructureReport::socle() const {
  switch (kind) {
    case StructureCase::Simple:
      return simple_weight;
    case StructureCase::Uniserial:
    case StructureCase::Biserial:
      return diagram.layers().front().front();
    case StructureCase::SplitSum:
      break;
  }
  throw PreconditionError("a split sum has no simple socle");
}

namespace {

StructureReport simple_report(Weight r, Prime p, int other, const char* c, Weight w) {
  StructureReport rep{p};
  rep.r = r;
  rep.other = other;
  rep.theorem_case = c;
  rep.kind = StructureCase::Simple;
  rep.simple_weight = w;
  return rep;
}

StructureReport split_report(Weight r, Prime p, int other, const char* c, std::vector<Component> parts) {
  StructureReport rep{p};
  rep.r = r;
  rep.other = other;
  rep.theorem_case = c;
  rep.kind = StructureCase::SplitSum;
  rep.components = std::move(parts);
  return rep;
}

Component simple_component(Weight w) { return {Component::Kind::Simple, w, 0, 0}; }

}  // namespace

StructureReport tensor_with_natural(Weight r, Prime p) {
  if (r < 0) throw PreconditionError("negative weight");
  if (r % p == 0) return simple_report(r, p, 1, "a", r + 1);
  if ((r + 1) % p != 0) return split_report(r, p, 1, "c", {simple_component(r + 1), simple_component(r - 1)});

  const ResidueData res = residue_data(r, p);
  const int t = res.t;
  StructureReport rep{p};
  rep.r = r;
  rep.other = 1;
  rep.theorem_case = "b";
  rep.residue = res;
  rep.shift_k = res.k;
  rep.base_tilting = res.a * ipow(p, t);

  auto family = [&](int i) { return i == 0 ? r + 1 : r + 1 - 2 * ipow(p, i - 1); };
  for (int i = 0; i <= t; ++i) rep.family_weights.push_back(family(i));

  if (res.a == 1) {
    rep.kind = StructureCase::Uniserial;
    std::vector<Weight> series;
    for (int i = 1; i <= t; ++i) series.push_back(family(i));
    series.push_back(family(0));
    for (int i = t; i >= 1; --i) series.push_back(family(i));
    rep.diagram = Diagram::chain(series);
    return rep;
  }

  rep.kind = StructureCase::Biserial;
  rep.family_weights.push_back(family(t + 1));
  // Layers: r_1 .. r_t | r_0, r_(t+1) | r_t .. r_1.
  std::vector<std::vector<Weight>> layers;
  std::vector<Edge> edges;
  for (int i = 1; i <= t; ++i) layers.push_back({family(i)});
  const int mid = t;
  layers.push_back({family(0), family(t + 1)});
  for (int i = t; i >= 1; --i) layers.push_back({family(i)});
  for (int l = 0; l + 1 < mid; ++l) edges.push_back({{l, 0}, {l + 1, 0}});
  for (int l = mid + 1; l + 1 < static_cast<int>(layers.size()); ++l) edges.push_back({{l, 0}, {l + 1, 0}});
  for (int k = 0; k < 2; ++k) {
    edges.push_back({{mid - 1, 0}, {mid, k}});
    edges.push_back({{mid, k}, {mid + 1, 0}});
  }
  rep.diagram = Diagram(std::move(layers), std::move(edges));
  return rep;
}

StructureReport tensor_with_L2(Weight r, Prime p) {
  if (p < 3) throw PreconditionError("L(r) (x) L(2) structure requires p >= 3; at p = 2, L(2) = L(1)^F");
  if (r < 0) throw PreconditionError("negative weight");
  const Weight m = r % p;

  auto twisted = [&](Weight base_weight_offset, const ResidueData& res) {
    return Component{Component::Kind::TwistedTilting, res.a * ipow(p, res.t) + base_weight_offset, res.k,
                     res.t + 1};
  };

  if (m == 0) return simple_report(r, p, 2, "a", r + 2);
  if (p == 3) {
    if (m == 1) {
      StructureReport rep = tensor_with_natural(r + 1, p);
      rep.r = r;
      rep.other = 2;
      rep.theorem_case = "b";
      rep.via_natural = r + 1;
      return rep;
    }
    const ResidueData res = residue_data(r, p);
    auto rep = split_report(r, p, 2, "c", {twisted(1, res), simple_component(r)});
    rep.residue = res;
    rep.shift_k = res.k;
    return rep;
  }
  if (m == 1) return split_report(r, p, 2, "b", {simple_component(r + 2), simple_component(r)});
  if (m == p - 1) {
    const ResidueData res = residue_data(r, p);
    auto rep = split_report(r, p, 2, "c", {twisted(1, res), simple_component(r)});
    rep.residue = res;
    rep.shift_k = res.k;
    return rep;
  }
  if (m == p - 2) {
    const ResidueData res = residue_data(r + 1, p);
    auto rep = split_report(r, p, 2, "d", {twisted(0, res), simple_component(r - 2)});
    rep.residue = res;
    rep.shift_k = res.k;
    return rep;
  }
  return split_report(r, p, 2, "e", {simple_component(r + 2), simple_component(r), simple_component(r - 2)});
}

FormalCharacter report_character(const StructureReport& rep) {
  switch (rep.kind) {
    case StructureCase::Simple:
      return simple_character(rep.simple_weight, rep.p);
    case StructureCase::SplitSum: {
      FormalCharacter out;
      for (const auto& c : rep.components) out += component_character(c, rep.p);
      return out;
    }
    case StructureCase::Uniserial:
    case StructureCase::Biserial:
      return character_of_factors(rep.diagram.factors(), rep.p);
  }
  return {};
}

FactorMultiset report_factors(const StructureReport& rep) {
  switch (rep.kind) {
    case StructureCase::Simple:
      return {{rep.simple_weight, 1}};
    case StructureCase::Uniserial:
    case StructureCase::Biserial:
      return rep.diagram.factors();
    case StructureCase::SplitSum:
      break;
  }
  return peel_into_simples(report_character(rep), rep.p);
}

bool is_simple_weyl_weight(Weight r, Prime p) {
  if (r < 0) return false;
  Weight n = r + 1;
  while (n % p == 0) n /= p;
  return n <= p - 1;
}

std::vector<Weight> weyl_series_in_family(Weight w, Prime p) {
  auto family = [&](Weight r, int i) { return i == 0 ? r + 1 : r + 1 - 2 * ipow(p, i - 1); };
  auto is_family_root = [&](Weight r) {
    return r > 0 && (r + 1) % p == 0 && residue_data(r, p).k == 0;
  };

  std::vector<Weight> series;
  if (w >= 1 && is_family_root(w - 1)) {
    const Weight r = w - 1;
    const auto res = residue_data(r, p);
    series.push_back(family(r, 0));
    for (int i = res.t; i >= 1; --i) series.push_back(family(r, i));
  } else if (w >= 0 && is_family_root(w + 1)) {
    const Weight r = w + 1;
    const auto res = residue_data(r, p);
    for (int i = 1; i <= res.t; ++i) series.push_back(family(r, i));
    if (res.a != 1) series.push_back(family(r, res.t + 1));
  } else {
    throw PreconditionError("weight " + std::to_string(w) + " is not r+1 or r-1 for any r = a p^t - 1");
  }

  FactorMultiset mine;
  for (Weight x : series) ++mine[x];
  if (mine != peel_into_simples(weyl_character(w), p))
    throw InvariantViolation("nabla(" + std::to_string(w) + ") series disagrees with its character");
  return series;
}

ShiftDecomposition shift_decomposition(const StructureReport& rep) {
  if ((rep.kind != StructureCase::Uniserial && rep.kind != StructureCase::Biserial) || !rep.residue)
    throw PreconditionError("shift_decomposition needs a uniserial or biserial report");
  const auto& res = *rep.residue;
  ShiftDecomposition out{tensor_with_natural(res.a * ipow(rep.p, res.t) - 1, rep.p)};
  out.k = res.k;
  out.level = res.t + 1;
  out.offset = res.k * ipow(rep.p, res.t + 1);
  const Weight off = out.offset;
  const Diagram moved = out.base.diagram.relabeled([off](Weight w) { return w + off; });
  if (!isomorphic(moved, rep.diagram))
    throw InvariantViolation("report is not the shift of its base diagram");
  return out;
}

}  // namespace sl2
