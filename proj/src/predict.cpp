#include "sl2/predict.hpp"

#include "sl2/fundamental.hpp"
#include "sl2/structure.hpp"

namespace sl2 {

namespace {

bool disjoint_support(Weight a, Weight b, Weight p) {
  for (; a > 0 && b > 0; a /= p, b /= p)
    if (a % p != 0 && b % p != 0) return false;
  return true;
}

Diagram scaled(const Diagram& d, Weight factor) {
  return d.relabeled([factor](Weight w) { return w * factor; });
}

}  // namespace

std::optional<Prediction> predict_summand_structure(const SummandProfile& j) {
  const Prime p = j.p;
  const auto u = j.trimmed();
  if (u.empty()) return Prediction{Diagram::chain({0}), PredictionLevel::Exact};

  std::vector<Diagram> groups;
  const std::size_t n = u.size();
  std::size_t i = 0;
  while (i < n) {
    const Weight scale = ipow(p, static_cast<int>(i));
    if (u[i] == p) {
      std::size_t k = i + 1;
      while (k < n && u[k] == p - 1) ++k;
      const int t = static_cast<int>(k - i);
      Weight a = 1;
      std::size_t next = k;
      if (k >= n) {
        next = n;
      } else if (u[k] <= p - 2) {
        a = u[k] + 1;
        next = k + 1;
      }
      const Weight x = a * ipow(p, t) - 1;
      groups.push_back(scaled(tensor_with_natural(x, p).diagram, scale));
      i = next;
    } else if (u[i] >= p) {
      groups.push_back(scaled(Diagram::chain(fundamental_structure(u[i], p).series), scale));
      ++i;
    } else {
      groups.push_back(Diagram::chain({u[i] * scale}));
      ++i;
    }
  }

  int nontrivial = 0;
  for (const auto& g : groups)
    if (g.vertex_count() > 1) ++nontrivial;

  bool split = false;
  const LabelCombiner combine = [&](Weight a, Weight b) -> std::optional<std::vector<Weight>> {
    if (disjoint_support(a, b, p)) return std::vector<Weight>{a + b};
    const auto d = decompose(a, b, p);
    std::vector<Weight> out;
    for (const auto& s : d.summands) {
      if (!s.cls.is_simple()) return std::nullopt;
      out.push_back(s.cls.weight);
    }
    if (out.size() > 1) split = true;
    return out;
  };

  Diagram acc = groups.front();
  for (std::size_t g = 1; g < groups.size(); ++g) {
    auto next = product_diagram(acc, groups[g], combine);
    if (!next) return std::nullopt;
    acc = std::move(*next);
  }
  const auto level = (nontrivial <= 1 && !split) ? PredictionLevel::Exact : PredictionLevel::Layers;
  return Prediction{std::move(acc), level};
}

}  // namespace sl2
