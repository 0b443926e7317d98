#include "sl2/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace sl2 {

namespace {

Edge ordered(VertexId a, VertexId b) { return a < b ? Edge{a, b} : Edge{b, a}; }

}  // namespace

Diagram::Diagram(std::vector<std::vector<Weight>> layers, std::vector<Edge> edges) {
  // Stable sort each layer by descending weight and remember where each
  // original position went.
  std::vector<std::vector<int>> where(layers.size());
  layers_.resize(layers.size());
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::vector<int> order(layers[l].size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return layers[l][x] > layers[l][y]; });
    where[l].resize(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
      layers_[l].push_back(layers[l][order[k]]);
      where[l][order[k]] = static_cast<int>(k);
    }
  }
  for (const auto& [a, b] : edges) {
    const VertexId na{a.layer, where.at(a.layer).at(a.pos)};
    const VertexId nb{b.layer, where.at(b.layer).at(b.pos)};
    edges_.insert(ordered(na, nb));
  }
}

Diagram Diagram::chain(const std::vector<Weight>& series) {
  std::vector<std::vector<Weight>> layers;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < series.size(); ++i) {
    layers.push_back({series[i]});
    if (i > 0) edges.push_back({{static_cast<int>(i) - 1, 0}, {static_cast<int>(i), 0}});
  }
  return Diagram(std::move(layers), std::move(edges));
}

std::size_t Diagram::vertex_count() const {
  std::size_t n = 0;
  for (const auto& l : layers_) n += l.size();
  return n;
}

std::vector<VertexId> Diagram::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t l = 0; l < layers_.size(); ++l)
    for (std::size_t k = 0; k < layers_[l].size(); ++k) out.push_back({static_cast<int>(l), static_cast<int>(k)});
  return out;
}

FactorMultiset Diagram::factors() const {
  FactorMultiset out;
  for (const auto& l : layers_)
    for (Weight w : l) ++out[w];
  return out;
}

std::vector<std::size_t> Diagram::layer_sizes() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers_) out.push_back(l.size());
  return out;
}

bool Diagram::is_chain() const {
  return std::all_of(layers_.begin(), layers_.end(), [](const auto& l) { return l.size() == 1; });
}

std::vector<Weight> Diagram::series() const {
  std::vector<Weight> out;
  for (const auto& l : layers_)
    for (Weight w : l) out.push_back(w);
  return out;
}

bool Diagram::is_well_layered() const {
  for (const auto& [a, b] : edges_)
    if (b.layer != a.layer + 1) return false;
  for (const auto& v : vertices()) {
    if (v.layer == 0) continue;
    bool below = false;
    for (const auto& [a, b] : edges_)
      if (b == v) below = true;
    if (!below) return false;
  }
  return true;
}

Diagram Diagram::flipped() const {
  const int n = static_cast<int>(layers_.size());
  std::vector<std::vector<Weight>> layers(layers_.rbegin(), layers_.rend());
  std::vector<Edge> edges;
  for (const auto& [a, b] : edges_) edges.push_back({{n - 1 - a.layer, a.pos}, {n - 1 - b.layer, b.pos}});
  return Diagram(std::move(layers), std::move(edges));
}

Diagram Diagram::relabeled(const std::function<Weight(Weight)>& f) const {
  std::vector<std::vector<Weight>> layers = layers_;
  for (auto& l : layers)
    for (auto& w : l) w = f(w);
  return Diagram(std::move(layers), {edges_.begin(), edges_.end()});
}

bool same_layers(const Diagram& a, const Diagram& b) {
  // Layers are stored sorted, so equal multisets means equal vectors.
  return a.layers() == b.layers();
}

bool isomorphic(const Diagram& a, const Diagram& b) {
  if (!same_layers(a, b) || a.edges().size() != b.edges().size()) return false;
  const auto va = a.vertices();
  std::map<VertexId, std::set<VertexId>> adj_a, adj_b;
  for (const auto& [x, y] : a.edges()) adj_a[x].insert(y), adj_a[y].insert(x);
  for (const auto& [x, y] : b.edges()) adj_b[x].insert(y), adj_b[y].insert(x);

  std::map<VertexId, VertexId> map;
  std::set<VertexId> used;
  std::function<bool(std::size_t)> extend = [&](std::size_t i) -> bool {
    if (i == va.size()) return true;
    const VertexId v = va[i];
    const auto& layer = b.layers()[v.layer];
    for (int k = 0; k < static_cast<int>(layer.size()); ++k) {
      const VertexId w{v.layer, k};
      if (used.count(w) || layer[k] != a.weight(v)) continue;
      if (adj_a[v].size() != adj_b[w].size()) continue;
      bool ok = true;
      for (const auto& [x, y] : map) {
        const bool ea = adj_a[v].count(x) > 0;
        const bool eb = adj_b[w].count(y) > 0;
        if (ea != eb) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = w;
      used.insert(w);
      if (extend(i + 1)) return true;
      map.erase(v);
      used.erase(w);
    }
    return false;
  };
  return extend(0);
}

bool is_self_dual(const Diagram& d) { return isomorphic(d, d.flipped()); }

std::optional<Diagram> product_diagram(const Diagram& a, const Diagram& b, const LabelCombiner& combine) {
  const std::size_t nl = a.layers().size() + b.layers().size() - 1;
  std::vector<std::vector<Weight>> layers(nl);
  // Copies of product vertex (x, y) as positions in their layer.
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> copies;
  for (const auto& x : a.vertices())
    for (const auto& y : b.vertices()) {
      auto labels = combine(a.weight(x), b.weight(y));
      if (!labels || labels->empty()) return std::nullopt;
      const int l = x.layer + y.layer;
      auto& slot = copies[{x, y}];
      for (Weight w : *labels) {
        slot.push_back({l, static_cast<int>(layers[l].size())});
        layers[l].push_back(w);
      }
    }
  std::vector<Edge> edges;
  auto connect = [&](const std::vector<VertexId>& s, const std::vector<VertexId>& t) {
    for (const auto& u : s)
      for (const auto& v : t) edges.push_back({u, v});
  };
  for (const auto& [x1, x2] : a.edges())
    for (const auto& y : b.vertices()) connect(copies[{x1, y}], copies[{x2, y}]);
  for (const auto& x : a.vertices())
    for (const auto& [y1, y2] : b.edges()) connect(copies[{x, y1}], copies[{x, y2}]);
  return Diagram(std::move(layers), std::move(edges));
}

}  // namespace sl2
