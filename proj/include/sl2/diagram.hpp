#pragma once

// Structure diagrams: vertices are composition factors (labelled by highest
// weight), edges mark non-split extensions, and vertices are grouped into
// socle layers, bottom first.

#include <compare>
#include <functional>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sl2/chars.hpp"

namespace sl2 {

struct VertexId {
  int layer = 0;
  int pos = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

using Edge = std::pair<VertexId, VertexId>;

class Diagram {
public:
  Diagram() = default;
  /// Layers bottom first. Each layer is reordered by descending weight and
  /// edge endpoints are remapped accordingly.
  Diagram(std::vector<std::vector<Weight>> layers, std::vector<Edge> edges);

  /// Uniserial module with the given series (socle first).
  static Diagram chain(const std::vector<Weight>& series);

  const std::vector<std::vector<Weight>>& layers() const noexcept { return layers_; }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  Weight weight(VertexId v) const { return layers_.at(v.layer).at(v.pos); }
  std::size_t vertex_count() const;
  std::vector<VertexId> vertices() const;

  FactorMultiset factors() const;
  /// Layer sizes bottom first.
  std::vector<std::size_t> layer_sizes() const;
  /// True when every layer is a single vertex; the series is then unique.
  bool is_chain() const;
  std::vector<Weight> series() const;

  /// Every edge joins adjacent layers and every vertex above the bottom layer
  /// has a neighbour directly below it.
  bool is_well_layered() const;

  /// Reverse the layer order (contravariant dual).
  Diagram flipped() const;
  Diagram relabeled(const std::function<Weight(Weight)>& f) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

private:
  std::vector<std::vector<Weight>> layers_;
  std::set<Edge> edges_;
};

/// Label- and layer-preserving graph isomorphism.
bool isomorphic(const Diagram& a, const Diagram& b);

/// Same layer sizes and, layer by layer, the same label multisets.
bool same_layers(const Diagram& a, const Diagram& b);

bool is_self_dual(const Diagram& d);

/// Product of two layered diagrams: vertex (x, y) sits in layer
/// layer(x) + layer(y) and carries the labels combine(wx, wy). A pair may
/// split into several vertices; all copies inherit the product edges.
/// Returns empty when combine rejects some pair.
using LabelCombiner = std::function<std::optional<std::vector<Weight>>(Weight, Weight)>;
std::optional<Diagram> product_diagram(const Diagram& a, const Diagram& b, const LabelCombiner& combine);

}  // namespace sl2
