#pragma once

// Predicted structure diagram of a summand J(u).
//
// The profile is cut into groups read from the bottom digit upwards:
//   - a run u_i = p, u_(i+1..i+t-1) = p-1, optionally followed by one digit
//     u_(i+t) <= p-2, is (L(x) (x) L(1))^(F^i) for x = a p^t - 1, whose diagram
//     comes from the structure module;
//   - any other digit u_i >= p gives the fundamental chain [~u, u, ~u] p^i;
//   - a digit u_i <= p-1 gives the single vertex u_i p^i.
// Groups are multiplied as layered diagrams. Labels with disjoint p-adic
// supports add; colliding labels are split only when L(a) (x) L(b) is
// semisimple.

#include <optional>

#include "sl2/decompose.hpp"
#include "sl2/diagram.hpp"

namespace sl2 {

enum class PredictionLevel {
  Exact,   // at most one non-simple group and no label splitting
  Layers,  // products of several groups: only the layer multisets are claimed
};

struct Prediction {
  Diagram diagram;
  PredictionLevel level = PredictionLevel::Exact;
};

/// Empty when some label collision is not semisimple.
std::optional<Prediction> predict_summand_structure(const SummandProfile& j);

}  // namespace sl2
