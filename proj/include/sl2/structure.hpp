#pragma once

// Module structure of L(r) (x) L(1) and L(r) (x) L(2).
//
// For r = -1 mod p write r = (a p^t - 1) + k p^(t+1) and set r_0 = r+1,
// r_i = r+1 - 2 p^(i-1). Then L(r) (x) L(1) is
//   uniserial [r_1, ..., r_t, r_0, r_t, ..., r_1]            when a = 1,
//   biserial with middle layer {r_0, r_(t+1)}                otherwise,
// and it is T(a p^t) (x) L(k)^(F^(t+1)); for k = 0 it is the tilting module
// T(r_0) with good filtration sections nabla(r_0), nabla(r_1).

#include <optional>
#include <string>
#include <vector>

#include "sl2/chars.hpp"
#include "sl2/diagram.hpp"
#include "sl2/padic.hpp"

namespace sl2 {

/// A direct summand inside a split result: either L(weight), or
/// T(weight) (x) L(k)^(F^level).
struct Component {
  enum class Kind { Simple, TwistedTilting };
  Kind kind = Kind::Simple;
  Weight weight = 0;
  Weight k = 0;
  int level = 0;

  friend bool operator==(const Component&, const Component&) = default;
};

FormalCharacter component_character(const Component& c, Prime p);

enum class StructureCase { Simple, SplitSum, Uniserial, Biserial };

struct StructureReport {
  Prime p;
  Weight r = 0;
  int other = 1;                 // tensor factor L(1) or L(2)
  std::string theorem_case;      // "a".."e" in the case split of the applicable statement
  StructureCase kind = StructureCase::Simple;
  Weight simple_weight = 0;      // kind == Simple
  std::vector<Component> components;  // kind == SplitSum
  Diagram diagram;               // kind == Uniserial or Biserial
  std::vector<Weight> family_weights; // r_0, r_1, ..., r_t (and r_(t+1) when a != 1)
  std::optional<ResidueData> residue;
  Weight shift_k = 0;
  std::optional<Weight> base_tilting;   // a p^t
  std::optional<Weight> via_natural;    // L(r) (x) L(2) identified with L(r+1) (x) L(1)

  std::vector<Weight> series() const { return diagram.series(); }
  Weight socle() const;

  friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

StructureReport tensor_with_natural(Weight r, Prime p);

/// Requires p >= 3.
StructureReport tensor_with_L2(Weight r, Prime p);

/// Total character of the module a report describes.
FormalCharacter report_character(const StructureReport& rep);

/// Composition factors read off the report (diagram vertices or components).
FactorMultiset report_factors(const StructureReport& rep);

/// True iff r + 1 = a p^t with 1 <= a <= p-1, t >= 0.
bool is_simple_weyl_weight(Weight r, Prime p);

/// Composition series of nabla(w), socle first, for w = r +- 1 with
/// r = a p^t - 1, t >= 1. Checked against the character oracle.
std::vector<Weight> weyl_series_in_family(Weight w, Prime p);

struct ShiftDecomposition {
  StructureReport base;  // report for a p^t - 1
  Weight k = 0;
  int level = 0;         // t + 1
  Weight offset = 0;     // k p^(t+1)
};

/// Requires a Uniserial or Biserial report.
ShiftDecomposition shift_decomposition(const StructureReport& rep);

}  // namespace sl2
