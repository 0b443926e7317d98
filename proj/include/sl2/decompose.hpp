#pragma once

// Indecomposable summands of L(r) (x) L(s).
//
// Each summand is J(u) = T(u_0) (x) T(u_1)^F (x) ... (x) T(u_m)^(F^m) where
// u ranges over W(d_0(r), d_0(s)) x ... x W(d_m(r), d_m(s)). J(u) has simple
// socle and head L(sum tilde(u_i) p^i).

#include <compare>
#include <vector>

#include "sl2/chars.hpp"
#include "sl2/padic.hpp"

namespace sl2 {

struct SummandProfile {
  Prime p;
  std::vector<Weight> u;

  Weight highest_weight() const;
  Weight socle_weight() const;
  /// u with trailing zeros removed (T(0) is the trivial module).
  std::vector<Weight> trimmed() const;

  friend bool operator==(const SummandProfile&, const SummandProfile&) = default;
};

enum class SummandKind { Tilting, Simple, SimpleTilting, Neither };

struct SummandClass {
  SummandKind kind = SummandKind::Neither;
  Weight weight = 0;  // highest weight; meaningful for every kind

  bool is_tilting() const { return kind == SummandKind::Tilting || kind == SummandKind::SimpleTilting; }
  bool is_simple() const { return kind == SummandKind::Simple || kind == SummandKind::SimpleTilting; }

  friend bool operator==(const SummandClass&, const SummandClass&) = default;
};

struct Summand {
  SummandProfile profile;
  SummandClass cls;

  friend bool operator==(const Summand&, const Summand&) = default;
};

struct Decomposition {
  Prime p;
  Weight r;
  Weight s;
  std::vector<Summand> summands;  // descending highest weight

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

Decomposition decompose(Weight r, Weight s, Prime p);

FormalCharacter summand_character(const SummandProfile& j);
FactorMultiset summand_factors(const SummandProfile& j);
Weight socle_weight(const SummandProfile& j);

}  // namespace sl2
