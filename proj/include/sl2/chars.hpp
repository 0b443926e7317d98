#pragma once

// Formal characters of SL2-modules as sparse integer Laurent polynomials in q.
//
// A module character is symmetric under q -> 1/q and has nonnegative
// coefficients. Virtual characters (differences) are allowed as values; the
// peeling routines decide which ones come from modules.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sl2/padic.hpp"

namespace sl2 {

class NotAModuleCharacter : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class FormalCharacter {
public:
  using Term = std::pair<Weight, std::int64_t>;  // (exponent, coefficient)

  FormalCharacter() = default;
  /// Terms in any order; duplicates are summed and zeros dropped.
  explicit FormalCharacter(std::vector<Term> terms);

  static FormalCharacter monomial(Weight e, std::int64_t c = 1);

  /// Nonzero terms, exponents strictly descending.
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coefficient(Weight e) const;
  /// Largest exponent with nonzero coefficient. Requires !is_zero().
  const Term& leading() const { return terms_.front(); }
  bool is_symmetric() const;
  std::int64_t dimension() const;

  FormalCharacter& operator+=(const FormalCharacter& o);
  FormalCharacter& operator-=(const FormalCharacter& o);
  friend FormalCharacter operator+(FormalCharacter a, const FormalCharacter& b) { return a += b; }
  friend FormalCharacter operator-(FormalCharacter a, const FormalCharacter& b) { return a -= b; }
  friend FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b);
  friend FormalCharacter operator*(std::int64_t c, const FormalCharacter& a);
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

private:
  std::vector<Term> terms_;
};

/// Composition factors (or any weight multiset): weight -> multiplicity.
using FactorMultiset = std::map<Weight, std::int64_t>;

FormalCharacter multiply(const FormalCharacter& x, const FormalCharacter& y);

/// ch nabla(r) = q^r + q^(r-2) + ... + q^(-r).
FormalCharacter weyl_character(Weight r);

/// Replaces every exponent e by e p^i.
FormalCharacter frobenius_twist(const FormalCharacter& x, Prime p, int i);

/// ch L(r) as the Steinberg product of twisted restricted Weyl characters.
FormalCharacter simple_character(Weight r, Prime p);

/// ch T(u) for 0 <= u <= 2p-2.
FormalCharacter fundamental_tilting_character(Weight u, Prime p);

/// ch T(u) via the admissible expansion of u.
FormalCharacter tilting_character(Weight u, Prime p);

/// Composition-factor multiplicities of a module character. Throws
/// NotAModuleCharacter when x is asymmetric or a leading coefficient is
/// negative during peeling.
FactorMultiset peel_into_simples(const FormalCharacter& x, Prime p);

/// Good-filtration (Weyl) multiplicities, signed. Requires x symmetric.
std::map<Weight, std::int64_t> peel_into_weyls(const FormalCharacter& x);

std::int64_t dimension(const FormalCharacter& x);

/// sum of mult * ch L(w).
FormalCharacter character_of_factors(const FactorMultiset& factors, Prime p);

}  // namespace sl2
