#pragma once

// Classification of summands and of whole products L(r) (x) L(s): which
// summands are tilting or simple, when the product is indecomposable, when it
// is an indecomposable tilting module, and how tilting modules factor.

#include <optional>
#include <utility>
#include <vector>

#include "sl2/decompose.hpp"

namespace sl2 {

/// Digit tests on the trimmed profile: tilting iff u_i >= p-1 below the top
/// digit, simple iff every u_i <= p-1.
SummandClass classify_summand(const SummandProfile& j);

/// Per digit: one digit is 0, or the digits sum to p and one of them is 1.
bool is_indecomposable_product(Weight r, Weight s, Prime p);

/// r + s when L(r) (x) L(s) is isomorphic to T(r+s), otherwise empty.
std::optional<Weight> indecomposable_tilting_product(Weight r, Weight s, Prime p);

/// Unordered pair with r >= s.
struct FactorizationPair {
  Weight r;
  Weight s;

  friend auto operator<=>(const FactorizationPair&, const FactorizationPair&) = default;
};

struct FactorizationReport {
  Prime p;
  Weight u;
  bool factorizable = false;
  std::vector<FactorizationPair> pairs;  // sorted descending by r
  /// Closed-form counts. For p > 2 only `odd` is set (2^m or 2^(m-1)).
  /// For p = 2 the count 2^t is reported with t taken over all digits and
  /// with t taken over digits strictly below the top.
  std::optional<std::int64_t> odd;
  std::optional<std::int64_t> p2_all_digits;
  std::optional<std::int64_t> p2_below_top;
};

FactorizationReport enumerate_tilting_factorizations(Weight u, Prime p);

/// A pair (r, s) such that T(u) is a summand of L(r) (x) L(s).
std::pair<Weight, Weight> construct_tensor_containing(Weight u, Prime p);

}  // namespace sl2
