#pragma once

// Base-p digit arithmetic for dominant SL2 weights.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace sl2 {

/// Dominant weights and exponents are plain 64-bit integers.
using Weight = std::int64_t;

/// Raised when an operation is called outside its documented domain.
class PreconditionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computed object violates an invariant the theory guarantees.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// The characteristic of the ground field. Construction checks primality.
class Prime {
public:
  explicit Prime(std::int64_t p);

  std::int64_t value() const noexcept { return p_; }
  operator std::int64_t() const noexcept { return p_; }

  friend bool operator==(Prime, Prime) = default;

private:
  std::int64_t p_;
};

bool is_prime(std::int64_t n) noexcept;

/// p^e, checked against overflow.
Weight ipow(std::int64_t p, int e);

/// Digits of r in base p, lowest first. Zero has the single digit 0.
struct PAdicDigits {
  Prime p;
  std::vector<Weight> digits;

  Weight value() const;
  /// Digit i, or 0 past the end.
  Weight at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
  std::size_t size() const { return digits.size(); }
};

PAdicDigits padic_digits(Weight r, Prime p);

/// u = sum u_i p^i with p-1 <= u_i <= 2p-2 below the top and 0 <= u_m <= p-1.
///
/// Computed greedily from the lowest digit. The expansion stops as soon as
/// the running remainder is at most p-1, so a trailing zero appears only when
/// the previous digit had to exceed p-1 (u = 14, p = 2 gives [2,2,2,0]).
struct AdmissibleExpansion {
  Prime p;
  std::vector<Weight> digits;

  Weight value() const;
  std::size_t top() const { return digits.size() - 1; }
};

AdmissibleExpansion admissible_expansion(Weight u, Prime p);

/// Socle weight of the fundamental tilting module T(u), 0 <= u <= 2p-2.
Weight tilde(Weight u, Prime p);

/// r = a p^t - 1 + k p^(t+1) with t >= 1, 1 <= a <= p-1, k >= 0.
struct ResidueData {
  int t = 0;
  Weight a = 0;
  Weight k = 0;

  friend bool operator==(const ResidueData&, const ResidueData&) = default;
};

/// Requires r > 0 and r = -1 mod p.
ResidueData residue_data(Weight r, Prime p);

/// Reassembles a p^t - 1 + k p^(t+1).
Weight residue_value(const ResidueData& d, Prime p);

}  // namespace sl2
