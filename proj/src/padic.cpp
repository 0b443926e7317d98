#include "sl2/padic.hpp"

#include <limits>

namespace sl2 {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Prime::Prime(std::int64_t p) : p_(p) {
  if (!is_prime(p)) throw PreconditionError("characteristic " + std::to_string(p) + " is not a prime");
}

Weight ipow(std::int64_t p, int e) {
  if (e < 0) throw PreconditionError("negative exponent");
  Weight out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > std::numeric_limits<Weight>::max() / p) throw std::overflow_error("weight overflow");
    out *= p;
  }
  return out;
}

Weight PAdicDigits::value() const {
  Weight v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

PAdicDigits padic_digits(Weight r, Prime p) {
  if (r < 0) throw PreconditionError("weight must be nonnegative");
  PAdicDigits out{p, {}};
  do {
    out.digits.push_back(r % p);
    r /= p;
  } while (r > 0);
  return out;
}

Weight AdmissibleExpansion::value() const {
  Weight v = 0;
  for (std::size_t i = digits.size(); i-- > 0;) v = v * p + digits[i];
  return v;
}

AdmissibleExpansion admissible_expansion(Weight u, Prime p) {
  if (u < 0) throw PreconditionError("weight must be nonnegative");
  AdmissibleExpansion out{p, {}};
  Weight rem = u;
  while (rem > p - 1) {
    Weight d = rem % p;
    if (d < p - 1) d += p;
    out.digits.push_back(d);
    rem = (rem - d) / p;
  }
  out.digits.push_back(rem);
  return out;
}

Weight tilde(Weight u, Prime p) {
  if (u < 0 || u > 2 * p - 2)
    throw PreconditionError("tilde: u=" + std::to_string(u) + " outside [0, 2p-2]");
  return u <= p - 1 ? u : 2 * p - 2 - u;
}

ResidueData residue_data(Weight r, Prime p) {
  if (r <= 0 || (r + 1) % p != 0)
    throw PreconditionError("residue_data: r=" + std::to_string(r) + " is not positive and -1 mod p");
  const auto d = padic_digits(r, p);
  int t = 0;
  while (d.at(t) == p - 1) ++t;
  ResidueData out;
  out.t = t;
  out.a = 1 + d.at(t);
  const Weight base = out.a * ipow(p, t) - 1;
  out.k = (r - base) / ipow(p, t + 1);
  return out;
}

Weight residue_value(const ResidueData& d, Prime p) {
  return d.a * ipow(p, d.t) - 1 + d.k * ipow(p, d.t + 1);
}

}  // namespace sl2
