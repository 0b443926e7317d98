#include "sl2/chars.hpp"

#include <algorithm>
#include <string>

namespace sl2 {

namespace {

void normalize(std::vector<FormalCharacter::Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<FormalCharacter::Term> out;
  out.reserve(terms.size());
  for (const auto& t : terms) {
    if (!out.empty() && out.back().first == t.first)
      out.back().second += t.second;
    else
      out.push_back(t);
  }
  std::erase_if(out, [](const auto& t) { return t.second == 0; });
  terms = std::move(out);
}

// Merge of two descending term lists with sign on the right operand.
std::vector<FormalCharacter::Term> merge(const std::vector<FormalCharacter::Term>& a,
                                         const std::vector<FormalCharacter::Term>& b, std::int64_t sign) {
  std::vector<FormalCharacter::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first > b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first > a[i].first) {
      out.emplace_back(b[j].first, sign * b[j].second);
      ++j;
    } else {
      const std::int64_t c = a[i].second + sign * b[j].second;
      if (c != 0) out.emplace_back(a[i].first, c);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FormalCharacter::FormalCharacter(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(terms_); }

FormalCharacter FormalCharacter::monomial(Weight e, std::int64_t c) {
  FormalCharacter out;
  if (c != 0) out.terms_.emplace_back(e, c);
  return out;
}

std::int64_t FormalCharacter::coefficient(Weight e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, Weight v) { return t.first > v; });
  return (it != terms_.end() && it->first == e) ? it->second : 0;
}

bool FormalCharacter::is_symmetric() const {
  const std::size_t n = terms_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = terms_[i];
    const auto& b = terms_[n - 1 - i];
    if (a.first != -b.first || a.second != b.second) return false;
  }
  return true;
}

std::int64_t FormalCharacter::dimension() const {
  std::int64_t d = 0;
  for (const auto& t : terms_) d += t.second;
  return d;
}

FormalCharacter& FormalCharacter::operator+=(const FormalCharacter& o) {
  terms_ = merge(terms_, o.terms_, 1);
  return *this;
}

FormalCharacter& FormalCharacter::operator-=(const FormalCharacter& o) {
  terms_ = merge(terms_, o.terms_, -1);
  return *this;
}

FormalCharacter operator*(std::int64_t c, const FormalCharacter& a) {
  FormalCharacter out;
  if (c == 0) return out;
  out.terms_ = a.terms_;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

FormalCharacter operator*(const FormalCharacter& a, const FormalCharacter& b) {
  FormalCharacter out;
  if (a.is_zero() || b.is_zero()) return out;
  const Weight hi = a.terms_.front().first + b.terms_.front().first;
  const Weight lo = a.terms_.back().first + b.terms_.back().first;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto work = static_cast<std::uint64_t>(a.terms_.size()) * b.terms_.size();
  if (span <= 4 * work + 4096) {
    // Dense accumulation, index 0 is the top exponent.
    std::vector<std::int64_t> acc(span, 0);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(hi - (ea + eb))] += ca * cb;
    for (std::size_t i = 0; i < span; ++i)
      if (acc[i] != 0) out.terms_.emplace_back(hi - static_cast<Weight>(i), acc[i]);
    return out;
  }
  std::map<Weight, std::int64_t, std::greater<>> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  for (const auto& [e, c] : acc)
    if (c != 0) out.terms_.emplace_back(e, c);
  return out;
}

FormalCharacter multiply(const FormalCharacter& x, const FormalCharacter& y) { return x * y; }

FormalCharacter weyl_character(Weight r) {
  if (r < 0) throw PreconditionError("weyl_character: negative weight");
  std::vector<FormalCharacter::Term> terms;
  terms.reserve(static_cast<std::size_t>(r) + 1);
  for (Weight e = r; e >= -r; e -= 2) terms.emplace_back(e, 1);
  return FormalCharacter(std::move(terms));
}

FormalCharacter frobenius_twist(const FormalCharacter& x, Prime p, int i) {
  if (i < 0) throw PreconditionError("frobenius_twist: negative iterate");
  const Weight scale = ipow(p, i);
  std::vector<FormalCharacter::Term> terms = x.terms();
  for (auto& t : terms) t.first *= scale;
  return FormalCharacter(std::move(terms));
}

FormalCharacter simple_character(Weight r, Prime p) {
  const auto d = padic_digits(r, p);
  FormalCharacter out = FormalCharacter::monomial(0);
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d.digits[i] != 0) out = out * frobenius_twist(weyl_character(d.digits[i]), p, static_cast<int>(i));
  return out;
}

FormalCharacter fundamental_tilting_character(Weight u, Prime p) {
  if (u < 0 || u > 2 * p - 2)
    throw PreconditionError("fundamental tilting weight " + std::to_string(u) + " outside [0, 2p-2]");
  if (u <= p - 1) return weyl_character(u);
  return weyl_character(u) + weyl_character(2 * p - 2 - u);
}

FormalCharacter tilting_character(Weight u, Prime p) {
  const auto e = admissible_expansion(u, p);
  FormalCharacter out = FormalCharacter::monomial(0);
  for (std::size_t i = 0; i < e.digits.size(); ++i)
    if (e.digits[i] != 0)
      out = out * frobenius_twist(fundamental_tilting_character(e.digits[i], p), p, static_cast<int>(i));
  return out;
}

FactorMultiset peel_into_simples(const FormalCharacter& x, Prime p) {
  if (!x.is_symmetric()) throw NotAModuleCharacter("character is not symmetric under q -> 1/q");
  FactorMultiset out;
  FormalCharacter rest = x;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading();
    if (c < 0)
      throw NotAModuleCharacter("negative leading coefficient " + std::to_string(c) + " at weight " +
                                std::to_string(e));
    if (e < 0) throw NotAModuleCharacter("leading weight is negative");
    out[e] += c;
    rest -= c * simple_character(e, p);
  }
  return out;
}

std::map<Weight, std::int64_t> peel_into_weyls(const FormalCharacter& x) {
  if (!x.is_symmetric()) throw PreconditionError("peel_into_weyls: character is not symmetric");
  std::map<Weight, std::int64_t> out;
  FormalCharacter rest = x;
  while (!rest.is_zero()) {
    const auto [e, c] = rest.leading();
    // A symmetric nonzero character always has a nonnegative top exponent.
    out[e] += c;
    rest -= c * weyl_character(e);
  }
  return out;
}

std::int64_t dimension(const FormalCharacter& x) { return x.dimension(); }

FormalCharacter character_of_factors(const FactorMultiset& factors, Prime p) {
  FormalCharacter out;
  for (const auto& [w, m] : factors) out += m * simple_character(w, p);
  return out;
}

}  // namespace sl2
