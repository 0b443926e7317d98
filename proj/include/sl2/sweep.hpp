#pragma once

// Property sweeps over ranges of weights. Each suite counts its checks and
// mismatches and keeps the first few mismatch descriptions.

#include <cstdint>
#include <string>
#include <vector>

#include "sl2/padic.hpp"

namespace sl2 {

struct SuiteResult {
  std::string name;
  std::int64_t checks = 0;
  std::int64_t mismatches = 0;
  std::vector<std::string> examples;  // first mismatches, sorted
  std::vector<std::string> notes;
  double seconds = 0;

  bool ok() const { return mismatches == 0; }
  void fail(std::string what);
  void merge(const SuiteResult& other);
};

struct SweepOptions {
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  Weight max_weight = 200;
  std::uint64_t seed = 1;
  int threads = 0;  // 0: hardware concurrency
};

/// For 0 <= s <= r <= max_weight: sum of summand characters equals
/// ch L(r) ch L(s). The second result covers every summand classified
/// tilting: its character is ch T(w) and its good filtration has
/// nonnegative multiplicities with multiplicity 1 at w.
struct ConservationResult {
  SuiteResult conservation;
  SuiteResult tilting;
};
ConservationResult conservation_suite(const std::vector<std::int64_t>& primes, Weight max_weight, int threads = 0);

/// For all r, s <= max_weight: the digit predicate holds iff there is one
/// summand; at p = 2 every product has one summand.
SuiteResult indecomposability_suite(const std::vector<std::int64_t>& primes, Weight max_weight, int threads = 0);

/// For u <= max_u: digit-wise enumeration equals the exhaustive scan over
/// r + s = u; closed-form counts are compared for p > 2 and tallied for p = 2.
SuiteResult factorization_suite(const std::vector<std::int64_t>& primes, Weight max_u);

/// tensor_with_natural for r <= bound(p): factors, socle, k = 0 tilting
/// identity, self-duality, shift data. tensor_with_L2 (p >= 3): component
/// characters against the summands of decompose(r, 2). bound(p) = p^4 when
/// max_weight < 0, otherwise max_weight.
SuiteResult structure_suite(const std::vector<std::int64_t>& primes, Weight max_weight = -1);

/// nabla(a p^t - 1) is simple for a <= p-1, t <= max_t.
SuiteResult weyl_simplicity_suite(const std::vector<std::int64_t>& primes, int max_t = 4);

/// For u <= max_u: decompose(construct_tensor_containing(u)) has a summand
/// classified Tilting(u).
SuiteResult construction_suite(const std::vector<std::int64_t>& primes, Weight max_u);

/// Character conservation on random pairs up to 4 max_weight.
SuiteResult sampled_suite(const std::vector<std::int64_t>& primes, Weight max_weight, std::uint64_t seed,
                          int samples = 200);

struct SweepReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
};

SweepReport run_sweep(const SweepOptions& opts);

}  // namespace sl2
