#include "sl2/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <random>
#include <set>
#include <thread>

#include "sl2/chars.hpp"
#include "sl2/classify.hpp"
#include "sl2/decompose.hpp"
#include "sl2/structure.hpp"

namespace sl2 {

namespace {

constexpr std::size_t kMaxExamples = 10;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

// Runs body(row, result) for row in [0, n) on worker threads. Results are
// returned in row order, so merging them does not depend on scheduling.
template <class Row, class Body>
std::vector<Row> for_rows(std::int64_t n, int threads, Body body) {
  std::vector<Row> rows(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (std::int64_t row; (row = next++) < n;) body(row, rows[row]);
  };
  int count = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  count = static_cast<int>(std::min<std::int64_t>(count, std::max<std::int64_t>(n, 1)));
  std::vector<std::thread> pool;
  for (int i = 1; i < count; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::vector<FormalCharacter> simple_table(Weight n, Prime p) {
  std::vector<FormalCharacter> out;
  out.reserve(n + 1);
  for (Weight r = 0; r <= n; ++r) out.push_back(simple_character(r, p));
  return out;
}

std::string pair_text(const char* what, Weight p, Weight r, Weight s) {
  return std::string(what) + " p=" + std::to_string(p) + " r=" + std::to_string(r) + " s=" + std::to_string(s);
}

bool same_multiset(std::vector<FormalCharacter> a, std::vector<FormalCharacter> b) {
  auto less = [](const FormalCharacter& x, const FormalCharacter& y) { return x.terms() < y.terms(); };
  std::sort(a.begin(), a.end(), less);
  std::sort(b.begin(), b.end(), less);
  return a == b;
}

std::vector<FormalCharacter> summand_characters(const Decomposition& d) {
  std::vector<FormalCharacter> out;
  for (const auto& s : d.summands) out.push_back(summand_character(s.profile));
  return out;
}

FormalCharacter total(const std::vector<FormalCharacter>& parts) {
  FormalCharacter out;
  for (const auto& x : parts) out += x;
  return out;
}

}  // namespace

void SuiteResult::fail(std::string what) {
  ++mismatches;
  if (examples.size() < kMaxExamples) examples.push_back(std::move(what));
}

void SuiteResult::merge(const SuiteResult& other) {
  checks += other.checks;
  mismatches += other.mismatches;
  for (const auto& e : other.examples)
    if (examples.size() < kMaxExamples) examples.push_back(e);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

ConservationResult conservation_suite(const std::vector<std::int64_t>& primes, Weight max_weight, int threads) {
  const auto start = Clock::now();
  ConservationResult out;
  out.conservation.name = "character conservation";
  out.tilting.name = "tilting classification";
  for (auto pv : primes) {
    const Prime p(pv);
    const auto simple = simple_table(max_weight, p);
    const auto rows = for_rows<ConservationResult>(max_weight + 1, threads, [&](std::int64_t r, ConservationResult& res) {
      for (Weight s = 0; s <= r; ++s) {
        const auto d = decompose(r, s, p);
        FormalCharacter sum;
        for (const auto& sm : d.summands) {
          const auto ch = summand_character(sm.profile);
          sum += ch;
          if (!sm.cls.is_tilting()) continue;
          const Weight w = sm.cls.weight;
          bool good = ch == tilting_character(w, p);
          if (good) {
            const auto weyls = peel_into_weyls(ch);
            good = std::all_of(weyls.begin(), weyls.end(), [](const auto& kv) { return kv.second >= 0; }) &&
                   weyls.count(w) && weyls.at(w) == 1;
          }
          ++res.tilting.checks;
          if (!good) res.tilting.fail(pair_text("tilting summand", p, r, s) + " w=" + std::to_string(w));
        }
        ++res.conservation.checks;
        if (sum != simple[r] * simple[s]) res.conservation.fail(pair_text("conservation", p, r, s));
      }
    });
    for (const auto& row : rows) {
      out.conservation.merge(row.conservation);
      out.tilting.merge(row.tilting);
    }
  }
  out.conservation.seconds = out.tilting.seconds = since(start);
  return out;
}

SuiteResult indecomposability_suite(const std::vector<std::int64_t>& primes, Weight max_weight, int threads) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "indecomposability equivalence";
  for (auto pv : primes) {
    const Prime p(pv);
    const auto rows = for_rows<SuiteResult>(max_weight + 1, threads, [&](std::int64_t r, SuiteResult& res) {
      for (Weight s = 0; s <= max_weight; ++s) {
        const auto n = decompose(r, s, p).summands.size();
        ++res.checks;
        if (is_indecomposable_product(r, s, p) != (n == 1)) res.fail(pair_text("predicate", p, r, s));
        if (p == 2 && n != 1) res.fail(pair_text("p=2 product with several summands", p, r, s));
      }
    });
    for (const auto& row : rows) out.merge(row);
  }
  out.seconds = since(start);
  return out;
}

SuiteResult factorization_suite(const std::vector<std::int64_t>& primes, Weight max_u) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "tilting factorizations";
  for (auto pv : primes) {
    const Prime p(pv);
    std::int64_t applicable = 0, closed_ok = 0, below_top = 0, all_unordered = 0, all_ordered = 0;
    for (Weight u = 0; u <= max_u; ++u) {
      std::vector<FactorizationPair> scan;
      for (Weight r = u; 2 * r >= u; --r) {
        const Weight s = u - r;
        const bool by_predicate = indecomposable_tilting_product(r, s, p) == std::optional<Weight>(u);
        const auto d = decompose(r, s, p);
        const bool by_decomposition =
            d.summands.size() == 1 && d.summands[0].cls.is_tilting() && d.summands[0].cls.weight == u;
        if (by_predicate != by_decomposition) out.fail(pair_text("predicate vs decomposition", p, r, s));
        if (by_predicate) scan.push_back({r, s});
      }
      const auto rep = enumerate_tilting_factorizations(u, p);
      ++out.checks;
      if (rep.pairs != scan) out.fail("enumeration vs scan p=" + std::to_string(pv) + " u=" + std::to_string(u));
      if (rep.factorizable != !scan.empty())
        out.fail("factorizability p=" + std::to_string(pv) + " u=" + std::to_string(u));
      if (scan.empty()) continue;

      const auto count = static_cast<std::int64_t>(scan.size());
      if (p > 2) {
        if (!rep.odd) continue;
        ++applicable;
        if (*rep.odd == count)
          ++closed_ok;
        else
          out.fail("closed-form count p=" + std::to_string(pv) + " u=" + std::to_string(u));
      } else {
        ++applicable;
        std::int64_t ordered = 0;
        for (const auto& pr : scan) ordered += pr.r == pr.s ? 1 : 2;
        below_top += *rep.p2_below_top == count;
        all_unordered += *rep.p2_all_digits == count;
        all_ordered += *rep.p2_all_digits == ordered;
      }
    }
    const std::string head = "p=" + std::to_string(pv) + ": ";
    if (p > 2) {
      out.notes.push_back(head + "closed form matches enumeration for " + std::to_string(closed_ok) + "/" +
                          std::to_string(applicable) + " factorizable u");
    } else {
      auto of = [&](std::int64_t k) { return std::to_string(k) + "/" + std::to_string(applicable); };
      out.notes.push_back(head + "2^t with t over digits below the top matches unordered count for " + of(below_top));
      out.notes.push_back(head + "2^t with t over all digits matches unordered count for " + of(all_unordered));
      out.notes.push_back(head + "2^t with t over all digits matches ordered count for " + of(all_ordered));
    }
  }
  out.seconds = since(start);
  return out;
}

SuiteResult structure_suite(const std::vector<std::int64_t>& primes, Weight max_weight) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "tensor structure";
  for (auto pv : primes) {
    const Prime p(pv);
    const Weight bound = max_weight < 0 ? ipow(p, 4) : max_weight;
    const auto simple = simple_table(bound + 2, p);
    auto where = [&](const char* what, Weight r) {
      return std::string(what) + " p=" + std::to_string(pv) + " r=" + std::to_string(r);
    };

    for (Weight r = 0; r <= bound; ++r) {
      ++out.checks;
      const auto rep = tensor_with_natural(r, p);
      const auto product = simple[r] * simple[1];
      const auto d = decompose(r, 1, p);
      if (report_character(rep) != product) out.fail(where("L1 character", r));
      if (report_factors(rep) != peel_into_simples(product, p)) out.fail(where("L1 factors", r));

      if (rep.kind == StructureCase::Simple || rep.kind == StructureCase::SplitSum) {
        std::vector<FormalCharacter> parts;
        if (rep.kind == StructureCase::Simple) parts.push_back(simple[rep.simple_weight]);
        for (const auto& c : rep.components) parts.push_back(component_character(c, p));
        if (!same_multiset(parts, summand_characters(d))) out.fail(where("L1 components vs summands", r));
        continue;
      }

      if (d.summands.size() != 1 || d.summands[0].profile.socle_weight() != rep.socle())
        out.fail(where("L1 socle", r));
      const auto& layers = rep.diagram.layers();
      if (layers.front().size() != 1 || layers.back().size() != 1) out.fail(where("L1 simple socle/head", r));
      if (!is_self_dual(rep.diagram)) out.fail(where("L1 self-duality", r));
      if (!rep.diagram.is_well_layered()) out.fail(where("L1 layering", r));
      const auto& res = *rep.residue;
      for (Weight w : rep.family_weights)
        if (w < 0) out.fail(where("L1 negative family weight", r));
      if (rep.family_weights.size() != static_cast<std::size_t>(res.t + 1 + (res.a == 1 ? 0 : 1)))
        out.fail(where("L1 family size", r));
      const auto twisted = tilting_character(*rep.base_tilting, p) *
                           frobenius_twist(simple_character(res.k, p), p, res.t + 1);
      if (twisted != product) out.fail(where("L1 twisted tilting character", r));
      try {
        shift_decomposition(rep);
      } catch (const std::exception&) {
        out.fail(where("L1 shift", r));
      }
      if (res.k == 0) {
        if (product != tilting_character(r + 1, p)) out.fail(where("L1 tilting identity", r));
        const auto weyls = peel_into_weyls(product);
        const std::map<Weight, std::int64_t> want{{rep.family_weights[0], 1}, {rep.family_weights[1], 1}};
        if (weyls != want) out.fail(where("L1 good filtration", r));
      }
    }

    if (p < 3) continue;
    for (Weight r = 0; r <= bound; ++r) {
      ++out.checks;
      const auto rep = tensor_with_L2(r, p);
      const auto product = simple[r] * simple[2];
      const auto d = decompose(r, 2, p);
      const auto parts = summand_characters(d);
      if (report_character(rep) != product || total(parts) != product) out.fail(where("L2 character", r));
      std::vector<FormalCharacter> mine;
      if (rep.kind == StructureCase::Simple)
        mine.push_back(simple[rep.simple_weight]);
      else if (rep.kind == StructureCase::SplitSum)
        for (const auto& c : rep.components) mine.push_back(component_character(c, p));
      else
        mine.push_back(report_character(rep));
      if (!same_multiset(mine, parts)) out.fail(where("L2 components vs summands", r));
    }
  }
  out.seconds = since(start);
  return out;
}

SuiteResult weyl_simplicity_suite(const std::vector<std::int64_t>& primes, int max_t) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "simple Weyl modules";
  for (auto pv : primes) {
    const Prime p(pv);
    for (int t = 0; t <= max_t; ++t)
      for (Weight a = 1; a <= p - 1; ++a) {
        const Weight w = a * ipow(p, t) - 1;
        ++out.checks;
        if (peel_into_simples(weyl_character(w), p) != FactorMultiset{{w, 1}} || !is_simple_weyl_weight(w, p))
          out.fail("nabla(" + std::to_string(w) + ") p=" + std::to_string(pv));
      }
    // Converse on a range: only these weights give simple Weyl modules.
    for (Weight w = 0; w <= 200; ++w) {
      ++out.checks;
      const bool simple = peel_into_simples(weyl_character(w), p).size() == 1;
      if (simple != is_simple_weyl_weight(w, p)) out.fail("converse nabla(" + std::to_string(w) + ") p=" + std::to_string(pv));
    }
  }
  out.seconds = since(start);
  return out;
}

SuiteResult construction_suite(const std::vector<std::int64_t>& primes, Weight max_u) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "tilting summand construction";
  for (auto pv : primes) {
    const Prime p(pv);
    for (Weight u = 0; u <= max_u; ++u) {
      ++out.checks;
      const auto [r, s] = construct_tensor_containing(u, p);
      const auto d = decompose(r, s, p);
      const bool found = std::any_of(d.summands.begin(), d.summands.end(), [&](const Summand& sm) {
        return sm.cls.is_tilting() && sm.cls.weight == u;
      });
      if (!found || r + s != u) out.fail(pair_text("construction", p, r, s) + " u=" + std::to_string(u));
    }
  }
  out.seconds = since(start);
  return out;
}

SuiteResult sampled_suite(const std::vector<std::int64_t>& primes, Weight max_weight, std::uint64_t seed,
                          int samples) {
  const auto start = Clock::now();
  SuiteResult out;
  out.name = "sampled conservation";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> dist(0, std::max<Weight>(4 * max_weight, 0));
  for (auto pv : primes) {
    const Prime p(pv);
    for (int i = 0; i < samples; ++i) {
      const Weight r = dist(rng), s = dist(rng);
      ++out.checks;
      FormalCharacter sum;
      for (const auto& sm : decompose(r, s, p).summands) sum += summand_character(sm.profile);
      if (sum != simple_character(r, p) * simple_character(s, p)) out.fail(pair_text("sampled", p, r, s));
    }
  }
  out.seconds = since(start);
  return out;
}

bool SweepReport::ok() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.ok(); });
}

SweepReport run_sweep(const SweepOptions& opts) {
  if (opts.max_weight < 1) throw PreconditionError("max weight must be at least 1");
  for (auto p : opts.primes) Prime{p};
  SweepReport out;
  auto cons = conservation_suite(opts.primes, opts.max_weight, opts.threads);
  out.suites.push_back(std::move(cons.conservation));
  out.suites.push_back(std::move(cons.tilting));
  out.suites.push_back(indecomposability_suite(opts.primes, opts.max_weight, opts.threads));
  out.suites.push_back(factorization_suite(opts.primes, opts.max_weight));
  out.suites.push_back(structure_suite(opts.primes, opts.max_weight));
  out.suites.push_back(weyl_simplicity_suite(opts.primes));
  out.suites.push_back(construction_suite(opts.primes, opts.max_weight));
  out.suites.push_back(sampled_suite(opts.primes, opts.max_weight, opts.seed));
  return out;
}

}  // namespace sl2
