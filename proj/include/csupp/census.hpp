#pragma once

/**
 * @file census.hpp
 * @brief Universes of small Lie algebras and the theorem checks run over them.
 *
 * A census walks raw structure-constant tables over GF(p) and keeps those
 * satisfying Jacobi. Exhaustive mode visits every table once, in table-index
 * order; random mode draws table indices from a counter-based generator
 * keyed by the seed, so any range of draws can be reproduced independently.
 *
 * verify() evaluates both sides of one structural statement on every
 * algebra (or pair of algebras) of a universe and logs each violation with
 * the exact table, so every counterexample can be replayed.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "csupp/classify.hpp"
#include "csupp/lattice.hpp"
#include "csupp/liealg.hpp"

namespace csupp {

enum class CensusMode { Exhaustive, Random };

struct CensusSpec {
  std::uint32_t p = 2;
  std::size_t min_dim = 1;
  std::size_t max_dim = 3;
  CensusMode mode = CensusMode::Exhaustive;
  std::uint64_t samples = 0;  // random mode: tables drawn per dimension
  std::uint64_t seed = 0;
  std::uint64_t cap = std::uint64_t{1} << 25;
  bool dim4_opt_in = false;
  bool solvable_only = false;
  bool phi_free_only = false;
  bool dedup_fingerprint = false;
  unsigned workers = 1;
  std::uint64_t subspace_cap = kDefaultSubspaceCap;

  std::string describe() const {
    std::string s = "GF(" + std::to_string(p) + "), dim " + std::to_string(min_dim) + ".." + std::to_string(max_dim);
    s += mode == CensusMode::Exhaustive ? ", exhaustive"
                                        : ", random " + std::to_string(samples) + " draws, seed " + std::to_string(seed);
    if (solvable_only) s += ", solvable only";
    if (phi_free_only) s += ", phi-free only";
    if (dedup_fingerprint) s += ", fingerprint-deduplicated";
    return s;
  }
};

struct CensusAlgebra {
  std::size_t dim;
  std::uint64_t index;  // position in the table enumeration of this dimension
  LieAlgebra algebra;
};

/// Number of raw antisymmetric tables in dimension n: p^(n * n(n-1)/2), saturating.
inline std::uint64_t table_count(std::uint32_t p, std::size_t n) {
  const std::size_t digits = n * pair_count(n);
  std::uint64_t total = 1;
  for (std::size_t t = 0; t < digits; ++t) {
    if (total > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    total *= p;
  }
  return total;
}

/// Table with base-p digits of `index`, least significant first; digit (pair*n + k) is c_pair^k.
inline std::vector<Vector> decode_table(std::uint32_t p, std::size_t n, std::uint64_t index) {
  std::vector<Vector> table(pair_count(n), Vector(n));
  for (auto& v : table) {
    for (auto& s : v) {
      s = Scalar{static_cast<std::uint32_t>(index % p)};
      index /= p;
    }
  }
  return table;
}

inline std::uint64_t encode_table(std::uint32_t p, const LieAlgebra& L) {
  std::uint64_t index = 0;
  std::uint64_t place = 1;
  for (const auto& v : L.table()) {
    for (auto s : v) {
      index += s.value * place;
      place *= p;
    }
  }
  return index;
}

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Uniform table index for draw `counter` of dimension `n`; a pure function of its arguments.
inline std::uint64_t random_table_index(std::uint64_t seed, std::size_t n, std::uint64_t counter,
                                        std::uint64_t total) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % total;
  const std::uint64_t key = splitmix64(seed ^ splitmix64(n));
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t x = splitmix64(key ^ splitmix64(counter * 0x100000001b3ULL + attempt));
    if (x < limit) return x % total;
  }
}

inline void check_census_caps(const CensusSpec& spec, std::size_t n) {
  const std::uint64_t total = table_count(spec.p, n);
  if (spec.mode == CensusMode::Exhaustive) {
    if (total > spec.cap) {
      throw CapExceeded("exhaustive census of dimension " + std::to_string(n) + " over GF(" +
                            std::to_string(spec.p) + ")",
                        total, spec.cap);
    }
    if (n >= 4 && spec.p > 2) {
      throw CapExceeded("exhaustive census of dimension " + std::to_string(n) + " over GF(" + std::to_string(spec.p) +
                            ") is random-only",
                        total, spec.cap);
    }
    if (n >= 4 && !spec.dim4_opt_in) {
      throw CapExceeded("exhaustive census of dimension " + std::to_string(n) + " needs --dim4-opt-in", total,
                        spec.cap);
    }
  } else if (total == std::numeric_limits<std::uint64_t>::max()) {
    throw CapExceeded("random census: table space of dimension " + std::to_string(n) + " too large", total,
                      spec.cap);
  }
}

}  // namespace detail

/// Invariant tuple used only to thin out census listings.
inline std::vector<std::size_t> fingerprint(const LatticeCache& lat) {
  const LieAlgebra& L = lat.algebra();
  std::vector<std::size_t> f{L.dim()};
  for (const auto& s : derived_series(L)) f.push_back(s.dim());
  f.push_back(1000);
  for (const auto& s : lower_central_series(L)) f.push_back(s.dim());
  f.push_back(lat.size());
  f.push_back(lat.ideals().size());
  f.push_back(lat.maximals().size());
  return f;
}

struct GenerateStats {
  std::uint64_t candidates = 0;  // tables visited before filtering
  std::uint64_t accepted = 0;
};

/// Streams the Jacobi-valid algebras of the universe in (dim, table index) order.
inline GenerateStats generate(const CensusSpec& spec, const std::function<void(const CensusAlgebra&)>& visit) {
  const PrimeField F(spec.p);
  GenerateStats stats;
  std::map<std::vector<std::size_t>, bool> seen;
  auto offer = [&](std::size_t n, std::uint64_t index) {
    ++stats.candidates;
    auto L = LieAlgebra::try_make(F, n, decode_table(spec.p, n, index));
    if (!L) return;
    if (spec.solvable_only && !is_solvable(*L)) return;
    if (spec.phi_free_only || spec.dedup_fingerprint) {
      const LatticeCache lat = build_lattice(*L, {spec.subspace_cap, 1});
      if (spec.phi_free_only && !is_phi_free(lat)) return;
      if (spec.dedup_fingerprint && !seen.emplace(fingerprint(lat), true).second) return;
    }
    ++stats.accepted;
    visit(CensusAlgebra{n, index, std::move(*L)});
  };
  for (std::size_t n = spec.min_dim; n <= spec.max_dim; ++n) {
    detail::check_census_caps(spec, n);
    const std::uint64_t total = table_count(spec.p, n);
    if (spec.mode == CensusMode::Exhaustive) {
      for (std::uint64_t index = 0; index < total; ++index) offer(n, index);
    } else {
      for (std::uint64_t draw = 0; draw < spec.samples; ++draw) {
        offer(n, detail::random_table_index(spec.seed, n, draw, total));
      }
    }
  }
  return stats;
}

inline std::vector<CensusAlgebra> collect(const CensusSpec& spec, GenerateStats* stats = nullptr) {
  std::vector<CensusAlgebra> out;
  const GenerateStats s = generate(spec, [&](const CensusAlgebra& a) { out.push_back(a); });
  if (stats) *stats = s;
  return out;
}

// ---------------------------------------------------------------------------
// Theorem verification

struct Counterexample {
  std::vector<std::pair<std::size_t, std::uint64_t>> sources;  // (dim, table index) of each input algebra
  LieAlgebra algebra;                                          // the algebra on which the statement failed
  std::string detail;
};

struct VerdictLog {
  std::string theorem;
  std::string universe;
  std::uint64_t candidates = 0;
  std::uint64_t examined = 0;
  std::vector<Counterexample> counterexamples;
  double elapsed_ms = 0;

  bool confirmed() const noexcept { return counterexamples.empty(); }
};

/// Statements known to verify(). The last one is false in general; it exists
/// to show that the harness detects a broken statement.
inline const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> kIds{"lsupp_closure", "pfrat", "cE",   "pequ", "ldsum",
                                             "tsolv",         "pss",   "tsupp", "csimple_neg_char2",
                                             "dsum_csupp_conjecture"};
  return kIds;
}

inline bool is_pair_theorem(const std::string& id) { return id == "ldsum" || id == "dsum_csupp_conjecture"; }

namespace detail {

inline bool c_supplemented(const LieAlgebra& L, std::uint64_t cap) {
  return is_c_supplemented_algebra(build_lattice(L, {cap, 1})).holds;
}

inline std::string yn(bool b) { return b ? "true" : "false"; }

/// Violation description, or nullopt when the statement holds on L.
inline std::optional<std::string> check_single(const std::string& id, const LieAlgebra& L, std::uint64_t cap) {
  const LatticeCache lat = build_lattice(L, {cap, 1});
  const bool csupp = is_c_supplemented_algebra(lat).holds;
  const Subspace phi = frattini(lat).ideal;

  if (id == "lsupp_closure") {
    if (!csupp) return std::nullopt;
    for (const auto& K : lat.subalgebras()) {
      if (!c_supplemented(as_algebra(L, K).algebra, cap)) return "subalgebra " + K.to_string() + " not c-supplemented";
    }
    for (std::size_t i : lat.ideals()) {
      if (!c_supplemented(quotient(L, lat.at(i)).algebra, cap)) {
        return "quotient by " + lat.at(i).to_string() + " not c-supplemented";
      }
    }
    return std::nullopt;
  }
  if (id == "pfrat") {
    for (const auto& D : lat.subalgebras()) {
      const Embedded E = as_algebra(L, D);
      const Subspace phiD = E.embed(frattini(build_lattice(E.algebra, {cap, 1})).ideal);
      for (std::size_t b : lat.subalgebras_in(phiD)) {
        const Subspace& B = lat.at(b);
        if (!c_supplement(lat, B)) continue;
        if (!lat.is_ideal(b) || !phi.contains(B)) {
          return "B = " + B.to_string() + " inside phi(" + D.to_string() +
                 ") is c-supplemented but not an ideal inside phi(L)";
        }
      }
    }
    return std::nullopt;
  }
  if (id == "cE") {
    if (csupp && !is_E_algebra(lat).holds) return std::string("c-supplemented but not an E-algebra");
    return std::nullopt;
  }
  if (id == "pequ") {
    const bool cf_quotient = is_completely_factorisable(build_lattice(quotient(L, phi).algebra, {cap, 1})).holds;
    const bool phi_ideals = subalgebras_inside_are_ideals(lat, phi).holds;
    if (csupp != (cf_quotient && phi_ideals)) {
      return "c_supplemented=" + yn(csupp) + " but CF(L/phi)=" + yn(cf_quotient) +
             ", subalgebras of phi are ideals=" + yn(phi_ideals);
    }
    return std::nullopt;
  }
  if (id == "tsolv") {
    if (!is_solvable(L)) return std::nullopt;
    const bool ss = is_supersolvable(L);
    const bool phi_ideals = subalgebras_inside_are_ideals(lat, phi).holds;
    if (csupp != (ss && phi_ideals)) {
      return "c_supplemented=" + yn(csupp) + " but supersolvable=" + yn(ss) +
             ", subalgebras of phi are ideals=" + yn(phi_ideals);
    }
    return std::nullopt;
  }
  if (id == "pss") {
    if (!is_semisimple(lat)) return std::nullopt;
    const bool shape = check_semisimple_shape(lat).holds;
    if (csupp != shape) return "c_supplemented=" + yn(csupp) + " but semisimple shape=" + yn(shape);
    return std::nullopt;
  }
  if (id == "tsupp") {
    const auto dec = check_main_decomposition(lat, {cap, 1});
    if (csupp != dec.holds) {
      return "c_supplemented=" + yn(csupp) + " but decomposition=" + yn(dec.holds) + " (" + dec.reason + ")";
    }
    return std::nullopt;
  }
  if (id == "csimple_neg_char2") {
    if (!is_simple(lat)) return std::nullopt;
    const bool sl2_like = L.field().prime() != 2 && L.dim() == 3 &&
                          is_isomorphic_small(L, catalog::sl2(L.field())).has_value();
    if (csupp != sl2_like) return "simple with c_supplemented=" + yn(csupp) + " but sl2 with p != 2 =" + yn(sl2_like);
    return std::nullopt;
  }
  throw Error("unknown theorem id '" + id + "'");
}

template <typename Item, typename Check>
std::vector<std::optional<std::string>> run_checks(const std::vector<Item>& items, unsigned workers, Check check) {
  std::vector<std::optional<std::string>> out(items.size());
  if (workers <= 1) {
    for (std::size_t i = 0; i < items.size(); ++i) out[i] = check(items[i]);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < items.size(); i = next.fetch_add(1)) out[i] = check(items[i]);
    });
  }
  for (auto& t : threads) t.join();
  return out;
}

}  // namespace detail

/// Runs one statement over the universe described by `spec`. Counterexamples
/// come out in universe order regardless of the worker count.
inline VerdictLog verify(const std::string& theorem, const CensusSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  if (std::find(theorem_ids().begin(), theorem_ids().end(), theorem) == theorem_ids().end()) {
    throw Error("unknown theorem id '" + theorem + "'");
  }
  VerdictLog log;
  log.theorem = theorem;
  GenerateStats stats;
  std::vector<CensusAlgebra> universe = collect(spec, &stats);
  log.candidates = stats.candidates;
  const std::uint64_t cap = spec.subspace_cap;

  if (!is_pair_theorem(theorem)) {
    log.universe = spec.describe();
    log.examined = universe.size();
    auto verdicts = detail::run_checks(universe, spec.workers, [&](const CensusAlgebra& a) {
      return detail::check_single(theorem, a.algebra, cap);
    });
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (verdicts[i]) log.counterexamples.push_back({{{universe[i].dim, universe[i].index}}, universe[i].algebra, *verdicts[i]});
    }
  } else {
    // Both summands range over the members of the universe satisfying the hypothesis.
    const bool cf = theorem == "ldsum";
    auto hypothesis = [&](const LieAlgebra& L) {
      const LatticeCache lat = build_lattice(L, {cap, 1});
      return cf ? is_completely_factorisable(lat).holds : is_c_supplemented_algebra(lat).holds;
    };
    auto flags = detail::run_checks(universe, spec.workers, [&](const CensusAlgebra& a) -> std::optional<std::string> {
      if (hypothesis(a.algebra)) return std::string();
      return std::nullopt;
    });
    std::vector<const CensusAlgebra*> members;
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (flags[i]) members.push_back(&universe[i]);
    }
    std::vector<std::pair<const CensusAlgebra*, const CensusAlgebra*>> pairs;
    for (auto* a : members) {
      for (auto* b : members) pairs.emplace_back(a, b);
    }
    log.universe = "ordered pairs of " + std::string(cf ? "completely factorisable" : "c-supplemented") +
                   " algebras from " + spec.describe();
    log.examined = pairs.size();
    auto verdicts = detail::run_checks(pairs, spec.workers, [&](const auto& pr) -> std::optional<std::string> {
      if (hypothesis(direct_sum(pr.first->algebra, pr.second->algebra))) return std::nullopt;
      return std::string(cf ? "direct sum is not completely factorisable" : "direct sum is not c-supplemented");
    });
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!verdicts[i]) continue;
      const auto& [a, b] = pairs[i];
      log.counterexamples.push_back(
          {{{a->dim, a->index}, {b->dim, b->index}}, direct_sum(a->algebra, b->algebra), *verdicts[i]});
    }
  }
  log.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return log;
}

/// Counts of the main predicates over a universe.
struct CensusSummary {
  std::string universe;
  std::uint64_t candidates = 0;
  std::map<std::size_t, std::uint64_t> algebras_per_dim;
  std::uint64_t solvable = 0;
  std::uint64_t supersolvable = 0;
  std::uint64_t phi_free = 0;
  std::uint64_t c_supplemented = 0;
  std::uint64_t completely_factorisable = 0;
  std::vector<CensusAlgebra> algebras;
  double elapsed_ms = 0;
};

inline CensusSummary census(const CensusSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  CensusSummary s;
  s.universe = spec.describe();
  GenerateStats stats;
  s.algebras = collect(spec, &stats);
  s.candidates = stats.candidates;
  struct Flags {
    bool solvable, supersolvable, phi_free, csupp, cf;
  };
  std::vector<Flags> flags(s.algebras.size());
  detail::run_checks(s.algebras, spec.workers, [&](const CensusAlgebra& a) -> std::optional<std::string> {
    const LatticeCache lat = build_lattice(a.algebra, {spec.subspace_cap, 1});
    const std::size_t i = static_cast<std::size_t>(&a - s.algebras.data());
    flags[i] = {is_solvable(a.algebra), is_supersolvable(a.algebra), is_phi_free(lat),
                is_c_supplemented_algebra(lat).holds, is_completely_factorisable(lat).holds};
    return std::nullopt;
  });
  for (std::size_t i = 0; i < s.algebras.size(); ++i) {
    ++s.algebras_per_dim[s.algebras[i].dim];
    s.solvable += flags[i].solvable;
    s.supersolvable += flags[i].supersolvable;
    s.phi_free += flags[i].phi_free;
    s.c_supplemented += flags[i].csupp;
    s.completely_factorisable += flags[i].cf;
  }
  s.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return s;
}

}  // namespace csupp
