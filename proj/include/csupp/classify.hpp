#pragma once

/**
 * @file classify.hpp
 * @brief c-supplementation, complete factorisability and the related
 *        structural predicates, decided exhaustively on the subalgebra lattice.
 *
 * A subalgebra B of L is c-supplemented when some subalgebra C has
 * B + C = L and B ∩ C ⊆ B_L (the core of B). L is completely factorisable
 * when every subalgebra has a subalgebra complement (B + C = L, B ∩ C = 0).
 * Searches run over subalgebras in canonical (dim, echelon) order, so every
 * reported witness or failure is the first one in that order.
 */

#include <atomic>
#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "csupp/lattice.hpp"
#include "csupp/liealg.hpp"
#include "csupp/subspace.hpp"

namespace csupp {

struct SupplementWitness {
  Subspace B;
  Subspace C;
  Subspace meets_in;  // B ∩ C
  Subspace core_B;
};

struct PredicateResult {
  bool holds = true;
  std::optional<Subspace> failing;  // first failing subalgebra when !holds
};

namespace detail {

/// Smallest i in [0, count) with !ok(i), or nullopt. Any worker count yields the same answer.
template <typename Pred>
std::optional<std::size_t> first_failure(std::size_t count, unsigned workers, Pred ok) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!ok(i)) return i;
    }
    return std::nullopt;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{count};
  auto run = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i >= best.load()) return;
      if (!ok(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run);
  for (auto& t : threads) t.join();
  if (best.load() == count) return std::nullopt;
  return best.load();
}

inline PredicateResult for_all_subalgebras(const LatticeCache& lat, unsigned workers,
                                           const std::function<bool(std::size_t)>& ok) {
  auto bad = first_failure(lat.size(), workers, ok);
  if (!bad) return {};
  return {false, lat.at(*bad)};
}

/// First index in the canonical order whose dimension is at least d.
inline std::size_t first_of_dim(const LatticeCache& lat, std::size_t d) {
  auto it = std::partition_point(lat.subalgebras().begin(), lat.subalgebras().end(),
                                 [&](const Subspace& s) { return s.dim() < d; });
  return static_cast<std::size_t>(it - lat.subalgebras().begin());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Supplements

namespace detail {

/// Scans candidates C in canonical order from dimension n - dim B for
/// B + C = L and B ∩ C ⊆ B_L; the core is only computed once some candidate
/// meets B nontrivially.
inline std::optional<std::size_t> find_c_supplement(const LatticeCache& lat, const Subspace& B,
                                                    std::optional<Subspace>& coreB) {
  const LieAlgebra& L = lat.algebra();
  const std::size_t n = L.dim();
  for (std::size_t c = first_of_dim(lat, n - B.dim()); c < lat.size(); ++c) {
    const Subspace& C = lat.at(c);
    if (B.sum_dim(C) != n) continue;
    if (B.dim() + C.dim() == n) return c;  // B ∩ C = 0
    if (!coreB) coreB = core(L, B);
    if (coreB->contains(B.intersect(C))) return c;
  }
  return std::nullopt;
}

}  // namespace detail

/// First subalgebra C (by increasing dim from dim L - dim B) with B + C = L and
/// B ∩ C ⊆ B_L. An ideal B always finds C = L at the latest.
inline std::optional<SupplementWitness> c_supplement(const LatticeCache& lat, const Subspace& B) {
  if (!is_subalgebra(lat.algebra(), B)) throw NotClosed("c_supplement: " + B.to_string() + " is not a subalgebra");
  std::optional<Subspace> coreB;
  auto c = detail::find_c_supplement(lat, B, coreB);
  if (!c) return std::nullopt;
  const Subspace& C = lat.at(*c);
  return SupplementWitness{B, C, B.intersect(C), coreB ? *coreB : core(lat.algebra(), B)};
}

/// Whether subalgebra i of the lattice has a c-supplement. Same answer as
/// c_supplement(), but an ideal is accepted without searching.
inline bool has_c_supplement(const LatticeCache& lat, std::size_t i) {
  if (lat.is_ideal(i)) return true;
  std::optional<Subspace> coreB;
  return detail::find_c_supplement(lat, lat.at(i), coreB).has_value();
}

/// First subalgebra C with B + C = L and B ∩ C = 0.
inline std::optional<Subspace> complement_subalgebra(const LatticeCache& lat, const Subspace& B) {
  const std::size_t n = lat.algebra().dim();
  const std::size_t d = n - B.dim();
  for (std::size_t c = detail::first_of_dim(lat, d); c < lat.size() && lat.at(c).dim() == d; ++c) {
    if (B.sum_dim(lat.at(c)) == n) return lat.at(c);
  }
  return std::nullopt;
}

inline PredicateResult is_c_supplemented_algebra(const LatticeCache& lat, unsigned workers = 1) {
  return detail::for_all_subalgebras(lat, workers, [&](std::size_t i) { return has_c_supplement(lat, i); });
}

inline PredicateResult is_completely_factorisable(const LatticeCache& lat, unsigned workers = 1) {
  return detail::for_all_subalgebras(
      lat, workers, [&](std::size_t i) { return complement_subalgebra(lat, lat.at(i)).has_value(); });
}

// ---------------------------------------------------------------------------
// Frattini-type predicates

inline bool is_phi_free(const LatticeCache& lat) { return frattini(lat).ideal.is_zero(); }

/// φ(B) = 0 for every subalgebra B.
inline PredicateResult is_elementary(const LatticeCache& lat, unsigned workers = 1) {
  return detail::for_all_subalgebras(lat, workers,
                                     [&](std::size_t i) { return frattini_of(lat, i).ideal.is_zero(); });
}

/// φ(B) ⊆ φ(L) for every subalgebra B.
inline PredicateResult is_E_algebra(const LatticeCache& lat, unsigned workers = 1) {
  const Subspace phi = frattini(lat).ideal;
  return detail::for_all_subalgebras(lat, workers,
                                     [&](std::size_t i) { return phi.contains(frattini_of(lat, i).ideal); });
}

/// Every subalgebra of L contained in U is an ideal of L; returns the first that is not.
inline PredicateResult subalgebras_inside_are_ideals(const LatticeCache& lat, const Subspace& U) {
  for (std::size_t j : lat.subalgebras_in(U)) {
    if (!lat.is_ideal(j)) return {false, lat.at(j)};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Isomorphism of small algebras

inline constexpr std::uint64_t kIsomorphismSearchCap = 50'000'000;

/// Images T(e_i) of a basis-change T: A -> B with T[x,y] = [Tx,Ty], found by
/// exhaustive search over invertible matrices. Dimension at most 3.
inline std::optional<std::vector<Vector>> is_isomorphic_small(const LieAlgebra& A, const LieAlgebra& B) {
  if (!(A.field() == B.field())) throw DimensionMismatch("is_isomorphic_small: different fields");
  if (A.dim() != B.dim()) throw DimensionMismatch("is_isomorphic_small: different dimensions");
  const std::size_t n = A.dim();
  if (n > 3) throw DimensionMismatch("is_isomorphic_small: dimension above 3 is refused");
  const PrimeField& F = A.field();
  std::uint64_t search = 1;
  for (std::size_t t = 0; t < n * n; ++t) search *= F.prime();
  if (search > kIsomorphismSearchCap) throw CapExceeded("isomorphism search", search, kIsomorphismSearchCap);

  auto dims = [](const std::vector<Subspace>& s) {
    std::vector<std::size_t> d;
    for (const auto& x : s) d.push_back(x.dim());
    return d;
  };
  if (dims(derived_series(A)) != dims(derived_series(B)) ||
      dims(lower_central_series(A)) != dims(lower_central_series(B))) {
    return std::nullopt;
  }
  if (n == 0) return std::vector<Vector>{};

  std::vector<Vector> all;
  {
    Vector v(n);
    while (true) {
      all.push_back(v);
      std::size_t i = n;
      while (i > 0) {
        if (v[i - 1].value + 1 < F.prime()) {
          ++v[i - 1].value;
          break;
        }
        v[i - 1].value = 0;
        --i;
      }
      if (i == 0) break;
    }
  }
  auto apply = [&](const std::vector<Vector>& T, const Vector& x) {
    Vector y(n);
    for (std::size_t k = 0; k < n; ++k) axpy(F, x[k], T[k], y);
    return y;
  };
  std::vector<Vector> T;
  std::optional<std::vector<Vector>> result;
  std::function<void(Subspace)> extend = [&](const Subspace& spanned) {
    if (result) return;
    if (T.size() == n) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (apply(T, A.basis_bracket(i, j)) != B.bracket(T[i], T[j])) return;
        }
      }
      result = T;
      return;
    }
    for (const auto& v : all) {
      if (spanned.member(v)) continue;
      T.push_back(v);
      extend(spanned + Subspace::span(F, n, {v}));
      T.pop_back();
      if (result) return;
    }
  };
  extend(Subspace(F, n));
  return result;
}

// ---------------------------------------------------------------------------
// Structure-theorem checks

struct SemisimpleShape {
  bool holds = false;
  std::vector<Subspace> summands;  // the minimal ideals
  std::string reason;
};

/// L = S_1 ⊕ ... ⊕ S_n with every S_i ≅ sl2(F), p ≠ 2.
inline SemisimpleShape check_semisimple_shape(const LatticeCache& lat) {
  const LieAlgebra& L = lat.algebra();
  SemisimpleShape out;
  out.summands = minimal_ideals(lat);
  if (L.field().prime() == 2) {
    out.reason = "characteristic two";
    return out;
  }
  if (!is_semisimple(lat)) {
    out.reason = "not semisimple";
    return out;
  }
  Subspace total = L.zero_space();
  for (std::size_t a = 0; a < out.summands.size(); ++a) {
    for (std::size_t b = a + 1; b < out.summands.size(); ++b) {
      if (!out.summands[a].intersect(out.summands[b]).is_zero()) {
        out.reason = "minimal ideals intersect";
        return out;
      }
    }
    total = total + out.summands[a];
  }
  if (!total.is_full() || total.dim() != 3 * out.summands.size()) {
    out.reason = "minimal ideals do not form a direct sum equal to L";
    return out;
  }
  const LieAlgebra sl2 = catalog::sl2(L.field());
  for (const auto& S : out.summands) {
    if (!is_isomorphic_small(as_algebra(L, S).algebra, sl2)) {
      out.reason = "summand " + S.to_string() + " is not isomorphic to sl2";
      return out;
    }
  }
  out.holds = true;
  return out;
}

struct MainDecomposition {
  bool holds = false;
  Subspace phi;                                 // φ(L), in L
  std::optional<Subspace> non_ideal_subalgebra;  // subalgebra of φ(L) that is not an ideal
  std::optional<Subspace> R;                    // radical of L/φ(L), in quotient coordinates
  std::optional<Subspace> S;                    // complementary ideal, in quotient coordinates
  std::string reason;
};

/// L/φ(L) = R ⊕ S with R supersolvable and φ-free, S a sum of copies of sl2
/// (or zero), and every subalgebra of φ(L) an ideal of L.
inline MainDecomposition check_main_decomposition(const LatticeCache& lat, const LatticeOptions& opts = {}) {
  const LieAlgebra& L = lat.algebra();
  MainDecomposition out{false, frattini(lat).ideal, std::nullopt, std::nullopt, std::nullopt, {}};
  if (auto inside = subalgebras_inside_are_ideals(lat, out.phi); !inside.holds) {
    out.non_ideal_subalgebra = inside.failing;
    out.reason = "subalgebra " + inside.failing->to_string() + " of phi(L) is not an ideal";
    return out;
  }
  const Quotient Q = quotient(L, out.phi);
  const LatticeCache qlat = build_lattice(Q.algebra, opts);
  const Subspace R = radical(qlat);
  out.R = R;
  const LieAlgebra& q = Q.algebra;
  std::optional<Subspace> S;
  for (std::size_t i : qlat.ideals()) {
    const Subspace& cand = qlat.at(i);
    if (cand.dim() + R.dim() != q.dim()) continue;
    if (!cand.intersect(R).is_zero()) continue;
    if (!product_space(q, R, cand).is_zero()) continue;
    S = cand;
    break;
  }
  if (!S) {
    out.reason = "radical of L/phi(L) has no centralising ideal complement";
    return out;
  }
  out.S = S;
  if (!is_supersolvable(as_algebra(q, R).algebra)) {
    out.reason = "radical of L/phi(L) is not supersolvable";
    return out;
  }
  if (!frattini_of(qlat, qlat.index_of(R)).ideal.is_zero()) {
    out.reason = "radical of L/phi(L) is not phi-free";
    return out;
  }
  if (!S->is_zero()) {
    const LatticeCache slat = build_lattice(as_algebra(q, *S).algebra, opts);
    if (auto shape = check_semisimple_shape(slat); !shape.holds) {
      out.reason = "semisimple part: " + shape.reason;
      return out;
    }
  }
  out.holds = true;
  return out;
}

// ---------------------------------------------------------------------------
// Report

struct ClassificationReport {
  std::size_t dim = 0;
  std::uint32_t prime = 0;
  bool degenerate = false;  // dim <= 1: the lattice quantifiers hold vacuously

  bool solvable = false;
  bool nilpotent = false;
  bool supersolvable = false;
  bool simple = false;
  bool semisimple = false;
  bool phi_free = false;
  PredicateResult elementary;
  PredicateResult e_algebra;
  PredicateResult c_supplemented;
  PredicateResult completely_factorisable;
  SemisimpleShape semisimple_shape;
  MainDecomposition main_decomposition;

  Frattini frattini_result;
  Subspace derived_algebra;
  Subspace radical_space;
  Subspace abelian_socle_space;
  std::vector<Subspace> minimal_ideal_list;

  std::size_t subspaces_scanned = 0;
  std::size_t subalgebra_count = 0;
  std::size_t ideal_count = 0;
  std::size_t maximal_count = 0;
  double elapsed_ms = 0;
};

inline ClassificationReport classify(const LatticeCache& lat, const LatticeOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const LieAlgebra& L = lat.algebra();
  const unsigned w = opts.workers;
  ClassificationReport r;
  r.dim = L.dim();
  r.prime = L.field().prime();
  r.degenerate = L.dim() <= 1;
  r.frattini_result = frattini(lat);
  r.derived_algebra = product_space(L, L.full_space(), L.full_space());
  r.radical_space = radical(lat);
  r.abelian_socle_space = abelian_socle(lat);
  r.solvable = is_solvable(L);
  r.nilpotent = is_nilpotent(L);
  r.supersolvable = is_supersolvable(L);
  r.simple = is_simple(lat);
  r.semisimple = is_semisimple(lat);
  r.phi_free = r.frattini_result.ideal.is_zero();
  r.elementary = is_elementary(lat, w);
  r.e_algebra = is_E_algebra(lat, w);
  r.c_supplemented = is_c_supplemented_algebra(lat, w);
  r.completely_factorisable = is_completely_factorisable(lat, w);
  r.semisimple_shape = check_semisimple_shape(lat);
  r.main_decomposition = check_main_decomposition(lat, opts);
  r.minimal_ideal_list = minimal_ideals(lat);
  r.subspaces_scanned = lat.subspaces_scanned();
  r.subalgebra_count = lat.size();
  r.ideal_count = lat.ideals().size();
  r.maximal_count = lat.maximals().size();
  r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace csupp
