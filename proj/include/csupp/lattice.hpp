#pragma once

/**
 * @file lattice.hpp
 * @brief The subalgebra lattice of a Lie algebra and the structure read off it.
 *
 * build_lattice() enumerates every subspace of GF(p)^n and keeps the
 * bracket-closed ones. The resulting cache also records which subalgebras
 * are ideals and which are maximal; the subalgebras maximal in any other
 * subalgebra D are computed on request, which is all Frattini needs.
 */

#include <algorithm>
#include <cstdint>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>
#include <vector>

#include "csupp/errors.hpp"
#include "csupp/liealg.hpp"
#include "csupp/subspace.hpp"

namespace csupp {

struct LatticeOptions {
  std::uint64_t cap = kDefaultSubspaceCap;
  unsigned workers = 1;
};

class LatticeCache {
 public:
  LatticeCache(LieAlgebra L, std::vector<Subspace> subalgebras, std::uint64_t scanned)
      : algebra_(std::move(L)), subalgebras_(std::move(subalgebras)), scanned_(scanned) {
    std::sort(subalgebras_.begin(), subalgebras_.end());
    const std::size_t k = subalgebras_.size();
    index_.reserve(k);
    for (std::size_t i = 0; i < k; ++i) index_.emplace(subalgebras_[i], i);
    is_ideal_.resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      is_ideal_[i] = csupp::is_ideal(algebra_, subalgebras_[i]);
      if (is_ideal_[i]) ideals_.push_back(i);
    }
    if (k > 0) maximals_ = maximals_in(k - 1);
  }

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const std::vector<Subspace>& subalgebras() const noexcept { return subalgebras_; }
  const Subspace& at(std::size_t i) const { return subalgebras_.at(i); }
  std::size_t size() const noexcept { return subalgebras_.size(); }
  std::uint64_t subspaces_scanned() const noexcept { return scanned_; }

  std::optional<std::size_t> find(const Subspace& U) const {
    auto it = index_.find(U);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t index_of(const Subspace& U) const {
    auto i = find(U);
    if (!i) throw NotClosed(U.to_string() + " is not a subalgebra");
    return *i;
  }

  bool is_ideal(std::size_t i) const { return is_ideal_.at(i); }
  /// Indices of the ideals, canonical order.
  const std::vector<std::size_t>& ideals() const noexcept { return ideals_; }
  /// Indices of the maximal subalgebras of L.
  const std::vector<std::size_t>& maximals() const noexcept { return maximals_; }

  /// Subalgebra j ⊆ subalgebra i.
  bool below(std::size_t j, std::size_t i) const {
    return subalgebras_.at(j).dim() <= subalgebras_.at(i).dim() && subalgebras_[i].contains(subalgebras_[j]);
  }

  /// Indices of the subalgebras contained in an arbitrary subspace U, canonical order.
  std::vector<std::size_t> subalgebras_in(const Subspace& U) const {
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < size() && subalgebras_[j].dim() <= U.dim(); ++j) {
      if (U.contains(subalgebras_[j])) out.push_back(j);
    }
    return out;
  }
  std::vector<std::size_t> subalgebras_in(std::size_t i) const { return subalgebras_in(subalgebras_.at(i)); }

  /// Indices of the subalgebras maximal in subalgebra i, canonical order.
  /// Scans proper subalgebras of D by decreasing dimension: one is maximal in D
  /// iff no maximal subalgebra of D found so far contains it.
  std::vector<std::size_t> maximals_in(std::size_t i) const {
    std::vector<std::size_t> inside = subalgebras_in(i);
    inside.pop_back();  // D itself is last in canonical order
    std::vector<std::size_t> found;
    for (auto it = inside.rbegin(); it != inside.rend(); ++it) {
      const Subspace& M = subalgebras_[*it];
      const bool covered = std::any_of(found.begin(), found.end(), [&](std::size_t f) {
        return subalgebras_[f].dim() > M.dim() && subalgebras_[f].contains(M);
      });
      if (!covered) found.push_back(*it);
    }
    std::sort(found.begin(), found.end());
    return found;
  }

 private:
  LieAlgebra algebra_;
  std::vector<Subspace> subalgebras_;
  std::uint64_t scanned_;
  std::unordered_map<Subspace, std::size_t, SubspaceHash> index_;
  std::vector<bool> is_ideal_;
  std::vector<std::size_t> ideals_;
  std::vector<std::size_t> maximals_;
};

/// Enumerates all subspaces and keeps the subalgebras. Workers split the echelon
/// patterns; the result is sorted, so it does not depend on the worker count.
inline LatticeCache build_lattice(const LieAlgebra& L, const LatticeOptions& opts = {}) {
  const PrimeField& F = L.field();
  const std::size_t n = L.dim();
  const std::uint64_t total = subspace_count(F.prime(), n);
  if (total > opts.cap) {
    throw CapExceeded("subalgebra lattice of a " + std::to_string(n) + "-dimensional algebra over GF(" +
                          std::to_string(F.prime()) + ")",
                      total, opts.cap);
  }
  std::vector<std::vector<std::size_t>> patterns;
  for (std::size_t k = 0; k <= n; ++k) {
    for (auto& p : echelon_patterns(n, k)) patterns.push_back(std::move(p));
  }
  const unsigned workers = std::max(1U, std::min<unsigned>(opts.workers, static_cast<unsigned>(patterns.size())));
  std::vector<std::vector<Subspace>> found(workers);
  auto run = [&](unsigned w) {
    for (std::size_t i = w; i < patterns.size(); i += workers) {
      enumerate_pattern(F, n, patterns[i], [&](const Subspace& U) {
        if (is_subalgebra(L, U)) found[w].push_back(U);
      });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  std::vector<Subspace> all;
  for (auto& f : found) std::move(f.begin(), f.end(), std::back_inserter(all));
  return LatticeCache(L, std::move(all), total);
}

// ---------------------------------------------------------------------------
// Cores

/// Largest subspace X ⊆ B with [d, X] ⊆ X for every d in `actors`.
/// Iterates B_{t+1} = {x in B_t : [d, x] in B_t for all d}; each step is a kernel computation.
inline Subspace stable_core(const LieAlgebra& L, const std::vector<Vector>& actors, Subspace B) {
  const PrimeField& F = L.field();
  const std::size_t n = L.dim();
  while (!B.is_zero()) {
    std::vector<Vector> residues;
    residues.reserve(B.dim());
    for (const auto& b : B.basis()) {
      Vector row;
      row.reserve(actors.size() * n);
      for (const auto& d : actors) {
        const Vector r = B.reduce(L.bracket(d, b));
        row.insert(row.end(), r.begin(), r.end());
      }
      residues.push_back(std::move(row));
    }
    const Subspace ker = left_kernel(F, residues, actors.size() * n);
    if (ker.dim() == B.dim()) return B;
    std::vector<Vector> rows;
    for (const auto& a : ker.basis()) {
      Vector x(n);
      for (std::size_t r = 0; r < a.size(); ++r) axpy(F, a[r], B.basis()[r], x);
      rows.push_back(std::move(x));
    }
    B = Subspace::span(F, n, std::move(rows));
  }
  return B;
}

/// B_L: the largest ideal of L contained in B.
inline Subspace core(const LieAlgebra& L, const Subspace& B) {
  std::vector<Vector> actors;
  for (std::size_t i = 0; i < L.dim(); ++i) actors.push_back(unit_vector(L.dim(), i));
  return stable_core(L, actors, B);
}

/// B_D: the largest ideal of the subalgebra D contained in B ⊆ D.
inline Subspace core_in(const LieAlgebra& L, const Subspace& D, const Subspace& B) {
  return stable_core(L, D.basis(), B);
}

// ---------------------------------------------------------------------------
// Frattini

struct Frattini {
  Subspace subalgebra;  // intersection of the maximal subalgebras
  Subspace ideal;       // largest ideal inside it
};

/// Frattini subalgebra and ideal of subalgebra i of the lattice, in L's coordinates.
inline Frattini frattini_of(const LatticeCache& lat, std::size_t i) {
  const Subspace& D = lat.at(i);
  Subspace F = D;
  for (std::size_t m : lat.maximals_in(i)) F = F.intersect(lat.at(m));
  Subspace phi = core_in(lat.algebra(), D, F);
  return {std::move(F), std::move(phi)};
}

inline Frattini frattini(const LatticeCache& lat) { return frattini_of(lat, lat.size() - 1); }

// ---------------------------------------------------------------------------
// Ideals, socle, radical

/// Nonzero ideals containing no smaller nonzero ideal, canonical order.
inline std::vector<Subspace> minimal_ideals(const LatticeCache& lat) {
  std::vector<Subspace> out;
  for (std::size_t i : lat.ideals()) {
    if (lat.at(i).is_zero()) continue;
    bool minimal = true;
    for (std::size_t j : lat.ideals()) {
      if (j != i && !lat.at(j).is_zero() && lat.below(j, i)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(lat.at(i));
  }
  return out;
}

inline Subspace abelian_socle(const LatticeCache& lat) {
  const LieAlgebra& L = lat.algebra();
  Subspace s = L.zero_space();
  for (const auto& A : minimal_ideals(lat)) {
    if (product_space(L, A, A).is_zero()) s = s + A;
  }
  return s;
}

/// Sum of all solvable ideals.
inline Subspace radical(const LatticeCache& lat) {
  const LieAlgebra& L = lat.algebra();
  Subspace R = L.zero_space();
  for (std::size_t i : lat.ideals()) {
    if (is_solvable(L, lat.at(i))) R = R + lat.at(i);
  }
  if (!is_solvable(L, R)) throw Error("radical: sum of solvable ideals is not solvable");
  return R;
}

inline bool is_semisimple(const LatticeCache& lat) {
  return lat.algebra().dim() > 0 && radical(lat).is_zero();
}

/// dim > 1 and the only ideals are 0 and L.
inline bool is_simple(const LatticeCache& lat) { return lat.algebra().dim() > 1 && lat.ideals().size() == 2; }

// ---------------------------------------------------------------------------
// Supersolvability

/// Some one-dimensional ideal of L, i.e. a common eigenvector of ad L.
inline std::optional<Subspace> one_dim_ideal(const LieAlgebra& L) {
  std::optional<Subspace> hit;
  // Projective points in canonical order; stop at the first ideal.
  for (const auto& pattern : echelon_patterns(L.dim(), 1)) {
    enumerate_pattern(L.field(), L.dim(), pattern, [&](const Subspace& U) {
      if (!hit && is_ideal(L, U)) hit = U;
    });
    if (hit) break;
  }
  return hit;
}

/// L has a full flag of ideals. A quotient of a supersolvable algebra is
/// supersolvable, so it suffices to factor out any one-dimensional ideal.
inline bool is_supersolvable(const LieAlgebra& L) {
  if (L.dim() == 0) return true;
  auto A = one_dim_ideal(L);
  if (!A) return false;
  return is_supersolvable(quotient(L, *A).algebra);
}

}  // namespace csupp
