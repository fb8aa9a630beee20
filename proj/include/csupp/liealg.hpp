#pragma once

/**
 * @file liealg.hpp
 * @brief Lie algebras given by structure constants over GF(p).
 *
 * Only the brackets [e_i, e_j] with i < j are stored; antisymmetry is
 * structural. The Jacobi identity is checked on every basis triple when an
 * algebra is constructed, so a LieAlgebra value is always a Lie algebra.
 */

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "csupp/errors.hpp"
#include "csupp/gfp.hpp"
#include "csupp/subspace.hpp"

namespace csupp {

/// Index of the pair (i, j), i < j, in the packed upper-triangular table.
inline std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

struct JacobiViolation {
  std::size_t i, j, k;
};

class LieAlgebra {
 public:
  /// `table[pair_index(n,i,j)]` is [e_i, e_j]. Throws InvalidAlgebra if the
  /// table is malformed or violates Jacobi.
  LieAlgebra(PrimeField F, std::size_t n, std::vector<Vector> table, std::vector<std::string> names = {})
      : field_(F), n_(n), table_(std::move(table)), names_(std::move(names)) {
    check_shape();
    if (auto bad = jacobi_violation()) {
      throw InvalidAlgebra("Jacobi identity fails on basis triple (" + std::to_string(bad->i) + ", " +
                           std::to_string(bad->j) + ", " + std::to_string(bad->k) + ")");
    }
  }

  /// Returns nullopt instead of throwing when Jacobi fails.
  static std::optional<LieAlgebra> try_make(PrimeField F, std::size_t n, std::vector<Vector> table) {
    LieAlgebra L(F, n, std::move(table), Unchecked{});
    if (L.jacobi_violation()) return std::nullopt;
    return L;
  }

  /// Zero-bracket algebra of dimension n.
  static LieAlgebra abelian(PrimeField F, std::size_t n) {
    return LieAlgebra(F, n, std::vector<Vector>(pair_count(n), Vector(n)));
  }

  struct Bracket {
    std::size_t i, j;
    Vector value;
  };

  /// Sparse construction; pairs with i > j are negated into i < j, i == j must be zero.
  static LieAlgebra from_brackets(PrimeField F, std::size_t n, const std::vector<Bracket>& brackets,
                                  std::vector<std::string> names = {}) {
    std::vector<Vector> table(pair_count(n), Vector(n));
    for (const auto& b : brackets) {
      if (b.i >= n || b.j >= n || b.value.size() != n) throw InvalidAlgebra("bracket entry out of range");
      if (b.i == b.j) {
        if (!is_zero(b.value)) throw InvalidAlgebra("[e_i, e_i] must vanish");
        continue;
      }
      const bool swap = b.i > b.j;
      auto& slot = table[pair_index(n, std::min(b.i, b.j), std::max(b.i, b.j))];
      slot = add(F, slot, swap ? scale(F, F.neg(F.one()), b.value) : b.value);
    }
    return LieAlgebra(F, n, std::move(table), std::move(names));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return n_; }
  const std::vector<Vector>& table() const noexcept { return table_; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  std::string name(std::size_t i) const {
    return i < names_.size() ? names_[i] : "e" + std::to_string(i);
  }

  /// [e_i, e_j] for any i, j.
  Vector basis_bracket(std::size_t i, std::size_t j) const {
    if (i == j) return Vector(n_);
    if (i < j) return table_[pair_index(n_, i, j)];
    return scale(field_, field_.neg(field_.one()), table_[pair_index(n_, j, i)]);
  }

  Vector bracket(const Vector& u, const Vector& v) const {
    Vector r(n_);
    bracket_into(u, v, r);
    return r;
  }

  /// out = [u, v]; `out` must already have length dim().
  void bracket_into(std::span<const Scalar> u, std::span<const Scalar> v, std::span<Scalar> out) const {
    if (u.size() != n_ || v.size() != n_ || out.size() != n_) throw DimensionMismatch("bracket: vector length");
    // For small p each term is below p^2 and at most n^2 terms accumulate, so
    // one reduction per coordinate suffices; large p reduces every term.
    const std::uint64_t p = field_.prime();
    const bool reduce_terms = p > (std::uint64_t{1} << 20);
    thread_local std::vector<std::uint64_t> acc;
    thread_local std::vector<std::size_t> nu, nv;
    acc.assign(n_, 0);
    nu.clear();
    nv.clear();
    for (std::size_t i = 0; i < n_; ++i) {
      if (!u[i].is_zero()) nu.push_back(i);
      if (!v[i].is_zero()) nv.push_back(i);
    }
    for (std::size_t i : nu) {
      for (std::size_t j : nv) {
        if (i == j) continue;
        const std::uint64_t coef = std::uint64_t{u[i].value} * v[j].value % p;
        const Scalar* c = &dense_[(i * n_ + j) * n_];
        for (std::size_t k = 0; k < n_; ++k) {
          acc[k] += coef * c[k].value;
          if (reduce_terms) acc[k] %= p;
        }
      }
    }
    for (std::size_t k = 0; k < n_; ++k) out[k] = Scalar{static_cast<std::uint32_t>(acc[k] % p)};
  }

  std::optional<JacobiViolation> jacobi_violation() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        for (std::size_t k = j + 1; k < n_; ++k) {
          const Vector eij = basis_bracket(i, j), ejk = basis_bracket(j, k), eki = basis_bracket(k, i);
          Vector s = bracket(eij, unit_vector(n_, k));
          s = add(field_, s, bracket(ejk, unit_vector(n_, i)));
          s = add(field_, s, bracket(eki, unit_vector(n_, j)));
          if (!is_zero(s)) return JacobiViolation{i, j, k};
        }
      }
    }
    return std::nullopt;
  }

  bool is_abelian() const {
    return std::all_of(table_.begin(), table_.end(), [](const Vector& v) { return is_zero(v); });
  }

  Subspace zero_space() const { return Subspace(field_, n_); }
  Subspace full_space() const { return Subspace::full(field_, n_); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.table_ == b.table_;
  }

 private:
  struct Unchecked {};
  LieAlgebra(PrimeField F, std::size_t n, std::vector<Vector> table, Unchecked)
      : field_(F), n_(n), table_(std::move(table)) {
    check_shape();
  }

  void build_dense() {
    dense_.assign(n_ * n_ * n_, Scalar{});
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        const Vector& c = table_[pair_index(n_, i, j)];
        for (std::size_t k = 0; k < n_; ++k) {
          dense_[(i * n_ + j) * n_ + k] = c[k];
          dense_[(j * n_ + i) * n_ + k] = field_.neg(c[k]);
        }
      }
    }
  }

  void check_shape() {
    if (table_.size() != pair_count(n_)) throw InvalidAlgebra("structure table has wrong number of pairs");
    for (auto& v : table_) {
      if (v.size() != n_) throw InvalidAlgebra("structure constant vector has wrong length");
      for (auto& s : v) {
        if (s.value >= field_.prime()) throw InvalidAlgebra("structure constant not reduced mod p");
      }
    }
    if (!names_.empty() && names_.size() != n_) throw InvalidAlgebra("basis name count differs from dim");
    build_dense();
  }

  PrimeField field_;
  std::size_t n_;
  std::vector<Vector> table_;
  std::vector<std::string> names_;
  std::vector<Scalar> dense_;  // [e_i, e_j] at (i*n + j)*n, both orders
};

// ---------------------------------------------------------------------------
// Subspace products and closure

/// span{[u, v] : u in basis(U), v in basis(V)}
inline Subspace product_space(const LieAlgebra& L, const Subspace& U, const Subspace& V) {
  std::vector<Vector> out;
  for (const auto& u : U.basis()) {
    for (const auto& v : V.basis()) {
      Vector w = L.bracket(u, v);
      if (!is_zero(w)) out.push_back(std::move(w));
    }
  }
  return Subspace::span(L.field(), L.dim(), std::move(out));
}

inline bool is_subalgebra(const LieAlgebra& L, const Subspace& U) {
  const auto& b = U.basis();
  thread_local Vector w;
  w.resize(L.dim());
  for (std::size_t r = 0; r < b.size(); ++r) {
    for (std::size_t s = r + 1; s < b.size(); ++s) {
      L.bracket_into(b[r], b[s], w);
      if (!U.member(w)) return false;
    }
  }
  return true;
}

inline bool is_ideal(const LieAlgebra& L, const Subspace& U) {
  if (U.is_zero() || U.is_full()) return true;
  thread_local Vector w;
  w.resize(L.dim());
  for (std::size_t i = 0; i < L.dim(); ++i) {
    const Vector e = unit_vector(L.dim(), i);
    for (const auto& u : U.basis()) {
      L.bracket_into(e, u, w);
      if (!U.member(w)) return false;
    }
  }
  return true;
}

/// Least subalgebra containing U.
inline Subspace subalgebra_closure(const LieAlgebra& L, Subspace U) {
  while (true) {
    Subspace next = U + product_space(L, U, U);
    if (next.dim() == U.dim()) return U;
    U = std::move(next);
  }
}

// ---------------------------------------------------------------------------
// Derived constructions

/// L/I on the complement spanned by the non-pivot coordinates of I.
struct Quotient {
  LieAlgebra algebra;
  Subspace ideal;
  std::vector<std::size_t> complement;  // ambient coordinates kept by the quotient

  Vector project(const Vector& v) const {
    Vector r = ideal.reduce(v);
    Vector q(complement.size());
    for (std::size_t a = 0; a < complement.size(); ++a) q[a] = r[complement[a]];
    return q;
  }

  Vector lift(const Vector& q) const {
    Vector v(ideal.ambient_dim());
    for (std::size_t a = 0; a < complement.size(); ++a) v[complement[a]] = q[a];
    return v;
  }

  Subspace project(const Subspace& U) const {
    std::vector<Vector> rows;
    for (const auto& u : U.basis()) rows.push_back(project(u));
    return Subspace::span(algebra.field(), algebra.dim(), std::move(rows));
  }

  /// Full preimage in L of a subspace of L/I.
  Subspace preimage(const Subspace& Q) const {
    std::vector<Vector> rows = ideal.basis();
    for (const auto& q : Q.basis()) rows.push_back(lift(q));
    return Subspace::span(ideal.field(), ideal.ambient_dim(), std::move(rows));
  }
};

inline Quotient quotient(const LieAlgebra& L, const Subspace& I) {
  if (!is_ideal(L, I)) throw NotClosed("quotient: " + I.to_string() + " is not an ideal");
  std::vector<bool> pivot(L.dim(), false);
  for (auto c : I.pivots()) pivot[c] = true;
  std::vector<std::size_t> complement;
  for (std::size_t c = 0; c < L.dim(); ++c) {
    if (!pivot[c]) complement.push_back(c);
  }
  const std::size_t m = complement.size();
  Quotient Q{LieAlgebra::abelian(L.field(), 0), I, complement};
  std::vector<Vector> table(pair_count(m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    if (!L.names().empty()) names.push_back(L.names()[complement[a]]);
    for (std::size_t b = a + 1; b < m; ++b) {
      table[pair_index(m, a, b)] = Q.project(L.basis_bracket(complement[a], complement[b]));
    }
  }
  Q.algebra = LieAlgebra(L.field(), m, std::move(table), std::move(names));
  return Q;
}

inline LieAlgebra direct_sum(const LieAlgebra& A, const LieAlgebra& B) {
  if (!(A.field() == B.field())) throw DimensionMismatch("direct_sum: algebras over different fields");
  const std::size_t n = A.dim() + B.dim();
  std::vector<Vector> table(pair_count(n), Vector(n));
  for (std::size_t i = 0; i < A.dim(); ++i) {
    for (std::size_t j = i + 1; j < A.dim(); ++j) {
      const auto& src = A.table()[pair_index(A.dim(), i, j)];
      std::copy(src.begin(), src.end(), table[pair_index(n, i, j)].begin());
    }
  }
  for (std::size_t i = 0; i < B.dim(); ++i) {
    for (std::size_t j = i + 1; j < B.dim(); ++j) {
      const auto& src = B.table()[pair_index(B.dim(), i, j)];
      auto& dst = table[pair_index(n, A.dim() + i, A.dim() + j)];
      std::copy(src.begin(), src.end(), dst.begin() + static_cast<std::ptrdiff_t>(A.dim()));
    }
  }
  std::vector<std::string> names;
  if (!A.names().empty() || !B.names().empty()) {
    for (std::size_t i = 0; i < A.dim(); ++i) names.push_back(A.name(i));
    for (std::size_t i = 0; i < B.dim(); ++i) names.push_back(B.name(i));
  }
  return LieAlgebra(A.field(), n, std::move(table), std::move(names));
}

/// A subalgebra B of L as an algebra in its own right, on B's echelon basis.
struct Embedded {
  LieAlgebra algebra;
  Subspace space;

  Vector embed(const Vector& coords) const {
    Vector v(space.ambient_dim());
    for (std::size_t r = 0; r < coords.size(); ++r) axpy(space.field(), coords[r], space.basis()[r], v);
    return v;
  }

  Subspace embed(const Subspace& U) const {
    std::vector<Vector> rows;
    for (const auto& u : U.basis()) rows.push_back(embed(u));
    return Subspace::span(space.field(), space.ambient_dim(), std::move(rows));
  }

  /// A subspace of L lying inside B, in B's coordinates.
  Subspace restrict(const Subspace& U) const {
    std::vector<Vector> rows;
    for (const auto& u : U.basis()) rows.push_back(space.coordinates(u));
    return Subspace::span(space.field(), space.dim(), std::move(rows));
  }
};

inline Embedded as_algebra(const LieAlgebra& L, const Subspace& B) {
  if (!is_subalgebra(L, B)) throw NotClosed("as_algebra: " + B.to_string() + " is not a subalgebra");
  const std::size_t m = B.dim();
  std::vector<Vector> table(pair_count(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      table[pair_index(m, a, b)] = B.coordinates(L.bracket(B.basis()[a], B.basis()[b]));
    }
  }
  return Embedded{LieAlgebra(L.field(), m, std::move(table)), B};
}

// ---------------------------------------------------------------------------
// Series

/// U, [U,U], [[U,U],[U,U]], ... up to and including the first repeated term.
inline std::vector<Subspace> derived_series(const LieAlgebra& L, const Subspace& U) {
  std::vector<Subspace> s{U};
  while (true) {
    Subspace next = product_space(L, s.back(), s.back());
    const bool stable = next.dim() == s.back().dim();
    if (stable) return s;
    s.push_back(std::move(next));
  }
}

inline std::vector<Subspace> derived_series(const LieAlgebra& L) { return derived_series(L, L.full_space()); }

/// L, [L,L], [L,[L,L]], ... until stable.
inline std::vector<Subspace> lower_central_series(const LieAlgebra& L) {
  const Subspace full = L.full_space();
  std::vector<Subspace> s{full};
  while (true) {
    Subspace next = product_space(L, full, s.back());
    if (next.dim() == s.back().dim()) return s;
    s.push_back(std::move(next));
  }
}

inline bool is_solvable(const LieAlgebra& L, const Subspace& U) { return derived_series(L, U).back().is_zero(); }
inline bool is_solvable(const LieAlgebra& L) { return derived_series(L).back().is_zero(); }
inline bool is_nilpotent(const LieAlgebra& L) { return lower_central_series(L).back().is_zero(); }

// ---------------------------------------------------------------------------
// Named algebras

namespace catalog {

inline Vector vec(const PrimeField& F, std::initializer_list<std::int64_t> xs) {
  Vector v;
  for (auto x : xs) v.push_back(F.from_int(x));
  return v;
}

inline LieAlgebra abelian(PrimeField F, std::size_t n) { return LieAlgebra::abelian(F, n); }

/// [x, y] = y
inline LieAlgebra nonabelian2(PrimeField F) {
  return LieAlgebra::from_brackets(F, 2, {{0, 1, vec(F, {0, 1})}}, {"x", "y"});
}

/// [x, y] = z, z central
inline LieAlgebra heisenberg(PrimeField F) {
  return LieAlgebra::from_brackets(F, 3, {{0, 1, vec(F, {0, 0, 1})}}, {"x", "y", "z"});
}

/// [x, y] = y + z, [x, z] = z
inline LieAlgebra counterexample_L1(PrimeField F) {
  return LieAlgebra::from_brackets(F, 3, {{0, 1, vec(F, {0, 1, 1})}, {0, 2, vec(F, {0, 0, 1})}},
                                   {"x", "y", "z"});
}

/// Two copies of counterexample_L1 on x, y, z and a, b, c.
inline LieAlgebra counterexample_double(PrimeField F) {
  LieAlgebra L = direct_sum(counterexample_L1(F), counterexample_L1(F));
  return LieAlgebra(F, 6, L.table(), {"x", "y", "z", "a", "b", "c"});
}

/// Basis u_{-1}, u_0, u_1 with [u_{-1}, u_0] = u_{-1} + gamma0 u_1,
/// [u_{-1}, u_1] = u_0, [u_0, u_1] = u_1.
inline LieAlgebra L1_gamma(PrimeField F, Scalar gamma0) {
  return LieAlgebra::from_brackets(F, 3,
                                   {{0, 1, Vector{F.one(), F.zero(), gamma0}},
                                    {0, 2, vec(F, {0, 1, 0})},
                                    {1, 2, vec(F, {0, 0, 1})}},
                                   {"u_-1", "u_0", "u_1"});
}

/// Basis (e, h, f) with [h, e] = 2e, [h, f] = -2f, [e, f] = h.
inline LieAlgebra sl2(PrimeField F) {
  return LieAlgebra::from_brackets(
      F, 3, {{1, 0, vec(F, {2, 0, 0})}, {1, 2, vec(F, {0, 0, -2})}, {0, 2, vec(F, {0, 1, 0})}},
      {"e", "h", "f"});
}

struct Params {
  std::optional<std::size_t> n;
  std::optional<std::int64_t> gamma;
};

inline const std::vector<std::string>& names() {
  static const std::vector<std::string> kNames{"abelian",           "nonabelian2",           "heisenberg",
                                               "counterexample_L1", "counterexample_double", "L1_gamma",
                                               "sl2"};
  return kNames;
}

inline LieAlgebra make(const std::string& name, std::uint32_t p, const Params& params = {}) {
  const PrimeField F(p);
  if (name == "abelian") return abelian(F, params.n.value_or(1));
  if (name == "nonabelian2") return nonabelian2(F);
  if (name == "heisenberg") return heisenberg(F);
  if (name == "counterexample_L1") return counterexample_L1(F);
  if (name == "counterexample_double") return counterexample_double(F);
  if (name == "L1_gamma") return L1_gamma(F, F.from_int(params.gamma.value_or(0)));
  if (name == "sl2") return sl2(F);
  throw InvalidAlgebra("unknown catalog algebra '" + name + "'");
}

}  // namespace catalog

}  // namespace csupp
