#pragma once

/**
 * @file subspace.hpp
 * @brief Exact linear algebra over GF(p)^n.
 *
 * A Subspace is stored as its reduced row echelon basis. RREF is canonical,
 * so equality, ordering and hashing of subspaces are equality, ordering and
 * hashing of the echelon matrices. Everything that the rest of the library
 * calls a subalgebra, ideal, core or Frattini ideal is one of these.
 */

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "csupp/errors.hpp"
#include "csupp/gfp.hpp"

namespace csupp {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = Scalar{1};
  return v;
}

inline bool is_zero(std::span<const Scalar> v) noexcept {
  return std::all_of(v.begin(), v.end(), [](Scalar s) { return s.is_zero(); });
}

/// y += a * x
inline void axpy(const PrimeField& F, Scalar a, std::span<const Scalar> x, std::span<Scalar> y) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = F.add(y[i], F.mul(a, x[i]));
}

inline Vector add(const PrimeField& F, const Vector& x, const Vector& y) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.add(x[i], y[i]);
  return r;
}

inline Vector scale(const PrimeField& F, Scalar a, const Vector& x) {
  Vector r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = F.mul(a, x[i]);
  return r;
}

namespace detail {

/// Brings rows[0..] into reduced row echelon form in place, restricted to the
/// first `ncols` columns for pivot selection. Zero rows are dropped. Returns
/// the pivot column of each remaining row.
inline std::vector<std::size_t> rref_in_place(const PrimeField& F, std::vector<Vector>& rows,
                                              std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Scalar inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      axpy(F, F.neg(rows[i][c]), rows[r], rows[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

/// Saturating q-binomial [n choose k]_q.
inline std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto sat_add = [](std::uint64_t a, std::uint64_t b) { return a > kMax - b ? kMax : a + b; };
  auto sat_mul = [](std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  // Pascal-style recurrence [n,k] = [n-1,k-1] + q^k [n-1,k]
  std::vector<std::uint64_t> row(k + 1, 0);
  row[0] = 1;
  for (std::size_t m = 1; m <= n; ++m) {
    for (std::size_t j = std::min(m, k); j >= 1; --j) {
      std::uint64_t qj = 1;
      for (std::size_t t = 0; t < j; ++t) qj = sat_mul(qj, q);
      row[j] = sat_add(row[j - 1], sat_mul(qj, row[j]));
    }
  }
  return row[k];
}

}  // namespace detail

class Subspace {
 public:
  /// The zero subspace of GF(2)^0; placeholder for default-constructed aggregates.
  Subspace() : field_(2), n_(0) {}

  /// Zero subspace of GF(p)^n.
  Subspace(PrimeField F, std::size_t n) : field_(F), n_(n) {}

  static Subspace span(const PrimeField& F, std::size_t n, std::vector<Vector> vectors) {
    for (const auto& v : vectors) {
      if (v.size() != n) {
        throw DimensionMismatch("span: vector of length " + std::to_string(v.size()) +
                                " in ambient dimension " + std::to_string(n));
      }
    }
    Subspace s(F, n);
    s.pivots_ = detail::rref_in_place(F, vectors, n);
    s.rows_ = std::move(vectors);
    return s;
  }

  static Subspace full(const PrimeField& F, std::size_t n) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(unit_vector(n, i));
    return span(F, n, std::move(rows));
  }

  /// Wraps rows that are already in reduced row echelon form.
  static Subspace from_rref(const PrimeField& F, std::size_t n, std::vector<Vector> rows,
                            std::vector<std::size_t> pivots) {
    Subspace s(F, n);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool is_zero() const noexcept { return rows_.empty(); }
  bool is_full() const noexcept { return rows_.size() == n_; }
  const std::vector<Vector>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// v minus its projection onto this subspace along the non-pivot coordinates;
  /// zero exactly when v is a member. Linear in v.
  Vector reduce(Vector v) const {
    check_vector(v, "reduce");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = v[pivots_[r]];
      if (!c.is_zero()) axpy(field_, field_.neg(c), rows_[r], v);
    }
    return v;
  }

  bool member(const Vector& v) const {
    check_vector(v, "member");
    thread_local Vector scratch;
    scratch.assign(v.begin(), v.end());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar c = scratch[pivots_[r]];
      if (!c.is_zero()) axpy(field_, field_.neg(c), rows_[r], scratch);
    }
    return csupp::is_zero(scratch);
  }

  /// Coordinates of a member with respect to the echelon basis.
  std::vector<Scalar> coordinates(const Vector& v) const {
    if (!member(v)) throw NotClosed("coordinates: vector is not in the subspace");
    std::vector<Scalar> c(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) c[r] = v[pivots_[r]];
    return c;
  }

  /// U ⊇ V
  bool contains(const Subspace& V) const {
    check_ambient(V, "contains");
    if (V.dim() > dim()) return false;
    return std::all_of(V.rows_.begin(), V.rows_.end(), [&](const Vector& v) { return member(v); });
  }

  /// dim(U + V), without building the sum.
  std::size_t sum_dim(const Subspace& V) const {
    check_ambient(V, "sum_dim");
    // Reduce V modulo U, then count the rank of what is left.
    thread_local std::vector<Vector> rest;
    rest.resize(V.dim());
    for (std::size_t r = 0; r < V.dim(); ++r) {
      rest[r].assign(V.rows_[r].begin(), V.rows_[r].end());
      for (std::size_t q = 0; q < rows_.size(); ++q) {
        const Scalar c = rest[r][pivots_[q]];
        if (!c.is_zero()) axpy(field_, field_.neg(c), rows_[q], rest[r]);
      }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n_ && rank < rest.size(); ++c) {
      std::size_t sel = rank;
      while (sel < rest.size() && rest[sel][c].is_zero()) ++sel;
      if (sel == rest.size()) continue;
      std::swap(rest[rank], rest[sel]);
      const Scalar inv = field_.inv(rest[rank][c]);
      for (std::size_t i = rank + 1; i < rest.size(); ++i) {
        if (!rest[i][c].is_zero()) axpy(field_, field_.neg(field_.mul(rest[i][c], inv)), rest[rank], rest[i]);
      }
      ++rank;
    }
    return dim() + rank;
  }

  Subspace operator+(const Subspace& V) const {
    check_ambient(V, "sum");
    std::vector<Vector> rows = rows_;
    rows.insert(rows.end(), V.rows_.begin(), V.rows_.end());
    return span(field_, n_, std::move(rows));
  }

  /// Zassenhaus: reduce [U U; V 0]; rows whose left half vanishes span U∩V.
  Subspace intersect(const Subspace& V) const {
    check_ambient(V, "intersect");
    if (is_zero() || V.is_zero()) return Subspace(field_, n_);
    if (is_full()) return V;
    if (V.is_full()) return *this;
    std::vector<Vector> m;
    m.reserve(dim() + V.dim());
    for (const auto& u : rows_) {
      Vector row(2 * n_);
      std::copy(u.begin(), u.end(), row.begin());
      std::copy(u.begin(), u.end(), row.begin() + static_cast<std::ptrdiff_t>(n_));
      m.push_back(std::move(row));
    }
    for (const auto& v : V.rows_) {
      Vector row(2 * n_);
      std::copy(v.begin(), v.end(), row.begin());
      m.push_back(std::move(row));
    }
    detail::rref_in_place(field_, m, 2 * n_);
    std::vector<Vector> out;
    for (const auto& row : m) {
      const std::span<const Scalar> left(row.data(), n_);
      if (csupp::is_zero(left)) out.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n_), row.end());
    }
    return span(field_, n_, std::move(out));
  }

  /// Canonical order: dimension, then the echelon matrix read row-major.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.dim() <=> b.dim(); c != 0) return c;
    for (std::size_t r = 0; r < a.rows_.size(); ++r) {
      if (auto c = a.rows_[r] <=> b.rows_[r]; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ n_;
    for (const auto& r : rows_) {
      for (Scalar s : r) {
        h ^= s.value + 1;
        h *= 1099511628211ULL;
      }
      h ^= 0xff;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (r) s += ", ";
      s += "(";
      for (std::size_t i = 0; i < n_; ++i) {
        if (i) s += ",";
        s += std::to_string(rows_[r][i].value);
      }
      s += ")";
    }
    return s + ">";
  }

 private:
  void check_ambient(const Subspace& V, const char* op) const {
    if (V.n_ != n_ || !(V.field_ == field_)) {
      throw DimensionMismatch(std::string(op) + ": ambient GF(" + std::to_string(field_.prime()) +
                              ")^" + std::to_string(n_) + " vs GF(" +
                              std::to_string(V.field_.prime()) + ")^" + std::to_string(V.n_));
    }
  }
  void check_vector(const Vector& v, const char* op) const {
    if (v.size() != n_) {
      throw DimensionMismatch(std::string(op) + ": vector of length " + std::to_string(v.size()) +
                              " in ambient dimension " + std::to_string(n_));
    }
  }

  PrimeField field_;
  std::size_t n_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

struct SubspaceHash {
  std::size_t operator()(const Subspace& s) const noexcept { return s.hash(); }
};

/// Solutions a of sum_r a_r * rows[r] = 0, as a subspace of GF(p)^{rows.size()}.
inline Subspace left_kernel(const PrimeField& F, const std::vector<Vector>& rows, std::size_t width) {
  const std::size_t m = rows.size();
  std::vector<Vector> aug;
  aug.reserve(m);
  for (std::size_t r = 0; r < m; ++r) {
    Vector row(width + m);
    std::copy(rows[r].begin(), rows[r].end(), row.begin());
    row[width + r] = Scalar{1};
    aug.push_back(std::move(row));
  }
  detail::rref_in_place(F, aug, width + m);
  std::vector<Vector> kernel;
  for (const auto& row : aug) {
    if (csupp::is_zero(std::span<const Scalar>(row.data(), width))) {
      kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(width), row.end());
    }
  }
  return Subspace::span(F, m, std::move(kernel));
}

/// Number of k-dimensional subspaces of GF(p)^n (saturating at 2^64-1).
inline std::uint64_t subspace_count(std::uint32_t p, std::size_t n, std::size_t k) {
  return detail::gaussian_binomial(p, n, k);
}

inline std::uint64_t subspace_count(std::uint32_t p, std::size_t n,
                                    std::optional<std::size_t> dim_filter = std::nullopt) {
  if (dim_filter) return subspace_count(p, n, *dim_filter);
  std::uint64_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    const std::uint64_t c = subspace_count(p, n, k);
    total = c > std::numeric_limits<std::uint64_t>::max() - total
                ? std::numeric_limits<std::uint64_t>::max()
                : total + c;
  }
  return total;
}

inline constexpr std::uint64_t kDefaultSubspaceCap = 10'000'000;

/// Pivot column sets of k-dimensional echelon matrices in n columns, lexicographic.
inline std::vector<std::vector<std::size_t>> echelon_patterns(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  while (true) {
    out.push_back(cols);
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return out;
}

/// Every subspace with the given pivot columns, free entries filled in odometer order.
inline void enumerate_pattern(const PrimeField& F, std::size_t n, const std::vector<std::size_t>& pivots,
                              const std::function<void(const Subspace&)>& visit) {
  const std::size_t k = pivots.size();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::pair<std::size_t, std::size_t>> free;  // (row, col)
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = pivots[r] + 1; c < n; ++c) {
      if (!is_pivot[c]) free.emplace_back(r, c);
    }
  }
  std::vector<Vector> rows(k, Vector(n));
  for (std::size_t r = 0; r < k; ++r) rows[r][pivots[r]] = Scalar{1};
  const std::uint32_t p = F.prime();
  while (true) {
    visit(Subspace::from_rref(F, n, rows, pivots));
    std::size_t i = free.size();
    while (i > 0) {
      auto [r, c] = free[i - 1];
      if (rows[r][c].value + 1 < p) {
        rows[r][c].value += 1;
        break;
      }
      rows[r][c].value = 0;
      --i;
    }
    if (i == 0) break;
  }
}

/// Streams every subspace of GF(p)^n exactly once (optionally only those of one
/// dimension), in order of dimension, then pivot pattern, then fill.
inline void enumerate_subspaces(const PrimeField& F, std::size_t n, std::optional<std::size_t> dim_filter,
                                const std::function<void(const Subspace&)>& visit,
                                std::uint64_t cap = kDefaultSubspaceCap) {
  const std::uint64_t total = subspace_count(F.prime(), n, dim_filter);
  if (total > cap) {
    throw CapExceeded("enumerate subspaces of GF(" + std::to_string(F.prime()) + ")^" + std::to_string(n),
                      total, cap);
  }
  for (std::size_t k = 0; k <= n; ++k) {
    if (dim_filter && *dim_filter != k) continue;
    for (const auto& pattern : echelon_patterns(n, k)) enumerate_pattern(F, n, pattern, visit);
  }
}

}  // namespace csupp

template <>
struct std::hash<csupp::Subspace> {
  std::size_t operator()(const csupp::Subspace& s) const noexcept { return s.hash(); }
};
