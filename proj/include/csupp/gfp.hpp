#pragma once

/**
 * @file gfp.hpp
 * @brief Arithmetic in prime fields GF(p).
 *
 * Scalars are plain values in [0, p); the modulus lives in the PrimeField
 * that owns the surrounding structure (vector, subspace, algebra), so large
 * tables of scalars stay compact.
 */

#include <compare>
#include <cstdint>
#include <string>

#include "csupp/errors.hpp"

namespace csupp {

struct Scalar {
  std::uint32_t value = 0;

  constexpr Scalar() = default;
  constexpr explicit Scalar(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const noexcept { return value == 0; }
  friend constexpr auto operator<=>(Scalar, Scalar) = default;
};

class PrimeField {
 public:
  /// Throws DomainError unless p is prime.
  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
  }

  std::uint32_t prime() const noexcept { return p_; }
  std::uint32_t characteristic() const noexcept { return p_; }

  Scalar zero() const noexcept { return Scalar{0}; }
  Scalar one() const noexcept { return Scalar{1}; }

  /// Reduces an arbitrary integer into [0, p).
  Scalar from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return Scalar{static_cast<std::uint32_t>(r)};
  }

  Scalar add(Scalar a, Scalar b) const noexcept {
    std::uint64_t s = std::uint64_t{a.value} + b.value;
    return Scalar{static_cast<std::uint32_t>(s >= p_ ? s - p_ : s)};
  }
  Scalar neg(Scalar a) const noexcept { return Scalar{a.value == 0 ? 0 : p_ - a.value}; }
  Scalar sub(Scalar a, Scalar b) const noexcept { return add(a, neg(b)); }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return Scalar{static_cast<std::uint32_t>(std::uint64_t{a.value} * b.value % p_)};
  }

  Scalar inv(Scalar a) const {
    if (a.is_zero()) throw DomainError("inverse of zero in GF(" + std::to_string(p_) + ")");
    // extended Euclid on (a, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a.value;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    return from_int(t);
  }

  Scalar pow(Scalar a, std::uint64_t e) const noexcept {
    Scalar result = one();
    while (e != 0) {
      if (e & 1U) result = mul(result, a);
      a = mul(a, a);
      e >>= 1U;
    }
    return result;
  }

  /// True iff some b satisfies b*b == a.
  bool is_square(Scalar a) const noexcept {
    if (a.is_zero() || p_ == 2) return true;
    return pow(a, (p_ - 1) / 2) == one();  // Euler's criterion
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

  static bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) return false;
    }
    return true;
  }

 private:
  std::uint32_t p_;
};

}  // namespace csupp
