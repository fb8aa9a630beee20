#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace csupp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic outside the domain of an operation (inverting zero, composite modulus).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vectors or subspaces living in different ambient spaces, or algebras over different fields.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/// Structure-constant table or document that does not describe a Lie algebra.
class InvalidAlgebra : public Error {
 public:
  using Error::Error;
};

/// A subspace was passed where a subalgebra or ideal is required.
class NotClosed : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured size bound.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::uint64_t required, std::uint64_t cap)
      : Error(what + ": requires " + std::to_string(required) + " items, cap is " +
              std::to_string(cap)),
        required_(required),
        cap_(cap) {}

  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t cap() const noexcept { return cap_; }

 private:
  std::uint64_t required_;
  std::uint64_t cap_;
};

}  // namespace csupp
