#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace butson {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings Z[zeta_k].
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A fixed-width intermediate would have wrapped.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Requested order lies outside the supported envelope.
class UnsupportedOrder : public Error {
 public:
  using Error::Error;
};

/// Malformed matrix text. `line()` is 1-based; 0 means end of input.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Which hypothesis of a construction was violated.
enum class Condition {
  kNotPrime,
  kPSquare,           // p^2 does not divide k
  kRootOrder,         // H.k differs from the morphism's source order
  kWitnessShape,      // C is not p x p
  kWitnessRoots,      // C has entries that are not p-th roots of unity
  kWitnessInvalid,    // C fails the Gram check
  kFactorDivides,     // m does not divide k
  kPrimeCoverage,     // a prime of k does not divide t = k/m
};

const char* condition_name(Condition c) noexcept;

class PreconditionError : public Error {
 public:
  PreconditionError(Condition c, const std::string& detail)
      : Error(std::string(condition_name(c)) + ": " + detail), condition_(c) {}

  Condition condition() const noexcept { return condition_; }

 private:
  Condition condition_;
};

}  // namespace butson
