#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace periodkit {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A named precondition of an operation was violated.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed; carries a 1-based line (0 if not line oriented).
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An internal invariant that must hold for valid input did not hold
/// (odd-coefficient cancellation, periodicity, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// Parses "p", "-p", "p/q" (optionally with surrounding blanks). Result is canonical.
Rational parse_rational(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);

/// Exact square root if `r` is the square of a rational.
std::optional<Rational> exact_sqrt(const Rational& r);

/// r^k for k >= 0.
Rational pow(const Rational& r, unsigned k);

int sign(const Rational& r);

/// Fixed-point decimal rounded to `digits` places after the point.
std::string to_decimal(const Rational& r, int digits = 30);

/// Simplest rational (smallest denominator) inside the open interval (lo, hi).
Rational simplest_between(const Rational& lo, const Rational& hi);

}  // namespace periodkit
