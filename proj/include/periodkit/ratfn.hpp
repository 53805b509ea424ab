#pragma once

#include <string>

#include "periodkit/bipoly.hpp"
#include "periodkit/unipoly.hpp"

namespace periodkit {

/// Reduced univariate rational function; denominator has coprime integer
/// coefficients and positive leading coefficient.
class UniRatFn {
 public:
  UniRatFn() : den_(Rational(1)) {}
  UniRatFn(const Rational& c, char var = 'x') : num_(c, var), den_(Rational(1), var) {}  // NOLINT
  UniRatFn(UniPoly num) : num_(std::move(num)), den_(Rational(1), num_.var()) {}  // NOLINT
  UniRatFn(UniPoly num, UniPoly den);

  const UniPoly& num() const { return num_; }
  const UniPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend UniRatFn operator+(const UniRatFn& a, const UniRatFn& b);
  friend UniRatFn operator-(const UniRatFn& a, const UniRatFn& b);
  friend UniRatFn operator*(const UniRatFn& a, const UniRatFn& b);
  friend UniRatFn operator/(const UniRatFn& a, const UniRatFn& b);
  UniRatFn operator-() const { return UniRatFn(-num_, den_); }
  friend bool operator==(const UniRatFn& a, const UniRatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  UniRatFn derivative() const;
  Rational operator()(const Rational& t) const;
  long double eval_ld(long double t) const;
  std::string to_string() const;

 private:
  UniPoly num_, den_;
};

/// Reduced bivariate rational function with the same normalization as UniRatFn
/// (graded-lex leading coefficient of the denominator positive).
class BiRatFn {
 public:
  BiRatFn() : den_(Rational(1), {'x', 'z'}) {}
  BiRatFn(BiPoly num) : num_(std::move(num)), den_(Rational(1), num_.labels()) {}  // NOLINT
  BiRatFn(BiPoly num, BiPoly den);
  /// Caller guarantees gcd(num, den) = 1; only the constant normalization is applied.
  static BiRatFn from_coprime(BiPoly num, BiPoly den);

  const BiPoly& num() const { return num_; }
  const BiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend BiRatFn operator+(const BiRatFn& a, const BiRatFn& b);
  friend BiRatFn operator-(const BiRatFn& a, const BiRatFn& b);
  friend BiRatFn operator*(const BiRatFn& a, const BiRatFn& b);
  friend BiRatFn operator/(const BiRatFn& a, const BiRatFn& b);
  friend BiRatFn operator*(const Rational& c, const BiRatFn& a) { return BiRatFn(a.num_ * c, a.den_); }
  BiRatFn operator-() const;
  friend bool operator==(const BiRatFn& a, const BiRatFn& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  BiRatFn partial_first() const;
  BiRatFn partial_second() const;
  /// d/dfirst along a curve where the second variable has slope `dz`.
  BiRatFn total_derivative(const BiRatFn& dz) const;
  BiRatFn swapped() const { return BiRatFn(num_.swapped(), den_.swapped()); }

  Rational operator()(const Rational& a, const Rational& b) const;
  long double eval_ld(long double a, long double b) const;
  /// Substitutes first = u(s), second = v(s).
  UniRatFn substitute(const UniRatFn& u, const UniRatFn& v) const;
  std::string to_string() const;

 private:
  BiPoly num_, den_;
};

/// P(u(s), v(s)) for a polynomial P.
UniRatFn substitute(const BiPoly& p, const UniRatFn& u, const UniRatFn& v);

}  // namespace periodkit
