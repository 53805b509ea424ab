#pragma once

#include <string>

#include "periodkit/rational.hpp"

namespace periodkit {

/// a + b·√2 with rational a, b.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}
  static QuadExt sqrt2() { return {Rational(0), Rational(1)}; }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  Rational norm() const { return a_ * a_ - 2 * b_ * b_; }

  QuadExt& operator+=(const QuadExt& o) { a_ += o.a_; b_ += o.b_; return *this; }
  QuadExt& operator-=(const QuadExt& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  QuadExt operator-() const { return {-a_, -b_}; }
  friend QuadExt operator*(const QuadExt& x, const QuadExt& y) {
    return {x.a_ * y.a_ + 2 * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
  }
  friend QuadExt operator*(const QuadExt& x, const Rational& c) { return {x.a_ * c, x.b_ * c}; }
  friend QuadExt operator*(const Rational& c, const QuadExt& x) { return {x.a_ * c, x.b_ * c}; }
  friend bool operator==(const QuadExt& x, const QuadExt& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  /// Throws on zero.
  QuadExt inverse() const;
  QuadExt operator/(const QuadExt& y) const { return *this * y.inverse(); }

  std::string to_string() const;

 private:
  Rational a_, b_;
};

}  // namespace periodkit
