#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "periodkit/unipoly.hpp"

namespace periodkit {

/// Exponent pair (i, j) of the monomial a^i b^j, where (a, b) are the two labels.
using Monomial = std::pair<int, int>;

/// Sparse bivariate polynomial over Q. No stored zero coefficients.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(char first, char second = 'z') : labels_{first, second} {}
  BiPoly(const Rational& c, std::pair<char, char> labels);

  static BiPoly term(const Rational& c, int i, int j, std::pair<char, char> labels = {'x', 'z'});
  static BiPoly first_var(std::pair<char, char> labels = {'x', 'z'}) { return term(Rational(1), 1, 0, labels); }
  static BiPoly second_var(std::pair<char, char> labels = {'x', 'z'}) { return term(Rational(1), 0, 1, labels); }
  /// Embeds p(first) (or p(second) when `in_second`).
  static BiPoly from_uni(const UniPoly& p, bool in_second, std::pair<char, char> labels = {'x', 'z'});
  /// Inverse of coeffs_in_second().
  static BiPoly from_coeffs_in_second(const std::vector<UniPoly>& c, std::pair<char, char> labels = {'x', 'z'});

  std::pair<char, char> labels() const { return labels_; }
  BiPoly with_labels(std::pair<char, char> l) const;
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coeff(int i, int j) const;
  size_t size() const { return terms_.size(); }

  int degree_first() const;
  int degree_second() const;
  int total_degree() const;
  /// Leading monomial in graded-lex order (total degree, then first exponent).
  Monomial lead_monomial() const;
  const Rational& lead() const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  BiPoly operator-() const;
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.terms_ == b.terms_; }
  BiPoly pow(unsigned k) const;

  Rational operator()(const Rational& a, const Rational& b) const;
  long double eval_ld(long double a, long double b) const;
  /// P(a, second) as a polynomial in the second label.
  UniPoly at_first(const Rational& a) const;
  /// P(first, b) as a polynomial in the first label.
  UniPoly at_second(const Rational& b) const;

  BiPoly partial_first() const;
  BiPoly partial_second() const;
  /// P(b, a)
  BiPoly swapped() const;

  /// Coefficients with respect to the second variable; entry j is a polynomial in the first.
  std::vector<UniPoly> coeffs_in_second() const;

  /// Exact quotient P / D, or nullopt when D does not divide P.
  std::optional<BiPoly> divide(const BiPoly& d) const;
  BiPoly exact_div(const BiPoly& d) const;

  /// Positive rational content (gcd of numerators over lcm of denominators).
  Rational content() const;
  /// Coprime integer coefficients with positive graded-lex leading coefficient.
  BiPoly normalized() const;

  std::string to_string() const;

 private:
  std::map<Monomial, Rational> terms_;
  std::pair<char, char> labels_{'x', 'z'};
};

/// Greatest common divisor, normalized (integer coefficients, positive lead). gcd(0,0) = 0.
BiPoly gcd(const BiPoly& p, const BiPoly& q);

}  // namespace periodkit
