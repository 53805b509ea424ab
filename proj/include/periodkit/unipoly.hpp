#pragma once

#include <string>
#include <utility>
#include <vector>

#include "periodkit/rational.hpp"

namespace periodkit {

/// Dense univariate polynomial over Q. Coefficient k multiplies var^k.
/// The coefficient vector never carries trailing zeros.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs, char var = 'x');
  UniPoly(const Rational& c, char var = 'x');  // NOLINT(google-explicit-constructor)

  static UniPoly monomial(const Rational& c, int k, char var = 'x');
  static UniPoly variable(char var = 'x') { return monomial(Rational(1), 1, var); }
  /// (var - root)
  static UniPoly linear_root(const Rational& root, char var = 'x');

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  char var() const { return var_; }
  UniPoly with_var(char v) const;

  const Rational& coeff(int k) const;
  const Rational& lead() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);
  UniPoly operator-() const;

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  Rational operator()(const Rational& t) const;
  long double eval_ld(long double t) const;

  UniPoly derivative() const;
  UniPoly antiderivative() const;
  UniPoly compose(const UniPoly& inner) const;
  /// p(t) -> p(-t)
  UniPoly reflect() const;
  UniPoly pow(unsigned k) const;

  /// Quotient and remainder of Euclidean division; throws on zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Quotient when division is exact; throws otherwise.
  UniPoly exact_div(const UniPoly& d) const;
  bool divisible_by(const UniPoly& d) const;

  UniPoly monic() const;
  /// Positive rational c with p / c having coprime integer coefficients and the sign of lead kept.
  Rational content() const;
  UniPoly primitive() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
  char var_ = 'x';
};

/// Monic gcd; gcd(0, 0) == 0. Subresultant PRS over the integers.
UniPoly gcd(const UniPoly& p, const UniPoly& q);
UniPoly lcm(const UniPoly& p, const UniPoly& q);
/// p / gcd(p, p'), keeping the leading coefficient of p.
UniPoly squarefree_part(const UniPoly& p);
/// Multiplicity of `root` as a root of p (p != 0).
int root_multiplicity(const UniPoly& p, const Rational& root);

}  // namespace periodkit
