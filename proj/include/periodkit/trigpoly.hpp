#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "periodkit/rational.hpp"

namespace periodkit {

/// q·π for rational q. Closed under addition and rational scaling only.
class PiRational {
 public:
  PiRational() = default;
  explicit PiRational(Rational q) : q_(std::move(q)) {}
  const Rational& coefficient() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }

  PiRational& operator+=(const PiRational& o) { q_ += o.q_; return *this; }
  PiRational& operator-=(const PiRational& o) { q_ -= o.q_; return *this; }
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) { return a -= b; }
  PiRational operator-() const { return PiRational(-q_); }
  friend PiRational operator*(const PiRational& a, const Rational& c) { return PiRational(a.q_ * c); }
  friend PiRational operator*(const Rational& c, const PiRational& a) { return PiRational(a.q_ * c); }
  friend PiRational operator/(const PiRational& a, const Rational& c) { return PiRational(a.q_ / c); }
  // π² is outside the ring
  friend PiRational operator*(const PiRational&, const PiRational&) = delete;
  friend bool operator==(const PiRational& a, const PiRational& b) { return a.q_ == b.q_; }

  std::string to_string() const;

 private:
  Rational q_;
};

/// c0 + Σ (a_k cos kθ + b_k sin kθ) + s·θ with rational coefficients.
/// Stored densely up to the highest nonzero harmonic.
class TrigPoly {
 public:
  TrigPoly() = default;
  TrigPoly(const Rational& c) { if (sgn(c) != 0) cos_.push_back(c); }  // NOLINT(google-explicit-constructor)

  static TrigPoly cos_term(int k, const Rational& c);
  static TrigPoly sin_term(int k, const Rational& c);
  static TrigPoly secular(const Rational& slope);
  /// cos^i θ sin^j θ expanded
  static TrigPoly cos_sin_power(int i, int j);

  Rational mean() const { return cos_coeff(0); }
  Rational cos_coeff(int k) const;
  Rational sin_coeff(int k) const;
  const Rational& slope() const { return slope_; }
  /// Highest harmonic present (0 for constants and the zero polynomial).
  int degree() const;
  bool is_zero() const { return cos_.empty() && sin_.empty() && sgn(slope_) == 0; }
  bool is_periodic() const { return sgn(slope_) == 0; }
  bool is_constant() const { return cos_.size() <= 1 && sin_.empty() && sgn(slope_) == 0; }

  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  TrigPoly& operator*=(const Rational& c);
  TrigPoly operator-() const;
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) { return a -= b; }
  friend TrigPoly operator*(TrigPoly a, const Rational& c) { return a *= c; }
  friend TrigPoly operator*(const Rational& c, TrigPoly a) { return a *= c; }
  friend TrigPoly operator*(const TrigPoly& a, const TrigPoly& b);
  friend bool operator==(const TrigPoly& a, const TrigPoly& b) {
    return a.cos_ == b.cos_ && a.sin_ == b.sin_ && a.slope_ == b.slope_;
  }

  TrigPoly derivative() const;
  /// Antiderivative vanishing at θ = 0; requires a periodic input.
  TrigPoly antiderivative() const;
  /// ∫_0^{2π}; requires a periodic input.
  PiRational full_period_integral() const;
  /// Value at θ = 0.
  Rational at_zero() const;

  template <class T>
  T evaluate(const T& theta) const {
    using std::cos;
    using std::sin;
    T acc = T(0);
    for (size_t k = 0; k < cos_.size(); ++k)
      if (sgn(cos_[k]) != 0) acc += to_real<T>(cos_[k]) * cos(T(static_cast<int>(k)) * theta);
    for (size_t k = 1; k < sin_.size(); ++k)
      if (sgn(sin_[k]) != 0) acc += to_real<T>(sin_[k]) * sin(T(static_cast<int>(k)) * theta);
    if (sgn(slope_) != 0) acc += to_real<T>(slope_) * theta;
    return acc;
  }

  std::string to_string() const;

 private:
  template <class T>
  static T to_real(const Rational& q) {
    return T(q.get_num().get_str()) / T(q.get_den().get_str());
  }
  void trim();

  std::vector<Rational> cos_;  // cos_[0] is the mean
  std::vector<Rational> sin_;  // sin_[0] is always zero
  Rational slope_;
};

/// Product-to-sum multiplication; throws when both factors are secular, or
/// when a secular factor meets a non-constant one (θ·cos kθ is not representable).
TrigPoly trig_mul(const TrigPoly& a, const TrigPoly& b);
/// mean(a·b) without forming the product.
Rational mean_of_product(const TrigPoly& a, const TrigPoly& b);
TrigPoly trig_antiderivative(const TrigPoly& a);
PiRational trig_full_period_integral(const TrigPoly& a);

}  // namespace periodkit
