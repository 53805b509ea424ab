#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "periodkit/quadext.hpp"
#include "periodkit/rational.hpp"
#include "periodkit/trigpoly.hpp"

namespace periodkit {

// Coefficient-ring hooks.
inline bool ring_is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool ring_is_zero(const QuadExt& q) { return q.is_zero(); }
inline bool ring_is_zero(const TrigPoly& t) { return t.is_zero(); }
inline bool ring_is_zero(const PiRational& p) { return p.is_zero(); }

inline Rational ring_inverse(const Rational& r) {
  if (sgn(r) == 0) throw PreconditionError("series reciprocal: constant term is not a unit");
  return 1 / r;
}
inline QuadExt ring_inverse(const QuadExt& q) {
  if (q.is_zero()) throw PreconditionError("series reciprocal: constant term is not a unit");
  return q.inverse();
}
inline TrigPoly ring_inverse(const TrigPoly& t) {
  if (!t.is_constant() || sgn(t.mean()) == 0)
    throw PreconditionError("series reciprocal: constant term is not a nonzero rational");
  return TrigPoly(Rational(1 / t.mean()));
}

inline std::string ring_to_string(const Rational& r) { return to_string(r); }
inline std::string ring_to_string(const QuadExt& q) { return q.to_string(); }
inline std::string ring_to_string(const TrigPoly& t) { return t.to_string(); }
inline std::string ring_to_string(const PiRational& p) { return p.to_string(); }

/// Truncated power series Σ_{k≤N} c_k v^k, known modulo O(v^{N+1}).
/// Coefficients past N are never reported.
template <class R>
class Series {
 public:
  Series() = default;
  Series(int order, std::string var = "z") : order_(order), var_(std::move(var)) {  // NOLINT
    if (order < 0) throw PreconditionError("negative truncation order");
  }
  Series(std::vector<R> coeffs, int order, std::string var = "z") : Series(order, std::move(var)) {
    if (static_cast<int>(coeffs.size()) > order + 1) coeffs.resize(static_cast<size_t>(order) + 1);
    coeffs_ = std::move(coeffs);
    trim();
  }

  static Series constant(const R& c, int order, std::string var = "z") { return Series({c}, order, std::move(var)); }
  /// The variable itself (requires order >= 1 to be nonzero).
  static Series identity(int order, std::string var = "z") {
    return Series({R(Rational(0)), R(Rational(1))}, order, std::move(var));
  }

  int order() const { return order_; }
  const std::string& var() const { return var_; }
  Series with_var(std::string v) const { Series s = *this; s.var_ = std::move(v); return s; }

  /// Coefficient of v^k; throws beyond the truncation order.
  R operator[](int k) const {
    if (k < 0) return R(Rational(0));
    if (k > order_) throw PreconditionError("coefficient beyond truncation order requested");
    if (static_cast<size_t>(k) >= coeffs_.size()) return R(Rational(0));
    return coeffs_[static_cast<size_t>(k)];
  }
  const std::vector<R>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Index of the first nonzero coefficient, or order + 1 when none is known.
  int valuation() const {
    for (size_t k = 0; k < coeffs_.size(); ++k)
      if (!ring_is_zero(coeffs_[k])) return static_cast<int>(k);
    return order_ + 1;
  }

  void set(int k, R value) {
    if (k < 0 || k > order_) throw PreconditionError("coefficient index outside truncation order");
    if (static_cast<size_t>(k) >= coeffs_.size()) coeffs_.resize(static_cast<size_t>(k) + 1, R(Rational(0)));
    coeffs_[static_cast<size_t>(k)] = std::move(value);
    trim();
  }

  Series truncate(int n) const { return Series(coeffs_, std::min(n, order_), var_); }

  Series& operator+=(const Series& o) {
    order_ = std::min(order_, o.order_);
    if (static_cast<int>(coeffs_.size()) > order_ + 1) coeffs_.resize(static_cast<size_t>(order_) + 1);
    size_t n = std::min(o.coeffs_.size(), static_cast<size_t>(order_) + 1);
    if (coeffs_.size() < n) coeffs_.resize(n, R(Rational(0)));
    for (size_t k = 0; k < n; ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Series& operator-=(const Series& o) { return *this += -o; }
  Series operator-() const {
    Series s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Rational& c) {
    for (auto& v : a.coeffs_) v = v * c;
    a.trim();
    return a;
  }
  friend Series operator*(const Rational& c, Series a) { return std::move(a) * c; }
  friend bool operator==(const Series& a, const Series& b) { return a.order_ == b.order_ && a.coeffs_ == b.coeffs_; }

  /// Multiplication by v^k (order grows by k).
  Series shift(int k) const {
    if (k < 0) throw PreconditionError("negative shift");
    std::vector<R> c(static_cast<size_t>(k), R(Rational(0)));
    c.insert(c.end(), coeffs_.begin(), coeffs_.end());
    return Series(std::move(c), order_ + k, var_);
  }
  /// Division by v^k; throws when a dropped coefficient is nonzero.
  Series unshift(int k) const {
    for (int i = 0; i < k && i < static_cast<int>(coeffs_.size()); ++i)
      if (!ring_is_zero(coeffs_[static_cast<size_t>(i)])) throw InvariantError("series not divisible by the variable power");
    if (k > order_ + 1) throw PreconditionError("unshift beyond truncation order");
    std::vector<R> c;
    if (static_cast<int>(coeffs_.size()) > k) c.assign(coeffs_.begin() + k, coeffs_.end());
    return Series(std::move(c), order_ - k, var_);
  }

  Series integrate() const {
    std::vector<R> c(coeffs_.size() + 1, R(Rational(0)));
    for (size_t k = 0; k < coeffs_.size(); ++k) c[k + 1] = coeffs_[k] * Rational(1, static_cast<long>(k) + 1);
    return Series(std::move(c), order_ + 1, var_);
  }
  Series derivative() const {
    std::vector<R> c;
    for (size_t k = 1; k < coeffs_.size(); ++k) c.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
    return Series(std::move(c), std::max(order_ - 1, 0), var_);
  }

  template <class F>
  auto map(F&& f) const {
    using S = decltype(f(std::declval<R>()));
    std::vector<S> c;
    c.reserve(coeffs_.size());
    for (const auto& v : coeffs_) c.push_back(f(v));
    return Series<S>(std::move(c), order_, var_);
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
      if (ring_is_zero(coeffs_[k])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << ring_to_string(coeffs_[k]) << ")";
      if (k > 0) os << "*" << var_ << (k > 1 ? "^" + std::to_string(k) : "");
    }
    if (first) os << "0";
    os << " + O(" << var_ << "^" << order_ + 1 << ")";
    return os.str();
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  std::vector<R> coeffs_;
  int order_ = 0;
  std::string var_ = "z";
};

template <class R>
Series<R> series_add(const Series<R>& a, const Series<R>& b) {
  return a + b;
}

template <class R>
Series<R> series_scale(const Series<R>& a, const Rational& c) {
  return a * c;
}

/// Cauchy product through the smaller truncation order.
template <class R>
Series<R> series_mul(const Series<R>& a, const Series<R>& b) {
  const int n = std::min(a.order(), b.order());
  const auto& ac = a.coeffs();
  const auto& bc = b.coeffs();
  const int top = std::min(n, static_cast<int>(ac.size() + bc.size()) - 2);
  std::vector<R> c(static_cast<size_t>(std::max(top + 1, 0)), R(Rational(0)));
  for (size_t i = 0; i < ac.size(); ++i) {
    if (ring_is_zero(ac[i])) continue;
    for (size_t j = 0; j < bc.size() && static_cast<int>(i + j) <= n; ++j) {
      if (ring_is_zero(bc[j])) continue;
      c[i + j] += ac[i] * bc[j];
    }
  }
  return Series<R>(std::move(c), n, a.var());
}

template <class R>
Series<R> operator*(const Series<R>& a, const Series<R>& b) {
  return series_mul(a, b);
}

template <class R>
Series<R> series_reciprocal(const Series<R>& a) {
  const int n = a.order();
  R inv0 = ring_inverse(a[0]);
  std::vector<R> b(static_cast<size_t>(n) + 1, R(Rational(0)));
  b[0] = inv0;
  const auto& ac = a.coeffs();
  for (int k = 1; k <= n; ++k) {
    R acc(Rational(0));
    for (int i = 1; i <= k && i < static_cast<int>(ac.size()); ++i) {
      if (ring_is_zero(ac[static_cast<size_t>(i)])) continue;
      acc += ac[static_cast<size_t>(i)] * b[static_cast<size_t>(k - i)];
    }
    b[static_cast<size_t>(k)] = -(inv0 * acc);
  }
  return Series<R>(std::move(b), n, a.var());
}

/// k-th power via the J.C.P. Miller recurrence; needs a unit constant term.
template <class R>
Series<R> series_pow(const Series<R>& a, unsigned k) {
  const int n = a.order();
  if (k == 0) return Series<R>::constant(R(Rational(1)), n, a.var());
  R a0 = a[0];
  R inv0 = ring_inverse(a0);
  R p0 = a0;
  for (unsigned i = 1; i < k; ++i) p0 = p0 * a0;
  std::vector<R> b(static_cast<size_t>(n) + 1, R(Rational(0)));
  b[0] = p0;
  const auto& ac = a.coeffs();
  for (int m = 1; m <= n; ++m) {
    R acc(Rational(0));
    for (int j = 1; j <= m && j < static_cast<int>(ac.size()); ++j) {
      if (ring_is_zero(ac[static_cast<size_t>(j)])) continue;
      long w = static_cast<long>(k + 1) * j - m;
      if (w == 0) continue;
      acc += (ac[static_cast<size_t>(j)] * b[static_cast<size_t>(m - j)]) * Rational(w);
    }
    b[static_cast<size_t>(m)] = (inv0 * acc) * Rational(1, m);
  }
  return Series<R>(std::move(b), n, a.var());
}

/// outer(inner) by Horner's scheme. Outer coefficients are embedded into the
/// inner ring. Requires inner to have zero constant term.
template <class RO, class RI>
Series<RI> series_compose(const Series<RO>& outer, const Series<RI>& inner) {
  if (!ring_is_zero(inner[0])) throw PreconditionError("composition: inner series has nonzero constant term");
  const int n = std::min(outer.order(), inner.order());
  Series<RI> acc(n, inner.var());
  const auto& oc = outer.coeffs();
  int top = std::min(n, static_cast<int>(oc.size()) - 1);
  for (int k = top; k >= 0; --k) {
    acc = series_mul(acc, inner.truncate(n));
    acc += Series<RI>::constant(RI(oc[static_cast<size_t>(k)]), n, inner.var());
  }
  return acc;
}

template <class R>
Series<R> series_integrate(const Series<R>& a) {
  return a.integrate();
}

/// Positive branch S(z) = √2 z + O(z²) of H_axis(S) = z², through z^order.
/// H_axis must start ρ²/2 and be known through ρ^(order+1).
Series<QuadExt> implicit_branch(const Series<Rational>& h_axis, int order);

}  // namespace periodkit
