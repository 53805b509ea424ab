#include "periodkit/ratfn.hpp"

namespace periodkit {

UniRatFn::UniRatFn(UniPoly num, UniPoly den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  UniPoly g = gcd(num, den);
  if (!num.is_zero()) {
    num = num.exact_div(g);
    den = den.exact_div(g);
  } else {
    den = UniPoly(Rational(1), den.var());
  }
  Rational c = den.content();
  if (sgn(den.lead()) < 0) c = -c;
  num_ = num * Rational(1 / c);
  den_ = den * Rational(1 / c);
}

UniRatFn operator+(const UniRatFn& a, const UniRatFn& b) {
  if (a.den_ == b.den_) return UniRatFn(a.num_ + b.num_, a.den_);
  return UniRatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

UniRatFn operator-(const UniRatFn& a, const UniRatFn& b) { return a + (-b); }

UniRatFn operator*(const UniRatFn& a, const UniRatFn& b) {
  return UniRatFn(a.num_ * b.num_, a.den_ * b.den_);
}

UniRatFn operator/(const UniRatFn& a, const UniRatFn& b) {
  if (b.is_zero()) throw PreconditionError("division by zero rational function");
  return UniRatFn(a.num_ * b.den_, a.den_ * b.num_);
}

UniRatFn UniRatFn::derivative() const {
  return UniRatFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational UniRatFn::operator()(const Rational& t) const {
  Rational d = den_(t);
  if (sgn(d) == 0) throw PreconditionError("evaluation at a pole");
  return num_(t) / d;
}

long double UniRatFn::eval_ld(long double t) const { return num_.eval_ld(t) / den_.eval_ld(t); }

std::string UniRatFn::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

BiRatFn::BiRatFn(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  auto labels = den.labels();
  if (num.is_zero()) {
    num_ = BiPoly(labels.first, labels.second);
    den_ = BiPoly(Rational(1), labels);
    return;
  }
  if (!den.is_constant()) {
    BiPoly g = gcd(num, den);
    if (!g.is_constant()) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
  }
  Rational c = den.content();
  if (sgn(den.lead()) < 0) c = -c;
  num_ = num * Rational(1 / c);
  den_ = den * Rational(1 / c);
}

BiRatFn BiRatFn::from_coprime(BiPoly num, BiPoly den) {
  if (den.is_zero()) throw PreconditionError("rational function with zero denominator");
  BiRatFn out;
  if (num.is_zero()) {
    out.den_ = BiPoly(Rational(1), den.labels());
    out.num_ = BiPoly(den.labels().first, den.labels().second);
    return out;
  }
  Rational c = den.content();
  if (sgn(den.lead()) < 0) c = -c;
  out.num_ = num * Rational(1 / c);
  out.den_ = den * Rational(1 / c);
  return out;
}

BiRatFn operator+(const BiRatFn& a, const BiRatFn& b) {
  if (a.den_ == b.den_) return BiRatFn(a.num_ + b.num_, a.den_);
  if (b.den_.is_constant()) return BiRatFn(a.num_ + b.num_ * a.den_ * Rational(1 / b.den_.lead()), a.den_);
  if (a.den_.is_constant()) return b + a;
  // lcm-based sum keeps intermediate degrees down
  BiPoly g = gcd(a.den_, b.den_);
  BiPoly ca = b.den_.exact_div(g), cb = a.den_.exact_div(g);
  return BiRatFn(a.num_ * ca + b.num_ * cb, a.den_ * ca);
}

BiRatFn operator-(const BiRatFn& a, const BiRatFn& b) { return a + (-b); }

BiRatFn BiRatFn::operator-() const {
  BiRatFn out = *this;
  out.num_ = -out.num_;
  return out;
}

BiRatFn operator*(const BiRatFn& a, const BiRatFn& b) {
  if (a.is_zero() || b.is_zero()) return BiRatFn(BiPoly(a.den_.labels().first, a.den_.labels().second));
  // cross-cancel first so the final gcd works on smaller inputs
  BiPoly g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  BiPoly an = g1.is_constant() ? a.num_ : a.num_.exact_div(g1);
  BiPoly bd = g1.is_constant() ? b.den_ : b.den_.exact_div(g1);
  BiPoly bn = g2.is_constant() ? b.num_ : b.num_.exact_div(g2);
  BiPoly ad = g2.is_constant() ? a.den_ : a.den_.exact_div(g2);
  BiRatFn out;
  BiPoly n = an * bn, d = ad * bd;
  Rational c = d.content();
  if (sgn(d.lead()) < 0) c = -c;
  out.num_ = n * Rational(1 / c);
  out.den_ = d * Rational(1 / c);
  return out;
}

BiRatFn operator/(const BiRatFn& a, const BiRatFn& b) {
  if (b.is_zero()) throw PreconditionError("division by zero rational function");
  return a * BiRatFn(b.den_, b.num_);
}

BiRatFn BiRatFn::partial_first() const {
  return BiRatFn(num_.partial_first() * den_ - num_ * den_.partial_first(), den_ * den_);
}

BiRatFn BiRatFn::partial_second() const {
  return BiRatFn(num_.partial_second() * den_ - num_ * den_.partial_second(), den_ * den_);
}

BiRatFn BiRatFn::total_derivative(const BiRatFn& dz) const {
  return partial_first() + partial_second() * dz;
}

Rational BiRatFn::operator()(const Rational& a, const Rational& b) const {
  Rational d = den_(a, b);
  if (sgn(d) == 0) throw PreconditionError("evaluation at a pole");
  return num_(a, b) / d;
}

long double BiRatFn::eval_ld(long double a, long double b) const {
  return num_.eval_ld(a, b) / den_.eval_ld(a, b);
}

UniRatFn substitute(const BiPoly& p, const UniRatFn& u, const UniRatFn& v) {
  char var = u.num().var();
  if (p.is_zero()) return UniRatFn(Rational(0), var);
  int dx = p.degree_first(), dz = p.degree_second();
  std::vector<UniPoly> un{UniPoly(Rational(1), var)}, ud{UniPoly(Rational(1), var)};
  std::vector<UniPoly> vn{UniPoly(Rational(1), var)}, vd{UniPoly(Rational(1), var)};
  for (int k = 1; k <= dx; ++k) {
    un.push_back(un.back() * u.num());
    ud.push_back(ud.back() * u.den());
  }
  for (int k = 1; k <= dz; ++k) {
    vn.push_back(vn.back() * v.num());
    vd.push_back(vd.back() * v.den());
  }
  UniPoly acc(Rational(0), var);
  for (const auto& [m, c] : p.terms()) {
    acc += un[static_cast<size_t>(m.first)] * ud[static_cast<size_t>(dx - m.first)] *
           vn[static_cast<size_t>(m.second)] * vd[static_cast<size_t>(dz - m.second)] * c;
  }
  return UniRatFn(acc, ud[static_cast<size_t>(dx)] * vd[static_cast<size_t>(dz)]);
}

UniRatFn BiRatFn::substitute(const UniRatFn& u, const UniRatFn& v) const {
  return periodkit::substitute(num_, u, v) / periodkit::substitute(den_, u, v);
}

std::string BiRatFn::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace periodkit
