#include "periodkit/abelian.hpp"

#include "periodkit/period.hpp"
#include "periodkit/poly_parse.hpp"

namespace periodkit {

namespace {

const UniPoly kH = UniPoly::variable('h');
UniPoly hpoly(std::vector<Rational> c) { return UniPoly(std::move(c), 'h'); }
UniPoly pf_denominator() { return hpoly({Rational(0), Rational(-6), Rational(36)}); }  // 6(6h-1)h

// c(h)·s; known through h^(s.order + lowest degree of c).
Series<Rational> mulpoly(const UniPoly& c, const Series<Rational>& s) {
  if (c.is_zero()) return Series<Rational>(s.order(), s.var());
  Series<Rational> acc;
  bool first = true;
  for (int k = 0; k <= c.degree(); ++k) {
    if (sgn(c.coeff(k)) == 0) continue;
    Series<Rational> t = c.coeff(k) * s.shift(k);
    if (first) acc = t; else acc += t;
    first = false;
  }
  return acc;
}

Series<Rational> poly_series(const UniPoly& c, int order) {
  return mulpoly(c, Series<Rational>::constant(Rational(1), order, "h")).truncate(order);
}

Series<Rational> quotient(const Series<Rational>& a, const Series<Rational>& b) {
  return series_mul(a, series_reciprocal(b));
}

bool zero_through(const Series<Rational>& s, int n) { return s.order() >= n && s.valuation() > n; }

Rational binom(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - k + i, i);
  return r;
}

}  // namespace

ReductionPair operator+(const ReductionPair& a, const ReductionPair& b) { return {a.p + b.p, a.q + b.q}; }
ReductionPair operator*(const UniPoly& c, const ReductionPair& a) { return {c * a.p, c * a.q}; }
ReductionPair operator*(const Rational& c, const ReductionPair& a) { return {c * a.p, c * a.q}; }

std::vector<ReductionPair> reduce_table(int k_max) {
  if (k_max < 0) throw PreconditionError("reduce: negative index");
  std::vector<ReductionPair> t{{hpoly({Rational(1)}), hpoly({})},
                               {hpoly({}), hpoly({Rational(1)})},
                               {hpoly({}), hpoly({Rational(-1)})}};
  for (int k = 3; k <= k_max; ++k) {
    // (2k+5) I_k = -3(k+1) I_{k-1} + 6(k-2) h I_{k-3}
    ReductionPair r = Rational(-3 * (k + 1)) * t[static_cast<size_t>(k - 1)] +
                      (Rational(6 * (k - 2)) * kH) * t[static_cast<size_t>(k - 3)];
    t.push_back(Rational(1, 2 * k + 5) * r);
  }
  t.resize(static_cast<size_t>(k_max) + 1);
  return t;
}

ReductionPair reduce(int k) { return reduce_table(k).back(); }

ReductionPair scaled_derivative(const ReductionPair& r) {
  const UniPoly d = pf_denominator();
  const UniPoly a = hpoly({Rational(-6), Rational(30)});  // 6(5h-1)
  return {d * r.p.derivative() + a * r.p + Rational(6) * kH * r.q,
          d * r.q.derivative() - Rational(7) * r.p + Rational(42) * kH * r.q};
}

std::vector<IdentityCheck> identity_suite(int K) {
  if (K < 1) throw PreconditionError("identity_suite: K >= 1 required");
  auto t = reduce_table(3 * K + 3);
  auto at = [&](int i) { return t[static_cast<size_t>(i)]; };
  std::vector<IdentityCheck> out;
  for (int k = 1; k <= K; ++k) {
    ReductionPair acc{hpoly({}), hpoly({})};
    for (int j = 0; j <= k; ++j)
      acc = acc + (binom(k, j) * pow(Rational(3), j) * pow(Rational(2), k - j) * Rational(3 * k - j)) * at(3 * k - j - 1);
    out.push_back({"sum", k, acc.is_zero(), acc});
  }
  const UniPoly d = pf_denominator();
  for (int k = 0; k <= K; ++k) {
    ReductionPair acc = Rational(2) * scaled_derivative(at(k + 3)) + Rational(3) * scaled_derivative(at(k + 2)) +
                        (Rational(3) * d) * at(k) + (Rational(-6) * kH) * scaled_derivative(at(k));
    out.push_back({"derivative", k, acc.is_zero(), acc});
  }
  for (int k = 3; k <= 3 * K; ++k) {
    ReductionPair acc = Rational(2 * k + 5) * at(k) + Rational(3 * (k + 1)) * at(k - 1) +
                        (Rational(-6 * (k - 2)) * kH) * at(k - 3);
    out.push_back({"recursion", k, acc.is_zero(), acc});
  }
  return out;
}

Series<Rational> i1_from_i0(const Series<Rational>& i0) {
  Series<Rational> a = mulpoly(hpoly({Rational(-6), Rational(30)}), i0);
  Series<Rational> b = mulpoly(pf_denominator(), i0.derivative());
  return (a - b).truncate(i0.order()) * Rational(1, 7);
}

AbelianSeries series_I0_I1(int order, Exec exec) {
  if (order < 2) throw PreconditionError("series_I0_I1: order >= 2 required");
  auto spec = normalize(parse_bipoly("1/2 x^2 + 1/3 x^3 + 1/2 y^2", {'x', 'y'}), 2 * order - 1);
  auto e = expand_period(spec, exec, PeriodRoute::Cleared);
  if (e.area_h.order() < order) throw InvariantError("series_I0_I1: area series shorter than requested");
  Series<Rational> i0 = -pi_part(e.area_h).truncate(order);
  return {i0.with_var("h"), i1_from_i0(i0.with_var("h"))};
}

bool PicardFuchsResidual::vanishes_through(int n) const {
  return zero_through(first, n) && zero_through(second, n) && zero_through(area_first, n) &&
         zero_through(area_second, n);
}

PicardFuchsResidual picard_fuchs_residual(const AbelianSeries& s) {
  const UniPoly d = pf_denominator();
  const int n = s.order();
  PicardFuchsResidual r;
  r.first = (mulpoly(d, s.i0.derivative()) - mulpoly(hpoly({Rational(-6), Rational(30)}), s.i0) +
             Rational(7) * s.i1).truncate(n);
  r.second = (mulpoly(d, s.i1.derivative()) - mulpoly(hpoly({Rational(0), Rational(6)}), s.i0) -
              mulpoly(hpoly({Rational(0), Rational(42)}), s.i1)).truncate(n);
  Series<Rational> a = -s.i0, t = a.derivative();
  r.area_first = (mulpoly(d, a.derivative()) - mulpoly(d, t)).truncate(n);
  r.area_second = (mulpoly(d, t.derivative()) + Rational(5) * a).truncate(n);
  return r;
}

PicardFuchsResidual picard_fuchs_residual(int order) { return picard_fuchs_residual(series_I0_I1(order)); }

bool HillRiccatiResidual::vanishes_through(int n) const {
  return zero_through(hill_i0, n) && zero_through(hill_area, n) && zero_through(riccati_i1_i0, n) &&
         zero_through(riccati_t_a, n) && zero_through(riccati_a_t, n);
}

HillRiccatiResidual hill_riccati_residuals(const AbelianSeries& s) {
  const UniPoly hill = hpoly({Rational(0), Rational(6), Rational(-36)});  // 6(1-6h)h
  const UniPoly d = pf_denominator();
  const int n = s.order();
  HillRiccatiResidual r;
  Series<Rational> a = -s.i0, t = a.derivative();
  r.hill_i0 = mulpoly(hill, s.i0.derivative().derivative()) - Rational(5) * s.i0;
  r.hill_area = mulpoly(hill, a.derivative().derivative()) - Rational(5) * a;

  const int v0 = s.i0.valuation(), v1 = s.i1.valuation();
  r.pole_order_i0_i1 = v1 - v0;
  r.pole_order_t_a = a.valuation() - t.valuation();
  if (v0 != 1 || v1 != 2 || r.pole_order_t_a != 1)
    throw InvariantError("hill_riccati_residuals: unexpected leading powers of I0, I1");

  Series<Rational> i0h = s.i0.unshift(1), i1h = s.i1.unshift(1), i1hh = s.i1.unshift(2), ah = a.unshift(1);
  auto poly = [&](std::vector<Rational> c, int order) { return poly_series(hpoly(std::move(c)), order); };

  Series<Rational> q = quotient(i1h, i0h);
  r.riccati_i1_i0 = mulpoly(d, q.derivative()) - Rational(7) * series_mul(q, q) -
                    mulpoly(hpoly({Rational(6), Rational(12)}), q) - poly({Rational(0), Rational(6)}, q.order());

  Series<Rational> qt = quotient(t, ah);
  Series<Rational> inner = mulpoly(kH, qt.derivative()) - qt + series_mul(qt, qt);
  r.riccati_t_a = mulpoly(hpoly({Rational(6), Rational(-36)}), inner) - poly({Rational(0), Rational(5)}, qt.order());

  Series<Rational> pt = quotient(i0h, i1hh);
  r.riccati_i0_i1 = mulpoly(hpoly({Rational(-6), Rational(36)}), mulpoly(kH, pt.derivative()) - pt) +
                    Rational(6) * series_mul(pt, pt) + mulpoly(hpoly({Rational(6), Rational(12)}), pt) +
                    poly({Rational(0), Rational(7)}, pt.order());

  Series<Rational> p = quotient(a, t);
  Series<Rational> one = poly({Rational(1)}, p.order());
  r.riccati_a_t = mulpoly(hill, p.derivative() - one) + Rational(5) * series_mul(p, p);

  r.transcribed_i0_i1 = mulpoly(d, mulpoly(kH, pt.derivative()) - pt) - Rational(7) * series_mul(pt, pt) -
                        mulpoly(hpoly({Rational(0), Rational(6), Rational(12)}), pt) -
                        poly({Rational(0), Rational(0), Rational(0), Rational(6)}, pt.order());
  r.transcribed_a_t = mulpoly(hill, p.derivative() + series_mul(p, p)) - poly({Rational(5)}, p.order());
  (void)n;
  return r;
}

HillRiccatiResidual hill_riccati_residuals(int order) { return hill_riccati_residuals(series_I0_I1(order)); }

Series<Rational> hypergeom_area(int order) {
  std::vector<Rational> c(static_cast<size_t>(std::max(order, 0)) + 1);
  Rational term(2);
  for (int n = 0; n + 1 <= order; ++n) {
    c[static_cast<size_t>(n) + 1] = term;
    term = term * (Rational(1, 6) + n) * (Rational(5, 6) + n) * 6 / (Rational(2 + n) * (n + 1));
  }
  return Series<Rational>(std::move(c), order, "h");
}

GBasis basis_G(int n, const AbelianSeries& s) {
  if (n < 0) throw PreconditionError("basis_G: negative n");
  auto t = reduce_table(std::max(n, 2));
  GBasis b;
  for (int j = 0; j <= n; ++j) {
    if (j % 3 == 2) continue;
    const auto& r = t[static_cast<size_t>(j)];
    Series<Rational> f = (mulpoly(r.p, s.i0) + mulpoly(r.q, s.i1)).truncate(s.order());
    b.indices.push_back(j);
    b.g.push_back(f.unshift(1));
  }
  return b;
}

GBasis basis_G(int n, int order, Exec exec) { return basis_G(n, series_I0_I1(order, exec)); }

int capacity(int n) { return n - (n + 1) / 3; }

Rational bareiss_det(std::vector<std::vector<Rational>> m) {
  const size_t n = m.size();
  if (n == 0) return Rational(1);
  Rational prev(1);
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m[k][k]) == 0) {
      size_t r = k + 1;
      while (r < n && sgn(m[r][k]) == 0) ++r;
      if (r == n) return Rational(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign < 0 ? Rational(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

EctReport wronskians_at_zero(const GBasis& basis, int n, Exec exec) {
  EctReport rep;
  rep.n = n;
  rep.capacity = capacity(n);
  const int size = rep.capacity + 1;
  if (static_cast<int>(basis.g.size()) < size) throw PreconditionError("wronskians_at_zero: basis too small");
  int order = basis.g.empty() ? 0 : basis.g.front().order();
  for (const auto& g : basis.g) order = std::min(order, g.order());
  if (order < rep.capacity) throw PreconditionError("insufficient series order");
  rep.series_order_used = order + 1;

  std::vector<std::vector<Rational>> full(static_cast<size_t>(size), std::vector<Rational>(static_cast<size_t>(size)));
  Rational fact(1);
  for (int i = 0; i < size; ++i) {
    if (i > 0) fact *= i;
    for (int j = 0; j < size; ++j) full[static_cast<size_t>(i)][static_cast<size_t>(j)] = fact * basis.g[static_cast<size_t>(j)][i];
  }
  rep.wronskian_values.assign(static_cast<size_t>(size), Rational(0));
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int k = size - 1; k >= 0; --k) {
    std::vector<std::vector<Rational>> m(static_cast<size_t>(k) + 1);
    for (int i = 0; i <= k; ++i)
      m[static_cast<size_t>(i)].assign(full[static_cast<size_t>(i)].begin(), full[static_cast<size_t>(i)].begin() + k + 1);
    rep.wronskian_values[static_cast<size_t>(k)] = bareiss_det(std::move(m));
  }
  rep.all_nonzero = true;
  for (const auto& w : rep.wronskian_values)
    if (sgn(w) == 0) rep.all_nonzero = false;
  return rep;
}

EctReport wronskians_at_zero(int n, int order, Exec exec) {
  return wronskians_at_zero(basis_G(n, order, exec), n, exec);
}

}  // namespace periodkit
