#include "periodkit/period.hpp"

#include <algorithm>
#include <map>

namespace periodkit {

std::string ScaleRecord::to_string() const {
  if (root) return periodkit::to_string(*root);
  return "sqrt(" + periodkit::to_string(radicand) + ")";
}

namespace {

// Largest square dividing numerator and denominator removed (trial division).
Rational squarefree_kernel(const Rational& r) {
  auto strip = [](Integer n) -> Integer {
    Integer out = 1;
    for (unsigned long p = 2; p < 100000 && Integer(p) * p <= n; ++p) {
      unsigned e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++e;
      }
      if (e % 2 == 1) out *= p;
    }
    return out * n;
  };
  Integer n = abs(r.get_num()) * r.get_den();
  Rational k(strip(n));
  return sgn(r) < 0 ? Rational(-k) : k;
}

}  // namespace

HamiltonianSpec normalize(const BiPoly& h_in, int order) {
  BiPoly h = h_in.with_labels({'x', 'y'});
  if (sgn(h.coeff(0, 0)) != 0) throw PreconditionError("constant term present: H(0,0) must be 0");
  if (sgn(h.coeff(1, 0)) != 0 || sgn(h.coeff(0, 1)) != 0)
    throw PreconditionError("linear term present: not a center at origin");
  if (sgn(h.coeff(1, 1)) != 0) throw PreconditionError("xy term present: diagonalize first");
  Rational beta = 2 * h.coeff(2, 0), alpha = 2 * h.coeff(0, 2);
  if (sgn(alpha) <= 0 || sgn(beta) <= 0) throw PreconditionError("not a non-degenerate minimum");

  HamiltonianSpec spec;
  spec.original = h;
  spec.alpha = alpha;
  spec.beta = beta;
  spec.order = order;
  spec.scale.radicand = alpha * beta;
  spec.scale.root = exact_sqrt(alpha * beta);

  BiPoly out('x', 'y');
  for (const auto& [m, c] : h.terms()) {
    Rational radicand = pow(beta, static_cast<unsigned>(m.first)) * pow(alpha, static_cast<unsigned>(m.second));
    auto root = exact_sqrt(radicand);
    if (!root) {
      Rational k = squarefree_kernel(radicand);
      throw NormalizationError("manual normalization required: term x^" + std::to_string(m.first) + " y^" +
                                   std::to_string(m.second) + " acquires sqrt(" + periodkit::to_string(k) + ")",
                               k);
    }
    out += BiPoly::term(c / *root, m.first, m.second, {'x', 'y'});
  }
  spec.normalized = out;
  return spec;
}

Series<TrigPoly> PolarOde::dr_dtheta() const {
  Series<TrigPoly> denom = angular + Series<TrigPoly>::constant(TrigPoly(Rational(1)), angular.order(), "r");
  return series_mul(radial, series_reciprocal(denom));
}

PolarOde polar_ode(const BiPoly& hn, int order) {
  if (hn.coeff(2, 0) != Rational(1, 2) || hn.coeff(0, 2) != Rational(1, 2) || sgn(hn.coeff(1, 1)) != 0 ||
      sgn(hn.coeff(1, 0)) != 0 || sgn(hn.coeff(0, 1)) != 0 || sgn(hn.coeff(0, 0)) != 0)
    throw PreconditionError("polar ODE needs a normalized Hamiltonian (quadratic part (x^2+y^2)/2)");
  const int n = order + 1;
  std::vector<TrigPoly> radial(static_cast<size_t>(n) + 1), angular(static_cast<size_t>(n) + 1);
  std::map<std::pair<int, int>, TrigPoly> cs;
  auto cs_power = [&](int i, int j) -> const TrigPoly& {
    auto it = cs.find({i, j});
    if (it == cs.end()) it = cs.emplace(std::make_pair(i, j), TrigPoly::cos_sin_power(i, j)).first;
    return it->second;
  };
  for (const auto& [m, c] : hn.terms()) {
    const int i = m.first, j = m.second, d = i + j;
    if (d < 3) continue;
    // ṙ = (y H_x - x H_y)/r, θ̇ - 1 = (x H_x + y H_y)/r² minus the quadratic part
    if (d - 1 <= n) {
      TrigPoly t;
      if (i > 0) t += cs_power(i - 1, j + 1) * Rational(c * i);
      if (j > 0) t -= cs_power(i + 1, j - 1) * Rational(c * j);
      radial[static_cast<size_t>(d - 1)] += t;
    }
    if (d - 2 <= n) angular[static_cast<size_t>(d - 2)] += cs_power(i, j) * Rational(c * d);
  }
  return {Series<TrigPoly>(std::move(radial), n, "r"), Series<TrigPoly>(std::move(angular), n, "r")};
}

PolarOde polar_ode(const HamiltonianSpec& spec) { return polar_ode(spec.normalized, spec.order); }

namespace {

// Next Miller coefficient of a^k from a_1..a_m and b_0..b_{m-1}, a_0 = 1.
TrigPoly miller_step(int k, const std::vector<TrigPoly>& a, const std::vector<TrigPoly>& b) {
  const int m = static_cast<int>(b.size());
  TrigPoly acc;
  for (int j = 1; j <= m; ++j) {
    long w = static_cast<long>(k + 1) * j - m;
    if (w == 0 || a[static_cast<size_t>(j)].is_zero() || b[static_cast<size_t>(m - j)].is_zero()) continue;
    acc += (a[static_cast<size_t>(j)] * b[static_cast<size_t>(m - j)]) * Rational(w);
  }
  return acc * Rational(1, m);
}

}  // namespace

RadialFlow radial_flow(const Series<TrigPoly>& f, int order, Exec exec) {
  if (order < 1) throw PreconditionError("radial flow: order must be at least 1");
  if (f.order() < order) throw PreconditionError("radial flow: dr/dtheta known to insufficient order");
  if (!f[0].is_zero() || !f[1].is_zero()) throw PreconditionError("radial flow: dr/dtheta must start at r^2");
  RadialFlow flow;
  flow.order = order;
  flow.u.assign(static_cast<size_t>(order) + 1, TrigPoly());
  flow.u[1] = TrigPoly(Rational(1));
  // a = r/ρ: a[j] = u[j+1]
  std::vector<TrigPoly> a(static_cast<size_t>(order) + 1);
  a[0] = TrigPoly(Rational(1));
  flow.power.assign(static_cast<size_t>(order) + 1, {});
  for (int k = 2; k <= order; ++k) flow.power[static_cast<size_t>(k)].push_back(TrigPoly(Rational(1)));

  std::vector<TrigPoly> terms(static_cast<size_t>(order) + 1);
  for (int n = 2; n <= order; ++n) {
    // [ρ^(n-k)] a^k for k = 2..n; each k touches only its own row
    const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
    for (int k = 2; k <= n; ++k) {
      auto& row = flow.power[static_cast<size_t>(k)];
      const int idx = n - k;
      if (idx >= static_cast<int>(row.size())) row.push_back(miller_step(k, a, row));
      terms[static_cast<size_t>(k)] = f[k] * row[static_cast<size_t>(idx)];
    }
    TrigPoly rhs;
    for (int k = 2; k <= n; ++k) rhs += terms[static_cast<size_t>(k)];
    if (!rhs.is_periodic() || sgn(rhs.mean()) != 0)
      throw InvariantError("non-periodic obstruction at order " + std::to_string(n));
    flow.u[static_cast<size_t>(n)] = rhs.antiderivative();
    a[static_cast<size_t>(n - 1)] = flow.u[static_cast<size_t>(n)];
  }
  flow.power[1].assign(a.begin(), a.begin() + order);
  return flow;
}

RadialFlow radial_flow_cleared(const PolarOde& ode, int order, Exec exec) {
  if (order < 1) throw PreconditionError("radial flow: order must be at least 1");
  if (ode.radial.order() < order || ode.angular.order() < order)
    throw PreconditionError("radial flow: polar ODE known to insufficient order");
  // highest power of r that occurs: A_k r^k and B_k r^k r' = B_k (r^(k+1))'/(k+1)
  int top = 1;
  for (int k = 0; k <= order; ++k) {
    if (!ode.radial[k].is_zero()) top = std::max(top, k);
    if (!ode.angular[k].is_zero()) top = std::max(top, k + 1);
  }
  top = std::min(top, order);
  RadialFlow flow;
  flow.order = order;
  flow.u.assign(static_cast<size_t>(order) + 1, TrigPoly());
  flow.u[1] = TrigPoly(Rational(1));
  std::vector<TrigPoly> a(static_cast<size_t>(order) + 1);
  a[0] = TrigPoly(Rational(1));
  flow.power.assign(static_cast<size_t>(order) + 1, {});
  for (int k = 2; k <= top; ++k) flow.power[static_cast<size_t>(k)].push_back(TrigPoly(Rational(1)));

  std::vector<TrigPoly> terms(static_cast<size_t>(top) + 1);
  const bool par = exec == Exec::Parallel;
  for (int n = 2; n <= order; ++n) {
    const int kmax = std::min(top, n);
#pragma omp parallel for schedule(dynamic) if (par)
    for (int k = 2; k <= kmax; ++k) {
      auto& row = flow.power[static_cast<size_t>(k)];
      const int idx = n - k;
      if (idx >= static_cast<int>(row.size())) row.push_back(miller_step(k, a, row));
      const TrigPoly& pk = row[static_cast<size_t>(idx)];  // [ρ^n] r^k
      TrigPoly t = ode.radial[k] * pk;
      const TrigPoly& b = ode.angular[k - 1];
      if (!b.is_zero()) t -= (b * pk.derivative()) * Rational(1, k);
      terms[static_cast<size_t>(k)] = std::move(t);
    }
    TrigPoly rhs;
    for (int k = 2; k <= kmax; ++k) rhs += terms[static_cast<size_t>(k)];
    if (!rhs.is_periodic() || sgn(rhs.mean()) != 0)
      throw InvariantError("non-periodic obstruction at order " + std::to_string(n));
    flow.u[static_cast<size_t>(n)] = rhs.antiderivative();
    a[static_cast<size_t>(n - 1)] = flow.u[static_cast<size_t>(n)];
  }
  flow.power[1].assign(a.begin(), a.begin() + order);
  return flow;
}

Series<PiRational> period_rho_direct(const PolarOde& ode, const RadialFlow& flow, Exec exec) {
  (void)exec;
  const int n = flow.order;
  if (ode.angular.order() < n) throw PreconditionError("period: angular series known to insufficient order");
  // θ̇ along the flow: 1 + Σ_k B_k ρ^k (r/ρ)^k
  std::vector<TrigPoly> td(static_cast<size_t>(n) + 1);
  td[0] = TrigPoly(Rational(1));
  for (int k = 1; k <= n; ++k) {
    const TrigPoly b = ode.angular[k];
    if (b.is_zero()) continue;
    const auto& row = flow.power[static_cast<size_t>(k)];
    if (static_cast<int>(row.size()) < n - k + 1) throw PreconditionError("period: power table too short");
    for (int m = 0; m + k <= n; ++m) td[static_cast<size_t>(m + k)] += b * row[static_cast<size_t>(m)];
  }
  Series<TrigPoly> inv = series_reciprocal(Series<TrigPoly>(std::move(td), n, "rho"));
  std::vector<PiRational> t(static_cast<size_t>(n) + 1);
  for (int m = 0; m <= n; ++m) {
    const TrigPoly c = inv[m];
    if (!c.is_periodic()) throw InvariantError("secular term in the time series");
    t[static_cast<size_t>(m)] = PiRational(2 * c.mean());
  }
  return Series<PiRational>(std::move(t), n, "rho");
}

Series<PiRational> period_rho(const PolarOde& ode, const RadialFlow& flow, Exec exec) {
  const int n = flow.order;
  if (ode.angular.order() < n) throw PreconditionError("period: angular series known to insufficient order");
  Series<TrigPoly> one = Series<TrigPoly>::constant(TrigPoly(Rational(1)), n, "r");
  Series<TrigPoly> g = series_reciprocal(ode.angular.truncate(n) + one);
  std::vector<PiRational> t(static_cast<size_t>(n) + 1);
  t[0] = PiRational(Rational(2));
  const bool par = exec == Exec::Parallel;
#pragma omp parallel for schedule(dynamic) if (par)
  for (int m = 1; m <= n; ++m) {
    Rational mean(0);
    for (int k = 1; k <= m; ++k) {
      const TrigPoly gk = g[k];
      if (gk.is_zero()) continue;
      mean += mean_of_product(gk, flow.power[static_cast<size_t>(k)][static_cast<size_t>(m - k)]);
    }
    t[static_cast<size_t>(m)] = PiRational(2 * mean);
  }
  return Series<PiRational>(std::move(t), n, "rho");
}

Series<Rational> hamiltonian_on_axis(const BiPoly& h, int order) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (const auto& [m, v] : h.terms())
    if (m.second == 0 && m.first <= order) c[static_cast<size_t>(m.first)] += v;
  return Series<Rational>(std::move(c), order, "rho");
}

BiPoly whirling_pendulum(const Rational& a, const Rational& b, int degree) {
  BiPoly h = BiPoly::term(Rational(1, 2), 0, 2, {'x', 'y'});
  Rational fact(1);
  Rational four_pow(1);  // 4^(k-1)
  for (int k = 1; 2 * k <= degree; ++k) {
    fact *= (2 * k - 1) * (2 * k);
    Rational c = (b * four_pow - a) / fact;
    if (k % 2 == 1) c = -c;
    h += BiPoly::term(c, 2 * k, 0, {'x', 'y'});
    four_pow *= 4;
  }
  return h;
}

Series<Rational> pi_part(const Series<PiRational>& s) {
  return s.map([](const PiRational& p) { return p.coefficient(); });
}

Series<PiRational> times_pi(const Series<Rational>& s) {
  return s.map([](const Rational& q) { return PiRational(q); });
}

PeriodExpansion expand_period(const HamiltonianSpec& spec, Exec exec, PeriodRoute route) {
  const int n = spec.order;
  if (n < 2) throw PreconditionError("period expansion needs order >= 2");
  PolarOde ode = polar_ode(spec.normalized, n);
  PeriodExpansion out;
  if (route == PeriodRoute::Reference) {
    RadialFlow flow = radial_flow(ode.dr_dtheta(), n, exec);
    out.top_rho = period_rho(ode, flow, exec);
  } else {
    RadialFlow flow = radial_flow_cleared(ode, n, exec);
    out.top_rho = period_rho_direct(ode, flow, exec);
  }
  out.branch = implicit_branch(hamiltonian_on_axis(spec.normalized, n + 1), n);
  Series<QuadExt> comp = series_compose(pi_part(out.top_rho), out.branch);
  std::vector<Rational> th;
  for (int k = 0; k <= n; ++k) {
    const QuadExt c = comp[k];
    if (k % 2 == 1 && !c.is_zero())
      throw InvariantError("odd-coefficient cancellation failure at z^" + std::to_string(k));
    if (k % 2 == 0 && !c.is_rational())
      throw InvariantError("surd cancellation failure at z^" + std::to_string(k));
    if (k % 2 == 0) th.push_back(c.rational_part());
  }
  Series<Rational> period(th, n / 2, "h");
  out.scale = spec.scale;
  out.scale_applied = spec.scale.rational();
  if (out.scale_applied) period = period * Rational(1 / *spec.scale.root);
  out.period_h = times_pi(period);
  out.area_h = times_pi(period.integrate());
  return out;
}

}  // namespace periodkit
