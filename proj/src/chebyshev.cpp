#include "periodkit/chebyshev.hpp"

#include <algorithm>

#include "periodkit/resultant.hpp"

namespace periodkit {

namespace {

const std::pair<char, char> kXZ{'x', 'z'};

BiPoly lift(const UniPoly& p, bool in_z) { return BiPoly::from_uni(p.with_var('x'), in_z, kXZ); }
BiRatFn lift(const UniRatFn& f, bool in_z) { return BiRatFn(lift(f.num(), in_z), lift(f.den(), in_z)); }

// Isolating intervals with every rational root reported as a point.
std::vector<RootInterval> isolate_exact(const UniPoly& p, const Bound& a, const Bound& b) {
  auto roots = isolate_real_roots(p, a, b);
  auto rats = rational_roots(p);
  for (auto& r : roots)
    for (const auto& q : rats)
      if (!r.exact() && r.lo < q && q < r.hi) r = {q, q};
  return roots;
}

Rational midpoint(const Rational& a, const Rational& b) { return (a + b) / 2; }

// Roots of p in (0, end) where `end` may be irrational or infinite.
SturmReport count_to_end(const UniPoly& p, const Bound& from, const DomainEnd& end, bool end_is_right) {
  if (end.exact) return end_is_right ? count_real_roots(p, from, end.value) : count_real_roots(p, end.value, from);
  // Shrink the isolating interval of the end until p has no root in its closure.
  UniPoly q = p;
  for (;;) {
    UniPoly g = gcd(q, end.defining);
    if (g.is_constant()) break;
    auto in_iv = count_real_roots(g, end.isolating.lo, end.isolating.hi).root_count;
    if (in_iv == 0) break;
    q = q.exact_div(g);
  }
  RootInterval iv = end.isolating;
  for (int it = 0; it < 400; ++it) {
    bool clean = sgn(q(iv.lo)) != 0 && sgn(q(iv.hi)) != 0 && count_real_roots(q, iv.lo, iv.hi).root_count == 0;
    if (clean) {
      SturmReport r = end_is_right ? count_real_roots(p, from, Bound::at(iv.lo)) : count_real_roots(p, Bound::at(iv.hi), from);
      return r;
    }
    iv = refine_root(end.defining, iv, (iv.hi - iv.lo) / 2);
  }
  throw InvariantError("domain end could not be separated from the roots of the target");
}

Rational interior_point(const DomainEnd& e, bool right) {
  if (e.exact) {
    if (!e.value.finite()) return right ? Rational(1) : Rational(-1);
    return e.value.value / 2;
  }
  return (right ? e.isolating.lo : e.isolating.hi) / 2;
}

// Nearest root of q to 0 on one side, in (0, limit) or (limit, 0).
DomainEnd nearest_root(const UniPoly& q, const Bound& limit, bool right) {
  auto roots = right ? isolate_exact(q, Bound::at(Rational(0)), limit) : isolate_exact(q, limit, Bound::at(Rational(0)));
  if (roots.empty()) return {limit, true, {}, {Rational(0), Rational(0)}};
  RootInterval r = right ? roots.front() : roots.back();
  if (r.exact()) return {Bound::at(r.lo), true, {}, r};
  return {Bound::at(Rational(0)), false, squarefree_part(q), r};
}

// Rational functions whose denominators are products of a fixed coprime,
// squarefree base closed under the curve derivative.
struct FactorBase {
  std::vector<BiPoly> atoms;
  size_t sz_index = 0;  // S_z, the denominator introduced by z'
  BiPoly sx, sz;

  void add(BiPoly p) {
    std::vector<BiPoly> pending{std::move(p)};
    while (!pending.empty()) {
      BiPoly q = pending.back().normalized();
      pending.pop_back();
      if (q.is_constant()) continue;
      BiPoly sq = gcd(gcd(q, q.partial_first()), q.partial_second());
      if (!sq.is_constant()) {
        pending.push_back(sq);
        pending.push_back(q.exact_div(sq));
        continue;
      }
      bool merged = false;
      for (size_t i = 0; i < atoms.size(); ++i) {
        if (atoms[i] == q) { merged = true; break; }
        BiPoly g = gcd(atoms[i], q);
        if (g.is_constant()) continue;
        BiPoly a = atoms[i];
        atoms.erase(atoms.begin() + static_cast<long>(i));
        pending.push_back(g);
        pending.push_back(a.exact_div(g));
        pending.push_back(q.exact_div(g));
        merged = true;
        break;
      }
      if (!merged) atoms.push_back(q);
    }
  }
  size_t index_of(const BiPoly& p) const {
    for (size_t i = 0; i < atoms.size(); ++i)
      if (atoms[i] == p.normalized()) return i;
    throw InvariantError("factor base: missing atom");
  }
};

struct FRat {
  BiPoly num;
  std::vector<int> e;
};

BiPoly curve_derivative_scaled(const BiPoly& p, const FactorBase& fb) {  // S_z · D p
  return p.partial_first() * fb.sz - p.partial_second() * fb.sx;
}

void cancel(FRat& f, const FactorBase& fb) {
  for (size_t i = 0; i < fb.atoms.size(); ++i)
    while (f.e[i] > 0 && !fb.atoms[i].is_constant()) {
      auto q = f.num.divide(fb.atoms[i]);
      if (!q) break;
      f.num = *q;
      --f.e[i];
    }
}

FRat to_frat(const BiRatFn& r, const FactorBase& fb) {
  FRat f{r.num(), std::vector<int>(fb.atoms.size(), 0)};
  BiPoly d = r.den();
  for (size_t i = 0; i < fb.atoms.size(); ++i)
    for (;;) {
      if (fb.atoms[i].is_constant()) break;
      auto q = d.divide(fb.atoms[i]);
      if (!q || d.is_constant()) break;
      d = *q;
      ++f.e[i];
    }
  if (!d.is_constant()) throw InvariantError("factor base does not cover a denominator");
  f.num = f.num * Rational(1 / d.lead());
  return f;
}

FRat frat_derivative(const FRat& f, const FactorBase& fb) {
  const size_t n = fb.atoms.size();
  std::vector<size_t> supp;
  for (size_t i = 0; i < n; ++i)
    if (f.e[i] > 0) supp.push_back(i);
  BiPoly prod(Rational(1), f.num.labels());
  for (size_t i : supp) prod = prod * fb.atoms[i];
  BiPoly num = curve_derivative_scaled(f.num, fb) * prod;
  for (size_t i : supp) {
    BiPoly others(Rational(1), f.num.labels());
    for (size_t j : supp)
      if (j != i) others = others * fb.atoms[j];
    num -= f.num * curve_derivative_scaled(fb.atoms[i], fb) * others * Rational(f.e[i]);
  }
  FRat out{num, f.e};
  for (size_t i : supp) ++out.e[i];
  ++out.e[fb.sz_index];
  cancel(out, fb);
  return out;
}

FRat frat_mul(const FRat& a, const FRat& b, const FactorBase& fb) {
  FRat out{a.num * b.num, a.e};
  for (size_t i = 0; i < out.e.size(); ++i) out.e[i] += b.e[i];
  cancel(out, fb);
  return out;
}

FRat frat_add(const FRat& a, const FRat& b, const FactorBase& fb) {
  FRat out{BiPoly(), a.e};
  BiPoly ca(Rational(1), a.num.labels()), cb(Rational(1), a.num.labels());
  for (size_t i = 0; i < out.e.size(); ++i) {
    out.e[i] = std::max(a.e[i], b.e[i]);
    if (a.e[i] < out.e[i]) ca = ca * fb.atoms[i].pow(static_cast<unsigned>(out.e[i] - a.e[i]));
    if (b.e[i] < out.e[i]) cb = cb * fb.atoms[i].pow(static_cast<unsigned>(out.e[i] - b.e[i]));
  }
  out.num = a.num * ca + b.num * cb;
  cancel(out, fb);
  return out;
}

FRat frat_neg(FRat a) {
  a.num = -a.num;
  return a;
}

FRat frat_det(const std::vector<std::vector<FRat>>& m, const FactorBase& fb) {
  const size_t n = m.size();
  if (n == 1) return m[0][0];
  FRat acc{BiPoly(), std::vector<int>(fb.atoms.size(), 0)};
  for (size_t c = 0; c < n; ++c) {
    if (m[0][c].num.is_zero()) continue;
    std::vector<std::vector<FRat>> minor;
    for (size_t r = 1; r < n; ++r) {
      std::vector<FRat> row;
      for (size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    FRat t = frat_mul(m[0][c], frat_det(minor, fb), fb);
    acc = frat_add(acc, c % 2 == 0 ? t : frat_neg(t), fb);
  }
  return acc;
}

}  // namespace

std::string DomainEnd::to_string() const {
  if (exact) return value.to_string();
  return "root of " + defining.to_string() + " in (" + periodkit::to_string(isolating.lo) + ", " +
         periodkit::to_string(isolating.hi) + ")";
}

BiPoly InvolutionSpec::reduce(const BiPoly& p) const {
  auto cs = curve.coeffs_in_second();
  const int ds = static_cast<int>(cs.size()) - 1;
  const Rational lead = cs.back().coeff(0);
  auto cp = p.with_labels(kXZ).coeffs_in_second();
  while (static_cast<int>(cp.size()) - 1 >= ds && !cp.empty()) {
    const int d = static_cast<int>(cp.size()) - 1;
    UniPoly q = cp.back() * (1 / lead);
    for (int i = 0; i <= ds; ++i) cp[static_cast<size_t>(d - ds + i)] -= q * cs[static_cast<size_t>(i)];
    while (!cp.empty() && cp.back().is_zero()) cp.pop_back();
  }
  return BiPoly::from_coeffs_in_second(cp, kXZ);
}

bool InvolutionSpec::equal_on_curve(const BiRatFn& a, const BiRatFn& b) const {
  return reduce(a.num() * b.den() - b.num() * a.den()).is_zero();
}

BiRatFn InvolutionSpec::along(const BiRatFn& f) const { return f.total_derivative(z_derivatives.at(0)); }

InvolutionSpec involution_curve(const UniPoly& A_in, int derivative_order) {
  UniPoly A = A_in.with_var('x');
  if (sgn(A.coeff(0)) != 0 || A.degree() < 2 || sgn(A.coeff(1)) != 0 || sgn(A.coeff(2)) <= 0)
    throw PreconditionError("degenerate minimum: need A(0) = A'(0) = 0 < A''(0)");
  InvolutionSpec inv;
  inv.potential = A;
  BiPoly diff = lift(A, false) - lift(A, true);
  inv.curve = diff.exact_div(BiPoly::first_var(kXZ) - BiPoly::second_var(kXZ));

  // The ovals stop at the first critical level on either side.
  UniPoly dA = A.derivative();
  auto right_crit = isolate_exact(dA, Bound::at(Rational(0)), Bound::pos_inf());
  auto left_crit = isolate_exact(dA, Bound::neg_inf(), Bound::at(Rational(0)));
  std::optional<Rational> cr, cl;
  auto exact_or_throw = [](const RootInterval& r) {
    if (!r.exact()) throw PreconditionError("involution domain: nearest critical point is irrational");
    return r.lo;
  };
  if (!right_crit.empty()) cr = exact_or_throw(right_crit.front());
  if (!left_crit.empty()) cl = exact_or_throw(left_crit.back());
  if (!cr && !cl) {
    inv.x_l = {Bound::neg_inf(), true, {}, {Rational(0), Rational(0)}};
    inv.x_r = {Bound::pos_inf(), true, {}, {Rational(0), Rational(0)}};
  } else {
    Rational h0 = cr && cl ? std::min(A(*cr), A(*cl)) : (cr ? A(*cr) : A(*cl));
    inv.level = h0;
    UniPoly q = A - UniPoly(h0, 'x');
    auto side = [&](const std::optional<Rational>& c, bool right) -> DomainEnd {
      if (c && A(*c) == h0) return {Bound::at(*c), true, {}, {*c, *c}};
      Bound limit = c ? Bound::at(*c) : (right ? Bound::pos_inf() : Bound::neg_inf());
      return nearest_root(q, limit, right);
    };
    inv.x_r = side(cr, true);
    inv.x_l = side(cl, false);
  }

  BiRatFn sx(inv.curve.partial_first()), sz(inv.curve.partial_second());
  inv.z_derivatives.push_back(-(sx / sz));
  for (int k = 2; k <= derivative_order; ++k) {
    inv.z_derivatives.push_back(inv.along(inv.z_derivatives.back()));
  }
  return inv;
}

ParamSpec cubic_parameterization() {
  UniPoly den({Rational(4), Rational(-2), Rational(1)}, 's');
  ParamSpec p;
  p.u = UniRatFn(UniPoly({Rational(0), Rational(6), Rational(-3)}, 's'), Rational(2) * den);
  p.v = UniRatFn(UniPoly({Rational(0), Rational(-3)}, 's'), den);
  p.u_lo = 0;
  p.u_hi = Rational(1, 2);
  p.v_lo = -1;
  p.v_hi = 0;
  return p;
}

ParamSpec conic_parameterization(const InvolutionSpec& inv) {
  const UniPoly& A = inv.potential;
  if (A.degree() != 3) throw PreconditionError("conic parameterization needs a cubic potential");
  if (!inv.x_r.exact || !inv.x_l.exact || !inv.x_r.value.finite() || !inv.x_l.value.finite())
    throw PreconditionError("conic parameterization needs a rational bounded domain");
  const Rational a2 = A.coeff(2), a3 = A.coeff(3);
  const Rational xr = inv.x_r.value.value, xl = inv.x_l.value.value;
  // z = t x on S: a2(1+t) + a3 x (1+t+t²) = 0
  const Rational tr = xl / xr;
  UniPoly t({Rational(-1), tr + 1}, 's');
  UniPoly one(Rational(1), 's');
  UniPoly n = Rational(-1) * a2 * (one + t);
  UniPoly d = a3 * (one + t + t * t);
  ParamSpec p;
  p.u = UniRatFn(n, d);
  p.v = UniRatFn(n * t, d);
  p.u_lo = 0;
  p.u_hi = xr;
  p.v_lo = xl;
  p.v_hi = 0;
  return p;
}

ParamCheck check_parameterization(const ParamSpec& p, const InvolutionSpec& inv) {
  ParamCheck c;
  c.on_curve = substitute(inv.curve, p.u, p.v).is_zero();
  c.endpoints_ok = p.u(p.s_lo) == p.u_lo && p.u(p.s_hi) == p.u_hi && p.v(p.s_lo) == p.v_hi && p.v(p.s_hi) == p.v_lo;
  auto monotone = [&](const UniRatFn& f) {
    UniPoly num = f.derivative().num();
    if (num.is_zero()) return false;
    return count_real_roots(num, p.s_lo, p.s_hi).root_count == 0 &&
           count_real_roots(f.den(), p.s_lo, p.s_hi).root_count == 0 && sgn(f.den()(p.s_lo)) != 0 &&
           sgn(f.den()(p.s_hi)) != 0;
  };
  c.u_monotone = monotone(p.u);
  c.v_monotone = monotone(p.v);
  return c;
}

UniRatFn power_lift(const UniRatFn& f, const UniPoly& A, LiftVariant variant, int s) {
  if (s < 0) throw PreconditionError("power_lift: s >= 0 required");
  UniPoly Ax = A.with_var('x');
  UniRatFn dA(Ax.derivative());
  UniRatFn g = variant == LiftVariant::Plain ? f / (Rational(s + 2) * dA) : f * UniRatFn(Ax) / (Rational(s + 2) * dA);
  if (sgn(g.den().coeff(0)) == 0) {
    int pole = root_multiplicity(g.den(), Rational(0));
    throw ShapeError("power_lift: integrand not analytic at 0 (pole of order " + std::to_string(pole) + ")", pole);
  }
  UniRatFn out = g.derivative();
  if (variant == LiftVariant::HMultiplied) out = out + UniRatFn(Rational(1, 2), 'x') * f;
  return out;
}

BiRatFn ell_build(const UniRatFn& f, const InvolutionSpec& inv) {
  UniRatFn g = f / UniRatFn(inv.potential.derivative());
  UniPoly den = g.den();
  if (!den.is_constant()) {
    int hits = count_to_end(den, Bound::at(Rational(0)), inv.x_r, true).root_count +
               count_to_end(den, Bound::at(Rational(0)), inv.x_l, false).root_count;
    if (hits > 0) throw PreconditionError("ell_build: f/A' has a pole on the involution domain");
  }
  return lift(g, false) - lift(g, true);
}

BiRatFn wronskian_sym(const std::vector<BiRatFn>& ells, const InvolutionSpec& inv) {
  if (ells.empty()) throw PreconditionError("wronskian_sym: empty family");
  const size_t n = ells.size();
  FactorBase fb;
  fb.sx = inv.curve.partial_first();
  fb.sz = inv.curve.partial_second();
  for (const auto& l : ells) fb.add(l.den());
  fb.add(fb.sz);
  if (fb.sz.is_constant()) fb.atoms.push_back(BiPoly(Rational(1), kXZ));  // no new denominators
  fb.sz_index = fb.sz.is_constant() ? fb.atoms.size() - 1 : fb.index_of(fb.sz);
  if (!fb.sz.is_constant() && fb.atoms[fb.sz_index] != fb.sz.normalized())
    throw InvariantError("wronskian_sym: S_z is not squarefree");
  const Rational scale = fb.atoms[fb.sz_index].lead() / fb.sz.lead();
  fb.sx = fb.sx * scale;
  fb.sz = fb.sz * scale;

  std::vector<std::vector<FRat>> m(n);
  for (const auto& l : ells) m[0].push_back(to_frat(l, fb));
  for (size_t i = 1; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m[i].push_back(frat_derivative(m[i - 1][j], fb));
  FRat w = frat_det(m, fb);

  BiPoly den(Rational(1), kXZ);
  bool reduced = true;
  for (size_t i = 0; i < fb.atoms.size(); ++i) {
    if (w.e[i] == 0) continue;
    den = den * fb.atoms[i].pow(static_cast<unsigned>(w.e[i]));
    if (!gcd(w.num, fb.atoms[i]).is_constant()) reduced = false;
  }
  if (w.num.is_zero()) return BiRatFn(BiPoly('x', 'z'));
  return reduced ? BiRatFn::from_coprime(w.num, den) : BiRatFn(w.num, den);
}

FactorExtract factor_extract(const BiRatFn& w) {
  if (w.is_zero()) throw PreconditionError("factor_extract: zero function");
  const BiPoly d = BiPoly::first_var(w.num().labels()) - BiPoly::second_var(w.num().labels());
  FactorExtract fe;
  BiPoly r = w.num();
  for (;;) {
    auto q = r.divide(d);
    if (!q) break;
    r = *q;
    ++fe.m;
  }
  fe.R = r.normalized();
  fe.constant = r.lead() / fe.R.lead();
  fe.denominator = w.den().normalized();
  fe.constant /= w.den().lead() / fe.denominator.lead();
  return fe;
}

std::string to_string(SignMethod m) { return m == SignMethod::Resultant ? "resultant" : "parameterization"; }
std::string to_string(SignVerdict v) {
  switch (v) {
    case SignVerdict::Nonvanishing: return "nonvanishing";
    case SignVerdict::Vanishing: return "vanishing";
    default: return "inconclusive";
  }
}
std::string to_string(ConditionMode m) { return m == ConditionMode::Strict ? "strict" : "relaxed"; }

SignCertificate certify_sign(const BiPoly& target_in, const InvolutionSpec& inv, SignMethod method,
                             const std::optional<ParamSpec>& param) {
  SignCertificate c;
  c.target = target_in.with_labels(kXZ);
  c.method = method;
  if (c.target.is_zero()) {
    c.verdict = SignVerdict::Vanishing;
    return c;
  }
  if (method == SignMethod::Parameterization) {
    if (!param) throw PreconditionError("certify_sign: parameterization method needs a ParamSpec");
    UniRatFn img = substitute(c.target, param->u, param->v);
    c.image = img;
    c.reduced = img.num();
    c.lo = Bound::at(param->s_lo);
    c.hi = Bound::at(param->s_hi);
    c.sample_point = midpoint(param->s_lo, param->s_hi);
    if (img.is_zero()) {
      c.verdict = SignVerdict::Vanishing;
      return c;
    }
    c.sturm = count_real_roots(c.reduced, param->s_lo, param->s_hi);
    c.root_count = c.sturm.root_count;
    c.sample_sign = sgn(img(c.sample_point));
    bool pole = count_real_roots(img.den(), param->s_lo, param->s_hi).root_count > 0;
    if (pole) c.verdict = SignVerdict::Inconclusive;
    else if (c.root_count == 0 && c.sample_sign != 0) c.verdict = SignVerdict::Nonvanishing;
    else {
      c.verdict = SignVerdict::Vanishing;
      c.witnesses = isolate_real_roots(c.reduced, c.lo, c.hi);
    }
    return c;
  }

  // A target free of z needs no elimination and has no second branch.
  const bool z_free = c.target.degree_second() <= 0;
  c.reduced = z_free ? c.target.at_second(Rational(0)) : resultant_in_second_var(c.target, inv.curve);
  c.lo = Bound::at(Rational(0));
  c.hi = inv.x_r.value;
  c.sample_point = interior_point(inv.x_r, true);
  if (c.reduced.is_zero()) {
    c.verdict = inv.reduce(c.target).is_zero() ? SignVerdict::Vanishing : SignVerdict::Inconclusive;
    return c;
  }
  c.sturm = count_to_end(c.reduced, Bound::at(Rational(0)), inv.x_r, true);
  c.root_count = c.sturm.root_count;
  c.sample_sign = sgn(c.reduced(c.sample_point));
  if (c.root_count == 0 && c.sample_sign != 0) {
    c.verdict = SignVerdict::Nonvanishing;
  } else {
    c.verdict = z_free ? SignVerdict::Vanishing : SignVerdict::Inconclusive;
    c.witnesses = isolate_real_roots(c.reduced, c.sturm.eval_lo, c.sturm.eval_hi);
  }
  return c;
}

TheoremBReport theoremB_verdict(const std::vector<UniRatFn>& fs, const UniPoly& A, int s, ConditionMode mode,
                                const std::optional<ParamSpec>& param) {
  if (fs.empty()) throw PreconditionError("theoremB_verdict: empty family");
  if (s < 1) throw PreconditionError("theoremB_verdict: s >= 1 required");
  TheoremBReport rep;
  rep.n = static_cast<int>(fs.size());
  rep.s = s;
  rep.mode = mode;
  InvolutionSpec inv = involution_curve(A, 1);
  std::vector<BiRatFn> ells;
  for (const auto& f : fs) ells.push_back(ell_build(f, inv));

  auto certify = [&](const BiPoly& target, std::vector<SignCertificate>& out) {
    if (target.is_constant()) return true;
    out.push_back(certify_sign(target, inv, SignMethod::Resultant));
    if (param) out.push_back(certify_sign(target, inv, SignMethod::Parameterization, param));
    bool any = false;
    for (const auto& c : out) {
      if (c.target != target) continue;
      if (c.verdict == SignVerdict::Vanishing) return false;
      any = any || c.verdict == SignVerdict::Nonvanishing;
    }
    return any;
  };

  rep.ct_system = true;
  for (int k = 0; k < rep.n; ++k) {
    WronskianStep st;
    st.k = k;
    st.wronskian = wronskian_sym(std::vector<BiRatFn>(ells.begin(), ells.begin() + k + 1), inv);
    if (st.wronskian.is_zero()) {
      st.nonvanishing = false;
    } else {
      // x - z > 0 on (0, x_r) because σ maps it to (x_l, 0).
      st.factors = factor_extract(st.wronskian);
      bool a = certify(st.factors.R, st.certificates);
      bool b = certify(st.factors.denominator, st.certificates);
      st.nonvanishing = a && b;
    }
    rep.ct_system = rep.ct_system && st.nonvanishing;
    rep.steps.push_back(std::move(st));
  }
  rep.condition_strict = s > 2 * (rep.n - 2);
  rep.condition_original = s > rep.n - 2;
  rep.condition_holds = mode == ConditionMode::Strict ? rep.condition_strict : rep.condition_original;
  rep.ect = rep.ct_system && rep.condition_holds;
  return rep;
}

}  // namespace periodkit
