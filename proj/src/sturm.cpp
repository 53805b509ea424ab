#include "periodkit/sturm.hpp"

#include <algorithm>

namespace periodkit {

std::string Bound::to_string() const {
  switch (kind) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    default: return periodkit::to_string(value);
  }
}

bool operator<(const Bound& a, const Bound& b) {
  if (a.kind == b.kind) return a.kind == Bound::Kind::Finite && a.value < b.value;
  if (a.kind == Bound::Kind::NegInf) return true;
  if (b.kind == Bound::Kind::PosInf) return true;
  return false;
}

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  if (p.is_zero()) throw PreconditionError("Sturm sequence of the zero polynomial");
  std::vector<UniPoly> seq{squarefree_part(p)};
  if (seq[0].degree() == 0) return seq;
  seq.push_back(seq[0].derivative());
  while (seq.back().degree() > 0) {
    UniPoly r = seq[seq.size() - 2].divmod(seq.back()).second;
    if (r.is_zero()) break;  // cannot happen for a square-free head
    seq.push_back(-r);
  }
  return seq;
}

namespace {

int sign_at(const UniPoly& p, const Bound& at) {
  if (p.is_zero()) return 0;
  if (at.finite()) return sgn(p(at.value));
  int s = sgn(p.lead());
  if (at.kind == Bound::Kind::NegInf && (p.degree() % 2 == 1)) s = -s;
  return s;
}

int variations_at(const std::vector<UniPoly>& seq, const Bound& at) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = sign_at(q, at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Moves a root endpoint `a` inward toward `dir`: returns a + dir*2^-k with no
// root of the deflated square-free part on the closed segment between them.
Rational nudge(const UniPoly& sqf, const Rational& a, int dir, const Bound& other) {
  UniPoly q = sqf.exact_div(UniPoly::linear_root(a, sqf.var()));
  Rational delta(1);
  if (other.finite()) delta = abs(other.value - a) / 2;
  for (;;) {
    Rational c = a + dir * delta;
    bool clean = sgn(q(c)) != 0 && sgn(sqf(c)) != 0;
    if (clean && q.degree() > 0) {
      auto seq = sturm_sequence(q);
      Bound l = Bound::at(dir > 0 ? a : c), h = Bound::at(dir > 0 ? c : a);
      clean = variations_at(seq, l) - variations_at(seq, h) == 0;
    }
    if (clean) return c;
    delta /= 2;
  }
}

}  // namespace

int sign_variations(const std::vector<UniPoly>& seq, const Bound& at) { return variations_at(seq, at); }

SturmReport count_real_roots(const UniPoly& p, const Bound& a, const Bound& b) {
  if (p.is_zero()) throw PreconditionError("root count of the zero polynomial");
  if (!(a < b)) throw PreconditionError("root count: empty interval");
  SturmReport rep;
  rep.polynomial = p;
  rep.lo = a;
  rep.hi = b;
  rep.eval_lo = a;
  rep.eval_hi = b;
  auto seq = sturm_sequence(p);
  rep.sequence_length = seq.size();
  const UniPoly& sqf = seq[0];
  if (a.finite() && sgn(sqf(a.value)) == 0) {
    rep.eval_lo = Bound::at(nudge(sqf, a.value, +1, b));
    rep.lo_perturbed = true;
  }
  if (b.finite() && sgn(sqf(b.value)) == 0) {
    rep.eval_hi = Bound::at(nudge(sqf, b.value, -1, rep.eval_lo));
    rep.hi_perturbed = true;
  }
  if (!(rep.eval_lo < rep.eval_hi)) {
    rep.root_count = 0;
    return rep;
  }
  rep.changes_lo = variations_at(seq, rep.eval_lo);
  rep.changes_hi = variations_at(seq, rep.eval_hi);
  rep.root_count = rep.changes_lo - rep.changes_hi;
  return rep;
}

SturmReport count_real_roots(const UniPoly& p, const Rational& a, const Rational& b) {
  return count_real_roots(p, Bound::at(a), Bound::at(b));
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m(0);
  for (int k = 0; k < p.degree(); ++k) m = std::max(m, Rational(abs(p.coeff(k) / p.lead())));
  return m + 1;
}

std::vector<RootInterval> isolate_real_roots(const UniPoly& p, const Bound& a, const Bound& b) {
  auto seq = sturm_sequence(p);
  const UniPoly& sqf = seq[0];
  std::vector<RootInterval> out;
  if (sqf.degree() < 1) return out;
  Rational big = root_bound(sqf);
  Rational lo = a.finite() ? a.value : -big;
  Rational hi = b.finite() ? b.value : big;
  if (!(lo < hi)) return out;
  if (sgn(sqf(lo)) == 0) lo = nudge(sqf, lo, +1, Bound::at(hi));
  if (sgn(sqf(hi)) == 0) hi = nudge(sqf, hi, -1, Bound::at(lo));
  // every stacked interval has non-root endpoints
  std::vector<std::pair<Rational, Rational>> stack{{lo, hi}};
  while (!stack.empty()) {
    auto [l, h] = stack.back();
    stack.pop_back();
    int c = variations_at(seq, Bound::at(l)) - variations_at(seq, Bound::at(h));
    if (c == 0) continue;
    if (c == 1) {
      out.push_back({l, h});
      continue;
    }
    Rational mid = (l + h) / 2;
    if (sgn(sqf(mid)) == 0) {
      out.push_back({mid, mid});
      stack.emplace_back(nudge(sqf, mid, +1, Bound::at(h)), h);
      stack.emplace_back(l, nudge(sqf, mid, -1, Bound::at(l)));
    } else {
      stack.emplace_back(mid, h);
      stack.emplace_back(l, mid);
    }
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

RootInterval refine_root(const UniPoly& p, RootInterval iv, const Rational& width) {
  if (iv.exact()) return iv;
  UniPoly sqf = squarefree_part(p);
  int sl = sgn(sqf(iv.lo));
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sgn(sqf(mid));
    if (sm == 0) return {mid, mid};
    if (sm == sl) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

std::vector<Rational> rational_roots(const UniPoly& p) {
  std::vector<Rational> out;
  if (p.degree() < 1) return out;
  UniPoly sqf = squarefree_part(p);
  for (const auto& iv : isolate_real_roots(sqf, Bound::neg_inf(), Bound::pos_inf())) {
    if (iv.exact()) {
      out.push_back(iv.lo);
      continue;
    }
    // a rational root p/q of an integer polynomial has q | lead; bounded denominators
    UniPoly prim = sqf.primitive();
    Integer lead = prim.lead().get_num();
    Rational w = Rational(1) / (Rational(lead * lead) * 4);
    RootInterval r = refine_root(sqf, iv, abs(w));
    if (r.exact()) {
      out.push_back(r.lo);
      continue;
    }
    Rational cand = simplest_between(r.lo, r.hi);
    if (sgn(sqf(cand)) == 0) out.push_back(cand);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace periodkit
