#include "periodkit/unipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace periodkit {

namespace {
const Rational kZero(0);
}

UniPoly::UniPoly(std::vector<Rational> coeffs, char var) : coeffs_(std::move(coeffs)), var_(var) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

UniPoly::UniPoly(const Rational& c, char var) : var_(var) {
  if (sgn(c) != 0) coeffs_.push_back(c);
}

UniPoly UniPoly::monomial(const Rational& c, int k, char var) {
  if (sgn(c) == 0) return UniPoly(Rational(0), var);
  std::vector<Rational> v(static_cast<size_t>(k) + 1);
  v.back() = c;
  return UniPoly(std::move(v), var);
}

UniPoly UniPoly::linear_root(const Rational& root, char var) {
  return UniPoly({Rational(-root), Rational(1)}, var);
}

UniPoly UniPoly::with_var(char v) const {
  UniPoly out = *this;
  out.var_ = v;
  return out;
}

void UniPoly::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

const Rational& UniPoly::lead() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (is_constant() && !o.is_constant()) var_ = o.var_;
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (is_constant() && !o.is_constant()) var_ = o.var_;
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  char v = a.is_constant() ? b.var_ : a.var_;
  if (a.is_zero() || b.is_zero()) return UniPoly(Rational(0), v);
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out), v);
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

Rational UniPoly::operator()(const Rational& t) const {
  Rational acc(0);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc *= t;
    acc += coeffs_[i];
  }
  return acc;
}

long double UniPoly::eval_ld(long double t) const {
  long double acc = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * t + static_cast<long double>(coeffs_[i].get_d());
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly(Rational(0), var_);
  std::vector<Rational> out(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::antiderivative() const {
  if (coeffs_.empty()) return *this;
  std::vector<Rational> out(coeffs_.size() + 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) out[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return UniPoly(std::move(out), var_);
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc(Rational(0), inner.var_);
  for (size_t i = coeffs_.size(); i-- > 0;) {
    acc = acc * inner;
    acc += UniPoly(coeffs_[i], inner.var_);
  }
  return acc.with_var(inner.is_constant() ? var_ : inner.var_);
}

UniPoly UniPoly::reflect() const {
  UniPoly out = *this;
  for (size_t i = 1; i < out.coeffs_.size(); i += 2) out.coeffs_[i] = -out.coeffs_[i];
  return out;
}

UniPoly UniPoly::pow(unsigned k) const {
  UniPoly result(Rational(1), var_);
  UniPoly base = *this;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) throw PreconditionError("polynomial division by zero");
  UniPoly rem = *this;
  rem.var_ = is_constant() ? d.var_ : var_;
  if (rem.degree() < d.degree()) return {UniPoly(Rational(0), rem.var_), rem};
  std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree() + 1));
  Rational inv_lead = 1 / d.lead();
  for (int k = rem.degree() - d.degree(); k >= 0; --k) {
    const Rational& top = rem.coeff(k + d.degree());
    if (sgn(top) == 0) continue;
    Rational f = top * inv_lead;
    q[static_cast<size_t>(k)] = f;
    for (int i = 0; i <= d.degree(); ++i)
      rem.coeffs_[static_cast<size_t>(k + i)] -= f * d.coeffs_[static_cast<size_t>(i)];
  }
  rem.trim();
  return {UniPoly(std::move(q), rem.var_), rem};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

bool UniPoly::divisible_by(const UniPoly& d) const { return divmod(d).second.is_zero(); }

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  out *= Rational(1 / lead());
  return out;
}

Rational UniPoly::content() const {
  if (is_zero()) return Rational(1);
  Integer g = 0, l = 1;
  for (const auto& c : coeffs_) {
    if (sgn(c) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(g, l);
  out.canonicalize();
  return out;
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return *this;
  UniPoly out = *this;
  out *= Rational(1 / content());
  return out;
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0) {
      os << periodkit::to_string(mag);
      continue;
    }
    if (!unit) os << periodkit::to_string(mag) << '*';
    os << var_;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

namespace {

// Integer-coefficient vectors, used by the subresultant chain.
using ZPoly = std::vector<Integer>;

ZPoly to_zpoly(const UniPoly& p) {
  UniPoly prim = p.primitive();
  ZPoly out;
  for (const auto& c : prim.coeffs()) out.push_back(c.get_num());
  return out;
}

int zdeg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b
ZPoly zprem(ZPoly a, const ZPoly& b) {
  int db = zdeg(b);
  const Integer& lb = b.back();
  int e = zdeg(a) - db + 1;
  while (!a.empty() && zdeg(a) >= db) {
    Integer la = a.back();
    int shift = zdeg(a) - db;
    for (auto& c : a) c *= lb;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(shift + i)] -= la * b[static_cast<size_t>(i)];
    ztrim(a);
    --e;
  }
  if (e > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& c : a) c *= f;
  }
  return a;
}

}  // namespace

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  char v = p.is_constant() ? q.var() : p.var();
  if (p.is_zero() && q.is_zero()) return UniPoly(Rational(0), v);
  if (p.is_zero()) return q.monic().with_var(v);
  if (q.is_zero()) return p.monic().with_var(v);
  ZPoly a = to_zpoly(p), b = to_zpoly(q);
  if (zdeg(a) < zdeg(b)) std::swap(a, b);
  // Subresultant PRS (Collins / Brown).
  Integer g = 1, h = 1;
  while (true) {
    if (zdeg(b) == 0) return UniPoly(Rational(1), v);
    int delta = zdeg(a) - zdeg(b);
    ZPoly r = zprem(a, b);
    if (r.empty()) break;
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer div = g * hd;
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), div.get_mpz_t());
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    // h = g^delta / h^(delta-1)
    Integer gd;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      // h unchanged: g^0 * h^1
    } else {
      Integer hprev;
      mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hprev.get_mpz_t());
    }
  }
  std::vector<Rational> out;
  for (const auto& c : b) out.emplace_back(c);
  return UniPoly(std::move(out), v).monic();
}

UniPoly lcm(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() || q.is_zero()) return UniPoly(Rational(0), p.var());
  return (p * q).exact_div(gcd(p, q)).monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p;
  UniPoly g = gcd(p, p.derivative());
  return p.exact_div(g);
}

int root_multiplicity(const UniPoly& p, const Rational& root) {
  if (p.is_zero()) throw PreconditionError("root multiplicity of the zero polynomial");
  int m = 0;
  UniPoly cur = p;
  UniPoly lin = UniPoly::linear_root(root, p.var());
  while (sgn(cur(root)) == 0) {
    cur = cur.exact_div(lin);
    ++m;
  }
  return m;
}

}  // namespace periodkit
