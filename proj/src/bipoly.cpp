#include "periodkit/bipoly.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace periodkit {

namespace {

bool graded_less(const Monomial& a, const Monomial& b) {
  int da = a.first + a.second, db = b.first + b.second;
  if (da != db) return da < db;
  return a.first < b.first;
}

const Rational kZero(0);

}  // namespace

BiPoly::BiPoly(const Rational& c, std::pair<char, char> labels) : labels_(labels) {
  if (sgn(c) != 0) terms_.emplace(Monomial{0, 0}, c);
}

BiPoly BiPoly::term(const Rational& c, int i, int j, std::pair<char, char> labels) {
  BiPoly p(labels.first, labels.second);
  if (sgn(c) != 0) p.terms_.emplace(Monomial{i, j}, c);
  return p;
}

BiPoly BiPoly::from_uni(const UniPoly& p, bool in_second, std::pair<char, char> labels) {
  BiPoly out(labels.first, labels.second);
  for (int k = 0; k <= p.degree(); ++k) {
    if (sgn(p.coeff(k)) == 0) continue;
    out.terms_.emplace(in_second ? Monomial{0, k} : Monomial{k, 0}, p.coeff(k));
  }
  return out;
}

BiPoly BiPoly::from_coeffs_in_second(const std::vector<UniPoly>& c, std::pair<char, char> labels) {
  BiPoly out(labels.first, labels.second);
  for (size_t j = 0; j < c.size(); ++j)
    for (int i = 0; i <= c[j].degree(); ++i)
      if (sgn(c[j].coeff(i)) != 0) out.terms_.emplace(Monomial{i, static_cast<int>(j)}, c[j].coeff(i));
  return out;
}

BiPoly BiPoly::with_labels(std::pair<char, char> l) const {
  BiPoly out = *this;
  out.labels_ = l;
  return out;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0});
}

Rational BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_first() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first);
  return d;
}

int BiPoly::degree_second() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.second);
  return d;
}

int BiPoly::total_degree() const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

Monomial BiPoly::lead_monomial() const {
  Monomial best{0, 0};
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || graded_less(best, m)) best = m;
    first = false;
  }
  return best;
}

const Rational& BiPoly::lead() const {
  if (terms_.empty()) return kZero;
  return terms_.at(lead_monomial());
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly out(a.labels_.first, a.labels_.second);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m{ma.first + mb.first, ma.second + mb.second};
      auto [it, inserted] = out.terms_.try_emplace(m, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  }
  std::erase_if(out.terms_, [](const auto& kv) { return sgn(kv.second) == 0; });
  return out;
}

BiPoly BiPoly::pow(unsigned k) const {
  BiPoly result(Rational(1), labels_);
  BiPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

Rational BiPoly::operator()(const Rational& a, const Rational& b) const {
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * periodkit::pow(a, static_cast<unsigned>(m.first)) *
                                           periodkit::pow(b, static_cast<unsigned>(m.second));
  return acc;
}

long double BiPoly::eval_ld(long double a, long double b) const {
  long double acc = 0;
  for (const auto& [m, c] : terms_)
    acc += static_cast<long double>(c.get_d()) * std::pow(a, m.first) * std::pow(b, m.second);
  return acc;
}

UniPoly BiPoly::at_first(const Rational& a) const {
  std::vector<Rational> v(static_cast<size_t>(std::max(0, degree_second() + 1)));
  for (const auto& [m, c] : terms_) v[static_cast<size_t>(m.second)] += c * periodkit::pow(a, static_cast<unsigned>(m.first));
  return UniPoly(std::move(v), labels_.second);
}

UniPoly BiPoly::at_second(const Rational& b) const {
  std::vector<Rational> v(static_cast<size_t>(std::max(0, degree_first() + 1)));
  for (const auto& [m, c] : terms_) v[static_cast<size_t>(m.first)] += c * periodkit::pow(b, static_cast<unsigned>(m.second));
  return UniPoly(std::move(v), labels_.first);
}

BiPoly BiPoly::partial_first() const {
  BiPoly out(labels_.first, labels_.second);
  for (const auto& [m, c] : terms_)
    if (m.first > 0) out.terms_.emplace(Monomial{m.first - 1, m.second}, c * m.first);
  return out;
}

BiPoly BiPoly::partial_second() const {
  BiPoly out(labels_.first, labels_.second);
  for (const auto& [m, c] : terms_)
    if (m.second > 0) out.terms_.emplace(Monomial{m.first, m.second - 1}, c * m.second);
  return out;
}

BiPoly BiPoly::swapped() const {
  BiPoly out(labels_.first, labels_.second);
  for (const auto& [m, c] : terms_) out.terms_.emplace(Monomial{m.second, m.first}, c);
  return out;
}

std::vector<UniPoly> BiPoly::coeffs_in_second() const {
  int dz = degree_second();
  std::vector<std::vector<Rational>> raw(static_cast<size_t>(std::max(0, dz + 1)));
  for (const auto& [m, c] : terms_) {
    auto& row = raw[static_cast<size_t>(m.second)];
    if (static_cast<int>(row.size()) <= m.first) row.resize(static_cast<size_t>(m.first) + 1);
    row[static_cast<size_t>(m.first)] = c;
  }
  std::vector<UniPoly> out;
  out.reserve(raw.size());
  for (auto& r : raw) out.emplace_back(std::move(r), labels_.first);
  return out;
}

std::optional<BiPoly> BiPoly::divide(const BiPoly& d) const {
  if (d.is_zero()) throw PreconditionError("bivariate division by zero");
  // Lexicographic order (second exponent, then first) makes the leading term
  // of a product the product of leading terms.
  auto lex_lead = [](const std::map<Monomial, Rational>& t) {
    auto best = t.begin();
    for (auto it = t.begin(); it != t.end(); ++it)
      if (it->first.second > best->first.second ||
          (it->first.second == best->first.second && it->first.first > best->first.first))
        best = it;
    return best;
  };
  BiPoly rem = *this;
  BiPoly quot(labels_.first, labels_.second);
  auto dl = lex_lead(d.terms_);
  const Monomial dm = dl->first;
  const Rational dinv = 1 / dl->second;
  while (!rem.terms_.empty()) {
    auto rl = lex_lead(rem.terms_);
    Monomial rm = rl->first;
    if (rm.first < dm.first || rm.second < dm.second) return std::nullopt;
    Monomial qm{rm.first - dm.first, rm.second - dm.second};
    Rational qc = rl->second * dinv;
    quot.terms_.emplace(qm, qc);
    rem -= term(qc, qm.first, qm.second, labels_) * d;
  }
  return quot;
}

BiPoly BiPoly::exact_div(const BiPoly& d) const {
  auto q = divide(d);
  if (!q) throw InvariantError("inexact bivariate division");
  return *q;
}

Rational BiPoly::content() const {
  if (terms_.empty()) return Rational(1);
  Integer g = 0, l = 1;
  for (const auto& [m, c] : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational out(g, l);
  out.canonicalize();
  return out;
}

BiPoly BiPoly::normalized() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (sgn(lead()) < 0) c = -c;
  BiPoly out = *this;
  out *= Rational(1 / c);
  return out;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return graded_less(b.first, a.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool has_var = m.first > 0 || m.second > 0;
    bool wrote = false;
    if (!has_var || mag != 1) {
      os << periodkit::to_string(mag);
      wrote = true;
    }
    auto var = [&](char v, int e) {
      if (e == 0) return;
      if (wrote) os << '*';
      os << v;
      if (e > 1) os << '^' << e;
      wrote = true;
    };
    var(labels_.first, m.first);
    var(labels_.second, m.second);
  }
  return os.str();
}

namespace {

using RecPoly = std::vector<UniPoly>;  // coefficients in the second variable

void rtrim(RecPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int rdeg(const RecPoly& p) { return static_cast<int>(p.size()) - 1; }

UniPoly rcontent(const RecPoly& p) {
  UniPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

RecPoly rprimitive(const RecPoly& p) {
  if (p.empty()) return p;
  UniPoly g = rcontent(p);
  RecPoly exact;
  exact.reserve(p.size());
  for (const auto& c : p) exact.push_back(c.exact_div(g));
  Rational cont = BiPoly::from_coeffs_in_second(exact).content();
  for (auto& c : exact) c *= Rational(1 / cont);
  return exact;
}

RecPoly rprem(RecPoly a, const RecPoly& b) {
  int db = rdeg(b);
  const UniPoly& lb = b.back();
  while (!a.empty() && rdeg(a) >= db) {
    UniPoly la = a.back();
    int shift = rdeg(a) - db;
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(shift + i)] -= la * b[static_cast<size_t>(i)];
    rtrim(a);
    // pseudo-remainder up to a nonzero factor in Q[first]; primitivize to contain growth
    a = rprimitive(a);
  }
  return a;
}

}  // namespace

BiPoly gcd(const BiPoly& p, const BiPoly& q) {
  auto labels = p.is_zero() ? q.labels() : p.labels();
  if (p.is_zero() && q.is_zero()) return BiPoly(labels.first, labels.second);
  if (p.is_zero()) return q.normalized();
  if (q.is_zero()) return p.normalized();
  if (p.is_constant() || q.is_constant()) return BiPoly(Rational(1), labels);
  RecPoly a = p.with_labels({'x', 'z'}).coeffs_in_second();
  RecPoly b = q.with_labels({'x', 'z'}).coeffs_in_second();
  UniPoly ca = rcontent(a), cb = rcontent(b);
  UniPoly cg = gcd(ca, cb);
  a = rprimitive(a);
  b = rprimitive(b);
  if (rdeg(a) < rdeg(b)) std::swap(a, b);
  // A specialization x = x0 that keeps both leading coefficients and has coprime
  // images bounds the second-variable degree of the gcd by zero.
  if (rdeg(b) > 0) {
    int tried = 0;
    for (long x0 = 1; tried < 3 && x0 < 40; ++x0) {
      Rational t = (x0 % 2 == 0) ? Rational(x0 / 2) : Rational(-(x0 + 1) / 2, 3);
      if (sgn(a.back()(t)) == 0 || sgn(b.back()(t)) == 0) continue;
      ++tried;
      std::vector<Rational> ea, eb;
      for (const auto& c : a) ea.push_back(c(t));
      for (const auto& c : b) eb.push_back(c(t));
      if (gcd(UniPoly(ea), UniPoly(eb)).is_constant()) {
        RecPoly one{cg};
        return BiPoly::from_coeffs_in_second(one).with_labels(labels).normalized();
      }
    }
  }
  while (rdeg(b) > 0) {
    RecPoly r = rprem(a, b);
    a = std::move(b);
    b = std::move(r);
    if (b.empty()) break;
  }
  RecPoly g;
  if (b.empty()) {
    g = rprimitive(a);
  } else {
    // b is a nonzero element of Q[first]: primitive parts are coprime in the second variable
    g = {UniPoly(Rational(1))};
  }
  for (auto& c : g) c = c * cg;
  return BiPoly::from_coeffs_in_second(g).with_labels(labels).normalized();
}

}  // namespace periodkit
