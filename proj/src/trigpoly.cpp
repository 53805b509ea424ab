#include "periodkit/trigpoly.hpp"

#include <algorithm>
#include <sstream>

namespace periodkit {

std::string PiRational::to_string() const {
  if (sgn(q_) == 0) return "0";
  if (q_ == 1) return "pi";
  if (q_ == -1) return "-pi";
  return periodkit::to_string(q_) + "*pi";
}

TrigPoly TrigPoly::cos_term(int k, const Rational& c) {
  if (k < 0) throw PreconditionError("negative harmonic");
  TrigPoly t;
  t.cos_.assign(static_cast<size_t>(k) + 1, Rational(0));
  t.cos_[static_cast<size_t>(k)] = c;
  t.trim();
  return t;
}

TrigPoly TrigPoly::sin_term(int k, const Rational& c) {
  if (k < 0) throw PreconditionError("negative harmonic");
  TrigPoly t;
  if (k == 0) return t;
  t.sin_.assign(static_cast<size_t>(k) + 1, Rational(0));
  t.sin_[static_cast<size_t>(k)] = c;
  t.trim();
  return t;
}

TrigPoly TrigPoly::secular(const Rational& slope) {
  TrigPoly t;
  t.slope_ = slope;
  return t;
}

TrigPoly TrigPoly::cos_sin_power(int i, int j) {
  TrigPoly out(Rational(1));
  TrigPoly c = cos_term(1, Rational(1)), s = sin_term(1, Rational(1));
  for (int k = 0; k < i; ++k) out = out * c;
  for (int k = 0; k < j; ++k) out = out * s;
  return out;
}

Rational TrigPoly::cos_coeff(int k) const {
  if (k < 0 || static_cast<size_t>(k) >= cos_.size()) return Rational(0);
  return cos_[static_cast<size_t>(k)];
}

Rational TrigPoly::sin_coeff(int k) const {
  if (k < 1 || static_cast<size_t>(k) >= sin_.size()) return Rational(0);
  return sin_[static_cast<size_t>(k)];
}

int TrigPoly::degree() const {
  int d = static_cast<int>(std::max(cos_.size(), sin_.size())) - 1;
  return std::max(d, 0);
}

void TrigPoly::trim() {
  while (!cos_.empty() && sgn(cos_.back()) == 0) cos_.pop_back();
  while (!sin_.empty() && sgn(sin_.back()) == 0) sin_.pop_back();
}

namespace {

void add_into(std::vector<Rational>& dst, const std::vector<Rational>& src, int sign) {
  if (dst.size() < src.size()) dst.resize(src.size());
  for (size_t k = 0; k < src.size(); ++k) {
    if (sign > 0) {
      dst[k] += src[k];
    } else {
      dst[k] -= src[k];
    }
  }
}

}  // namespace

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  add_into(cos_, o.cos_, 1);
  add_into(sin_, o.sin_, 1);
  slope_ += o.slope_;
  trim();
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) {
  add_into(cos_, o.cos_, -1);
  add_into(sin_, o.sin_, -1);
  slope_ -= o.slope_;
  trim();
  return *this;
}

TrigPoly& TrigPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    *this = TrigPoly();
    return *this;
  }
  for (auto& v : cos_) v *= c;
  for (auto& v : sin_) v *= c;
  slope_ *= c;
  return *this;
}

TrigPoly TrigPoly::operator-() const {
  TrigPoly out = *this;
  out *= Rational(-1);
  return out;
}

namespace {

// Integer image of a coefficient vector over a common denominator.
Integer common_denominator(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Integer d = 1;
  for (const auto& v : a)
    if (sgn(v) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  for (const auto& v : b)
    if (sgn(v) != 0) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), v.get_den_mpz_t());
  return d;
}

std::vector<Integer> scaled(const std::vector<Rational>& a, const Integer& d) {
  std::vector<Integer> out(a.size());
  Integer t;
  for (size_t k = 0; k < a.size(); ++k) {
    if (sgn(a[k]) == 0) continue;
    mpz_divexact(t.get_mpz_t(), d.get_mpz_t(), a[k].get_den_mpz_t());
    mpz_mul(out[k].get_mpz_t(), t.get_mpz_t(), a[k].get_num_mpz_t());
  }
  return out;
}

}  // namespace

TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  bool sa = !a.is_periodic(), sb = !b.is_periodic();
  if (sa && sb) throw PreconditionError("product of two secular trigonometric polynomials");
  if (sa || sb) {
    const TrigPoly& sec = sa ? a : b;
    const TrigPoly& other = sa ? b : a;
    if (!other.is_constant())
      throw PreconditionError("secular term times a non-constant trigonometric polynomial");
    TrigPoly out = sec;
    out *= other.mean();
    return out;
  }
  if (a.is_zero() || b.is_zero()) return TrigPoly();

  Integer da = common_denominator(a.cos_, a.sin_), db = common_denominator(b.cos_, b.sin_);
  auto ac = scaled(a.cos_, da), as = scaled(a.sin_, da);
  auto bc = scaled(b.cos_, db), bs = scaled(b.sin_, db);
  const size_t n = std::max(a.cos_.size(), a.sin_.size()) + std::max(b.cos_.size(), b.sin_.size());
  std::vector<Integer> cc(n), cs(n);
  Integer prod;

  for (size_t i = 0; i < ac.size(); ++i) {
    if (ac[i] == 0) continue;
    for (size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      mpz_mul(prod.get_mpz_t(), ac[i].get_mpz_t(), bc[j].get_mpz_t());
      cc[i > j ? i - j : j - i] += prod;
      cc[i + j] += prod;
    }
    for (size_t j = 1; j < bs.size(); ++j) {
      if (bs[j] == 0) continue;
      mpz_mul(prod.get_mpz_t(), ac[i].get_mpz_t(), bs[j].get_mpz_t());
      cs[i + j] += prod;
      if (j > i) cs[j - i] += prod;
      if (j < i) cs[i - j] -= prod;
    }
  }
  for (size_t i = 1; i < as.size(); ++i) {
    if (as[i] == 0) continue;
    for (size_t j = 1; j < bs.size(); ++j) {
      if (bs[j] == 0) continue;
      mpz_mul(prod.get_mpz_t(), as[i].get_mpz_t(), bs[j].get_mpz_t());
      cc[i > j ? i - j : j - i] += prod;
      cc[i + j] -= prod;
    }
    for (size_t j = 0; j < bc.size(); ++j) {
      if (bc[j] == 0) continue;
      mpz_mul(prod.get_mpz_t(), as[i].get_mpz_t(), bc[j].get_mpz_t());
      cs[i + j] += prod;
      if (i > j) cs[i - j] += prod;
      if (i < j) cs[j - i] -= prod;
    }
  }

  Integer den = 2 * da * db;
  TrigPoly out;
  out.cos_.resize(n);
  out.sin_.resize(n);
  for (size_t k = 0; k < n; ++k) {
    if (cc[k] != 0) {
      out.cos_[k] = Rational(cc[k], den);
      out.cos_[k].canonicalize();
    }
    if (k > 0 && cs[k] != 0) {
      out.sin_[k] = Rational(cs[k], den);
      out.sin_[k].canonicalize();
    }
  }
  out.trim();
  return out;
}

TrigPoly trig_mul(const TrigPoly& a, const TrigPoly& b) { return a * b; }

Rational mean_of_product(const TrigPoly& a, const TrigPoly& b) {
  if (!a.is_periodic() || !b.is_periodic()) {
    if (a.is_zero() || b.is_zero()) return Rational(0);
    throw PreconditionError("mean of a product with a secular factor");
  }
  Rational acc = a.mean() * b.mean();
  Rational half(0);
  int d = std::min(a.degree(), b.degree());
  for (int k = 1; k <= d; ++k) half += a.cos_coeff(k) * b.cos_coeff(k) + a.sin_coeff(k) * b.sin_coeff(k);
  return acc + half / 2;
}

TrigPoly TrigPoly::derivative() const {
  TrigPoly out;
  out.cos_.assign(std::max<size_t>(sin_.size(), 1), Rational(0));
  out.sin_.assign(cos_.size(), Rational(0));
  out.cos_[0] = slope_;
  for (size_t k = 1; k < sin_.size(); ++k) out.cos_[k] = sin_[k] * static_cast<long>(k);
  for (size_t k = 1; k < cos_.size(); ++k) out.sin_[k] = -cos_[k] * static_cast<long>(k);
  out.trim();
  return out;
}

TrigPoly TrigPoly::antiderivative() const {
  if (!is_periodic()) throw PreconditionError("antiderivative of a secular trigonometric polynomial");
  TrigPoly out;
  out.slope_ = mean();
  out.cos_.assign(std::max<size_t>(sin_.size(), 1), Rational(0));
  out.sin_.assign(cos_.size(), Rational(0));
  // ∫ b sin kθ = -b/k cos kθ, constant fixed by the value at 0
  for (size_t k = 1; k < sin_.size(); ++k) {
    Rational c = -sin_[k] / static_cast<long>(k);
    out.cos_[k] = c;
    out.cos_[0] -= c;
  }
  for (size_t k = 1; k < cos_.size(); ++k) out.sin_[k] = cos_[k] / static_cast<long>(k);
  out.trim();
  return out;
}

PiRational TrigPoly::full_period_integral() const {
  if (!is_periodic()) throw PreconditionError("full-period integral of a secular trigonometric polynomial");
  return PiRational(2 * mean());
}

Rational TrigPoly::at_zero() const {
  Rational acc(0);
  for (const auto& v : cos_) acc += v;
  return acc;
}

TrigPoly trig_antiderivative(const TrigPoly& a) { return a.antiderivative(); }
PiRational trig_full_period_integral(const TrigPoly& a) { return a.full_period_integral(); }

std::string TrigPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& c, const std::string& basis) {
    if (sgn(c) == 0) return;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (basis.empty()) {
      os << periodkit::to_string(mag);
    } else if (mag == 1) {
      os << basis;
    } else {
      os << periodkit::to_string(mag) << '*' << basis;
    }
  };
  emit(mean(), "");
  for (int k = 1; k <= degree(); ++k) {
    std::string arg = k == 1 ? "t" : std::to_string(k) + "t";
    emit(cos_coeff(k), "cos(" + arg + ")");
    emit(sin_coeff(k), "sin(" + arg + ")");
  }
  emit(slope_, "t");
  return first ? "0" : os.str();
}

}  // namespace periodkit
