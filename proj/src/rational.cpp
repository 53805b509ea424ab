#include "periodkit/rational.hpp"

#include <cctype>
#include <cstring>
#include <sstream>

namespace periodkit {

ParseError::ParseError(const std::string& what, int line, int column)
    : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line),
      column_(column) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  if (negative) r = -r;
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (sgn(r) < 0) return std::nullopt;
  const Integer& n = r.get_num();
  const Integer& d = r.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  Rational out(sqrt(n), sqrt(d));
  out.canonicalize();
  return out;
}

Rational pow(const Rational& r, unsigned k) {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), r.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), r.get_den_mpz_t(), k);
  Rational out(n, d);
  out.canonicalize();
  return out;
}

int sign(const Rational& r) { return sgn(r); }

std::string to_decimal(const Rational& r, int digits) {
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  Rational scaled = abs(r) * Rational(scale);
  // round half up
  Integer q;
  Rational shifted = scaled + Rational(1, 2);
  mpz_fdiv_q(q.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  std::string mag = q.get_str();
  if (static_cast<int>(mag.size()) <= digits) mag.insert(0, static_cast<size_t>(digits) + 1 - mag.size(), '0');
  std::string out = mag.substr(0, mag.size() - static_cast<size_t>(digits));
  if (digits > 0) out += "." + mag.substr(mag.size() - static_cast<size_t>(digits));
  bool neg = sgn(r) < 0 && q != 0;
  return (neg ? "-" : "") + out;
}

namespace {

// Simplest rational in the open interval (lo, hi) with 0 <= lo; hi may be +inf.
Rational simplest_open_positive(const Rational& lo, const Rational* hi) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  Rational next(fl + 1);
  if (hi == nullptr || next < *hi) return next;
  Rational a = lo - Rational(fl), b = *hi - Rational(fl);
  // 0 <= a < b <= 1
  Rational inv_lo = 1 / b;
  Rational inner;
  if (sgn(a) == 0) {
    inner = simplest_open_positive(inv_lo, nullptr);
  } else {
    Rational inv_hi = 1 / a;
    inner = simplest_open_positive(inv_lo, &inv_hi);
  }
  Rational out = Rational(fl) + 1 / inner;
  out.canonicalize();
  return out;
}

}  // namespace

Rational simplest_between(const Rational& lo_in, const Rational& hi_in) {
  Rational lo = lo_in, hi = hi_in;
  if (lo > hi) std::swap(lo, hi);
  if (lo == hi) throw PreconditionError("simplest_between: empty interval");
  if (sgn(lo) < 0 && sgn(hi) > 0) return Rational(0);
  if (sgn(hi) <= 0) {
    Rational nlo = -hi, nhi = -lo;
    return -simplest_open_positive(nlo, &nhi);
  }
  return simplest_open_positive(lo, &hi);
}

}  // namespace periodkit
