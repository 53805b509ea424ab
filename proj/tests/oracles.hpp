#pragma once
// Independent reference routines used only by the tests.

#include <optional>
#include <random>
#include <vector>

#include "periodkit/unipoly.hpp"

namespace oracle {

using periodkit::Rational;
using periodkit::UniPoly;

inline Rational random_rational(std::mt19937_64& rng, int range, int max_den = 9) {
  std::uniform_int_distribution<int> den(1, max_den);
  int d = den(rng);
  std::uniform_int_distribution<int> num(-range * d, range * d);
  Rational r(num(rng), d);
  r.canonicalize();
  return r;
}

inline int coefficient_sign_changes(const std::vector<Rational>& c) {
  int changes = 0, last = 0;
  for (const auto& v : c) {
    int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Coefficients of (1+t)^n p((a + b t)/(1+t)); positive roots in t <-> roots of p in (a, b).
inline std::vector<Rational> mobius_image(const std::vector<Rational>& p, const Rational& a, const Rational& b) {
  const size_t n = p.size() - 1;
  std::vector<Rational> out(n + 1);
  // (a + b t)^k (1 + t)^(n-k), accumulated with plain convolution
  for (size_t k = 0; k <= n; ++k) {
    std::vector<Rational> term{Rational(1)};
    auto mul = [&](const Rational& c0, const Rational& c1) {
      std::vector<Rational> next(term.size() + 1);
      for (size_t i = 0; i < term.size(); ++i) {
        next[i] += term[i] * c0;
        next[i + 1] += term[i] * c1;
      }
      term = std::move(next);
    };
    for (size_t i = 0; i < k; ++i) mul(a, b);
    for (size_t i = k; i < n; ++i) mul(Rational(1), Rational(1));
    for (size_t i = 0; i <= n; ++i) out[i] += p[k] * term[i];
  }
  return out;
}

inline Rational horner(const std::vector<Rational>& p, const Rational& x) {
  Rational acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Distinct real roots of a square-free polynomial in the open interval (a, b),
// by Descartes' rule of signs with bisection (Vincent-Collins-Akritas).
inline int descartes_count(const std::vector<Rational>& p, const Rational& a, const Rational& b, int depth = 0) {
  if (depth > 200) return -1000;
  int v = coefficient_sign_changes(mobius_image(p, a, b));
  if (v <= 1) return v;
  Rational m = (a + b) / 2;
  int at_mid = sgn(horner(p, m)) == 0 ? 1 : 0;
  return descartes_count(p, a, m, depth + 1) + at_mid + descartes_count(p, m, b, depth + 1);
}

// Solves A c = b by Gauss-Jordan over Q (A given by columns); nullopt when inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(const std::vector<std::vector<Rational>>& cols,
                                                          const std::vector<Rational>& b) {
  const size_t rows = b.size(), n = cols.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(n + 1));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < n; ++j) m[i][j] = cols[j][i];
    m[i][n] = b[i];
  }
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < n && r < rows; ++c) {
    size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = 1 / m[r][c];
    for (auto& v : m[r]) v *= inv;
    for (size_t i = 0; i < rows; ++i)
      if (i != r && sgn(m[i][c]) != 0) {
        Rational f = m[i][c];
        for (size_t j = 0; j <= n; ++j) m[i][j] -= f * m[r][j];
      }
    pivot_col.push_back(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (sgn(m[i][n]) != 0) return std::nullopt;
  std::vector<Rational> x(n);
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = m[i][n];
  return x;
}

}  // namespace oracle
