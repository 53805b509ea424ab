#include "periodkit/resultant.hpp"

namespace periodkit {

UniPoly bareiss_det(PolyMatrix m) {
  const size_t n = m.size();
  if (n == 0) return UniPoly(Rational(1));
  for (const auto& row : m)
    if (row.size() != n) throw PreconditionError("determinant of a non-square matrix");
  UniPoly prev(Rational(1));
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return UniPoly();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        UniPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? t * Rational(1 / prev.coeff(0)) : t.exact_div(prev);
      }
      m[i][k] = UniPoly();
    }
    prev = m[k][k];
  }
  UniPoly d = m[n - 1][n - 1];
  return negate ? -d : d;
}

PolyMatrix sylvester_matrix(const BiPoly& p, const BiPoly& q) {
  auto pc = p.coeffs_in_second();
  auto qc = q.coeffs_in_second();
  const int m = static_cast<int>(pc.size()) - 1;
  const int n = static_cast<int>(qc.size()) - 1;
  const size_t size = static_cast<size_t>(m + n);
  PolyMatrix s(size, std::vector<UniPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = pc[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = qc[static_cast<size_t>(n - k)];
  return s;
}

UniPoly resultant_in_second_var(const BiPoly& p, const BiPoly& q) {
  if (p.degree_second() < 1 || q.degree_second() < 1)
    throw PreconditionError("resultant: input is constant in the eliminated variable");
  return bareiss_det(sylvester_matrix(p, q)).with_var(p.labels().first);
}

Rational resultant(const UniPoly& p, const UniPoly& q) {
  if (p.degree() < 1 || q.degree() < 1) throw PreconditionError("resultant: constant input");
  BiPoly bp = BiPoly::from_uni(p, true), bq = BiPoly::from_uni(q, true);
  return resultant_in_second_var(bp, bq).coeff(0);
}

}  // namespace periodkit
