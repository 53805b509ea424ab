#include "periodkit/series.hpp"

#include <map>

namespace periodkit {

Series<QuadExt> implicit_branch(const Series<Rational>& h_axis, int order) {
  if (order < 1) throw PreconditionError("implicit branch: order must be at least 1");
  if (h_axis.order() < order + 1) throw PreconditionError("implicit branch: H(rho, 0) known to insufficient order");
  if (sgn(h_axis[0]) != 0 || sgn(h_axis[1]) != 0 || h_axis[2] != Rational(1, 2))
    throw PreconditionError("implicit branch: H(rho, 0) must start rho^2/2");

  // S = z·σ with Σ_k h_k z^(k-2) σ^k = 1; the k = 2 term is the only one
  // carrying σ_m at order m, with coefficient √2.
  const QuadExt root2 = QuadExt::sqrt2();
  const QuadExt inv_root2(Rational(0), Rational(1, 2));
  std::vector<QuadExt> sigma{root2};
  std::map<int, std::vector<QuadExt>> powers;  // k -> coefficients of σ^k computed so far
  for (int k = 3; k <= order + 1; ++k) {
    if (sgn(h_axis[k]) == 0) continue;
    QuadExt p0 = root2;
    for (int i = 1; i < k; ++i) p0 = p0 * root2;
    powers[k] = {p0};
  }
  auto next_power_coeff = [&](int k, std::vector<QuadExt>& b) {
    const int n = static_cast<int>(b.size());
    QuadExt acc;
    for (int j = 1; j <= n; ++j) {
      long w = static_cast<long>(k + 1) * j - n;
      if (w == 0 || sigma[static_cast<size_t>(j)].is_zero()) continue;
      acc += sigma[static_cast<size_t>(j)] * b[static_cast<size_t>(n - j)] * Rational(w);
    }
    b.push_back(inv_root2 * acc * Rational(1, n));
  };
  for (int m = 1; m <= order - 1; ++m) {
    QuadExt rest;
    for (int j = 1; j < m; ++j) rest += sigma[static_cast<size_t>(j)] * sigma[static_cast<size_t>(m - j)];
    rest = rest * Rational(1, 2);
    for (auto& [k, b] : powers) {
      int idx = m - k + 2;
      if (idx < 0) continue;
      if (idx >= static_cast<int>(b.size())) next_power_coeff(k, b);
      rest += b[static_cast<size_t>(idx)] * h_axis[k];
    }
    sigma.push_back(-(rest * inv_root2));
  }
  std::vector<QuadExt> s(static_cast<size_t>(order) + 1);
  for (size_t k = 0; k < sigma.size(); ++k) s[k + 1] = sigma[k];
  return Series<QuadExt>(std::move(s), order, "z");
}

}  // namespace periodkit
