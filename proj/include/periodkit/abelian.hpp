#pragma once

#include <string>
#include <vector>

#include "periodkit/exec.hpp"
#include "periodkit/series.hpp"
#include "periodkit/unipoly.hpp"

// Abelian integrals I_k(h) = ∮ x^k y dx over the ovals of
// H = x²/2 + x³/3 + y²/2, kept in the basis (I₀, I₁).

namespace periodkit {

/// I_k = p(h)·I₀ + q(h)·I₁.
struct ReductionPair {
  UniPoly p;
  UniPoly q;
  bool is_zero() const { return p.is_zero() && q.is_zero(); }
  friend bool operator==(const ReductionPair& a, const ReductionPair& b) { return a.p == b.p && a.q == b.q; }
};

ReductionPair operator+(const ReductionPair& a, const ReductionPair& b);
ReductionPair operator*(const UniPoly& c, const ReductionPair& a);
ReductionPair operator*(const Rational& c, const ReductionPair& a);

ReductionPair reduce(int k);
/// reduce(0) .. reduce(k_max) in one pass.
std::vector<ReductionPair> reduce_table(int k_max);

/// 6(6h-1)h · I_k' expressed in the basis, using the Picard-Fuchs system for I₀', I₁'.
ReductionPair scaled_derivative(const ReductionPair& r);

struct IdentityCheck {
  std::string identity;  // "sum", "derivative" or "recursion"
  int k = 0;
  bool pass = false;
  ReductionPair residual;
};

/// Sum identity for 1 <= k <= K, derivative identity for 0 <= k <= K,
/// three-term recursion for 3 <= k <= 3K.
std::vector<IdentityCheck> identity_suite(int K);

/// I₀ and I₁ through h^order, in units of π.
struct AbelianSeries {
  Series<Rational> i0;
  Series<Rational> i1;
  int order() const { return i0.order(); }
};

/// I₁ = (6(5h-1)I₀ - 6(6h-1)h I₀') / 7.
Series<Rational> i1_from_i0(const Series<Rational>& i0);
AbelianSeries series_I0_I1(int order, Exec exec = Exec::Parallel);

/// 6(6h-1)h (I₀', I₁') - M (I₀, I₁), and the same system for (A, T).
struct PicardFuchsResidual {
  Series<Rational> first;
  Series<Rational> second;
  Series<Rational> area_first;
  Series<Rational> area_second;
  bool vanishes_through(int n) const;
};
PicardFuchsResidual picard_fuchs_residual(const AbelianSeries& s);
PicardFuchsResidual picard_fuchs_residual(int order);

/// All residuals are exact series; the quotient ones are π-free.
struct HillRiccatiResidual {
  Series<Rational> hill_i0;            // 6(1-6h)h I₀'' - 5 I₀
  Series<Rational> hill_area;          // 6(1-6h)h A'' - 5 A
  Series<Rational> riccati_i1_i0;      // q = I₁/I₀: 6(6h-1)h q' - 7q² - 6(2h+1)q - 6h
  Series<Rational> riccati_t_a;        // q = T/A, pole cleared: 6(1-6h)(h q̃' - q̃ + q̃²) - 5h, q̃ = hq
  Series<Rational> riccati_i0_i1;      // p = I₀/I₁, pole cleared (one order shorter): 6(6h-1)(h p̃' - p̃) + 6p̃² + 6(2h+1)p̃ + 7h
  Series<Rational> riccati_a_t;        // p = A/T: 6(1-6h)h (p' - 1) + 5p²
  Series<Rational> transcribed_i0_i1;  // first Riccati form applied to p̃ = h I₀/I₁, times h²
  Series<Rational> transcribed_a_t;    // 6(1-6h)h (p' + p²) - 5 with p = A/T
  int pole_order_i0_i1 = 0;            // valuation(I₁) - valuation(I₀)
  int pole_order_t_a = 0;              // valuation(A) - valuation(T)
  /// Both Hill residuals and the I₁/I₀, T/A, A/T Riccati residuals vanish through h^n.
  bool vanishes_through(int n) const;
};
HillRiccatiResidual hill_riccati_residuals(const AbelianSeries& s);
HillRiccatiResidual hill_riccati_residuals(int order);

/// 2πh ₂F₁(1/6, 5/6; 2; 6h) through h^order, in units of π.
Series<Rational> hypergeom_area(int order);

/// G_j = F_j/(πh) for the j <= n with j mod 3 != 2, in index order.
struct GBasis {
  std::vector<int> indices;
  std::vector<Series<Rational>> g;
};
GBasis basis_G(int n, const AbelianSeries& s);
GBasis basis_G(int n, int order, Exec exec = Exec::Parallel);

int capacity(int n);

struct EctReport {
  int n = 0;
  int capacity = 0;
  std::vector<Rational> wronskian_values;
  bool all_nonzero = false;
  int series_order_used = 0;
};

/// det[i! [h^i] G_j]_{0<=i,j<=k} for k = 0..capacity(n).
EctReport wronskians_at_zero(const GBasis& basis, int n, Exec exec = Exec::Parallel);
EctReport wronskians_at_zero(int n, int order, Exec exec = Exec::Parallel);

/// Fraction-free elimination; the matrix is square.
Rational bareiss_det(std::vector<std::vector<Rational>> m);

}  // namespace periodkit
