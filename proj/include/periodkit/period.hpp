#pragma once

#include <optional>
#include <string>
#include <vector>

#include "periodkit/bipoly.hpp"
#include "periodkit/exec.hpp"
#include "periodkit/series.hpp"
#include "periodkit/trigpoly.hpp"

namespace periodkit {

/// √(radicand), with the root itself when it is rational.
struct ScaleRecord {
  Rational radicand{1};
  std::optional<Rational> root{Rational(1)};
  bool rational() const { return root.has_value(); }
  std::string to_string() const;
};

/// Raised when x/√β, y/√α would leave the rationals.
class NormalizationError : public Error {
 public:
  NormalizationError(const std::string& what, Rational obstruction)
      : Error(what), obstruction_(std::move(obstruction)) {}
  /// Square-free radicand r such that √r is forced into a coefficient.
  const Rational& obstruction() const { return obstruction_; }

 private:
  Rational obstruction_;
};

struct HamiltonianSpec {
  BiPoly original{'x', 'y'};
  BiPoly normalized{'x', 'y'};  // quadratic part (x² + y²)/2
  Rational alpha{1}, beta{1};    // quadratic part βx²/2 + αy²/2 of the original
  ScaleRecord scale;             // √(αβ), the time-rescaling divisor
  int order = 0;                 // requested ρ-order
};

/// Rescales x -> x/√β, y -> y/√α. Throws PreconditionError for linear,
/// mixed or degenerate quadratic terms and NormalizationError when the
/// rescaled coefficients would be irrational.
HamiltonianSpec normalize(const BiPoly& h, int order);

/// ṙ and θ̇ - 1 in polar coordinates as series in r with trigonometric coefficients.
struct PolarOde {
  Series<TrigPoly> radial;   // starts at r²
  Series<TrigPoly> angular;  // starts at r
  /// dr/dθ = radial / (1 + angular)
  Series<TrigPoly> dr_dtheta() const;
};

/// Fails with PreconditionError when the quadratic part is not (x² + y²)/2.
PolarOde polar_ode(const BiPoly& normalized_h, int order);
PolarOde polar_ode(const HamiltonianSpec& spec);

/// r(θ, ρ) = ρ(1 + Σ_{k≥2} u_k ρ^(k-1)) and the table of powers (r/ρ)^k.
struct RadialFlow {
  int order = 0;
  std::vector<TrigPoly> u;  // u[k] for k = 0..order; u[0] = 0, u[1] = 1
  /// power[k][m] = [ρ^m] (r/ρ)^k for 1 <= k <= order, m <= order - k
  std::vector<std::vector<TrigPoly>> power;
};

/// Solves dr/dθ = Σ F_k r^k with r(0) = ρ order by order through ρ^order.
/// Throws InvariantError("non-periodic obstruction at order k") on a secular term.
RadialFlow radial_flow(const Series<TrigPoly>& f, int order, Exec exec = Exec::Parallel);

/// Same u_k from θ̇·dr/dθ = ṙ, where only (r/ρ)^k for k below deg H are needed.
/// The power table is filled for those k only.
RadialFlow radial_flow_cleared(const PolarOde& ode, int order, Exec exec = Exec::Parallel);

/// ⊤(ρ) = ∫_0^{2π} dθ/θ̇ along r(θ, ρ), from 1/θ̇ = 1 + Σ g_k r^k; needs the
/// full power table of radial_flow.
Series<PiRational> period_rho(const PolarOde& ode, const RadialFlow& flow, Exec exec = Exec::Parallel);

/// ⊤(ρ) from the reciprocal of θ̇(r(θ, ρ), θ) as a ρ-series; needs the power
/// rows k <= deg H - 2 only.
Series<PiRational> period_rho_direct(const PolarOde& ode, const RadialFlow& flow, Exec exec = Exec::Parallel);

/// Reference: radial_flow + period_rho. Cleared: radial_flow_cleared + period_rho_direct.
enum class PeriodRoute { Reference, Cleared };

struct PeriodExpansion {
  Series<PiRational> top_rho;
  Series<QuadExt> branch;
  Series<PiRational> period_h;  // divided by the scale when it is rational
  Series<PiRational> area_h;
  ScaleRecord scale;
  bool scale_applied = true;    // false: both series still need division by √(radicand)
};

PeriodExpansion expand_period(const HamiltonianSpec& spec, Exec exec = Exec::Parallel,
                              PeriodRoute route = PeriodRoute::Reference);

/// H(ρ, 0) as a series through ρ^order.
Series<Rational> hamiltonian_on_axis(const BiPoly& h, int order);

/// y²/2 - a cos x + (b/2) cos² x + a - b/2 truncated after x^degree.
BiPoly whirling_pendulum(const Rational& a, const Rational& b, int degree);

/// Pi-part helpers.
Series<Rational> pi_part(const Series<PiRational>& s);
Series<PiRational> times_pi(const Series<Rational>& s);

}  // namespace periodkit
