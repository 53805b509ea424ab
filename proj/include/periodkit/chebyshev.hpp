#pragma once

#include <optional>
#include <string>
#include <vector>

#include "periodkit/bipoly.hpp"
#include "periodkit/ratfn.hpp"
#include "periodkit/sturm.hpp"
#include "periodkit/unipoly.hpp"

// Involutions σ of a potential A (A(x) = A(σ(x))), functions along the curve
// z = σ(x), and exact sign certificates for them.

namespace periodkit {

/// One end of the involution domain. Irrational ends carry an isolating interval.
struct DomainEnd {
  Bound value;                // exact value or ±∞ when `exact`
  bool exact = true;
  UniPoly defining;           // A(x) - h0 when not exact
  RootInterval isolating{Rational(0), Rational(0)};
  std::string to_string() const;
};

struct InvolutionSpec {
  UniPoly potential;                 // A in x
  BiPoly curve;                      // S(x,z) = (A(x) - A(z))/(x - z)
  DomainEnd x_l, x_r;
  std::optional<Rational> level;     // h0, the first critical level; none when the ovals are unbounded
  std::vector<BiRatFn> z_derivatives;  // z', z'', ... as formal derivatives, not reduced modulo S

  /// Numerator reduced modulo S (z-degree below deg_z S).
  BiPoly reduce(const BiPoly& p) const;
  bool vanishes_on_curve(const BiRatFn& f) const { return reduce(f.num()).is_zero(); }
  bool equal_on_curve(const BiRatFn& a, const BiRatFn& b) const;
  /// d/dx of f(x, σ(x)) as a function of (x, z).
  BiRatFn along(const BiRatFn& f) const;
};

/// pre: A(0) = A'(0) = 0 < A''(0).
InvolutionSpec involution_curve(const UniPoly& A, int derivative_order = 2);

/// x = u(s), z = v(s) on S = 0, s in (0, 1) onto x in (0, x_r).
struct ParamSpec {
  UniRatFn u, v;
  Rational s_lo{0}, s_hi{1};
  Rational u_lo, u_hi, v_lo, v_hi;  // closures of the image intervals
};

/// u = -3s(s-2)/(2(s²-2s+4)), v = -3s/(s²-2s+4) for A = x²/2 + x³/3.
ParamSpec cubic_parameterization();
/// Lines z = t x through the origin, t = -1 + s(t_r + 1); cubic A with rational domain only.
ParamSpec conic_parameterization(const InvolutionSpec& inv);

struct ParamCheck {
  bool on_curve = false;
  bool endpoints_ok = false;
  bool u_monotone = false;
  bool v_monotone = false;
  bool ok() const { return on_curve && endpoints_ok && u_monotone && v_monotone; }
};
ParamCheck check_parameterization(const ParamSpec& p, const InvolutionSpec& inv);

enum class LiftVariant { Plain, HMultiplied };

struct ShapeError : Error {
  ShapeError(const std::string& what, int pole) : Error(what), pole_order(pole) {}
  int pole_order;
};

/// New integrand against y^(s+2): (F/((s+2)A'))' or (F A/((s+2)A'))' + F/2.
UniRatFn power_lift(const UniRatFn& f, const UniPoly& A, LiftVariant variant, int s);

/// ℓ(x, z) = f(x)/A'(x) - f(z)/A'(z).
BiRatFn ell_build(const UniRatFn& f, const InvolutionSpec& inv);

/// det[D^i ℓ_j] with D the derivative along the curve.
BiRatFn wronskian_sym(const std::vector<BiRatFn>& ells, const InvolutionSpec& inv);

/// W = constant · (x - z)^m · R / denominator with R, denominator primitive and positive-leading.
struct FactorExtract {
  int m = 0;
  BiPoly R;
  BiPoly denominator;
  Rational constant;
};
FactorExtract factor_extract(const BiRatFn& w);

enum class SignMethod { Resultant, Parameterization };
enum class SignVerdict { Nonvanishing, Vanishing, Inconclusive };
std::string to_string(SignMethod m);
std::string to_string(SignVerdict v);

struct SignCertificate {
  BiPoly target;
  SignMethod method = SignMethod::Resultant;
  UniPoly reduced;           // Res_z(target, S) or the numerator of target(u(s), v(s))
  std::optional<UniRatFn> image;  // target(u(s), v(s)) for the parameterization method
  Bound lo, hi;
  SturmReport sturm;
  int root_count = 0;
  Rational sample_point;
  int sample_sign = 0;
  SignVerdict verdict = SignVerdict::Inconclusive;
  std::vector<RootInterval> witnesses;
};

/// Sign of target(x, σ(x)) on (0, x_r). The resultant method cannot tell the
/// branches apart and reports roots as inconclusive.
SignCertificate certify_sign(const BiPoly& target, const InvolutionSpec& inv, SignMethod method,
                             const std::optional<ParamSpec>& param = std::nullopt);

enum class ConditionMode { Strict, Relaxed };  // s > 2(n-2), s > n-2
std::string to_string(ConditionMode m);

struct WronskianStep {
  int k = 0;
  BiRatFn wronskian;
  FactorExtract factors;
  std::vector<SignCertificate> certificates;  // cofactor first, then denominator
  bool nonvanishing = false;
};

struct TheoremBReport {
  int n = 0;
  int s = 0;
  ConditionMode mode = ConditionMode::Relaxed;
  std::vector<WronskianStep> steps;
  bool ct_system = false;
  bool condition_strict = false;    // s > 2(n-2)
  bool condition_original = false;  // s > n-2
  bool condition_holds = false;     // in the selected mode
  bool ect = false;
};

/// J_k = ∮ f_k y^(2s-1) dx. Every factor gets a resultant certificate, plus a
/// parameterization certificate when `param` is given; a vanishing verdict from
/// the parameterization overrides.
TheoremBReport theoremB_verdict(const std::vector<UniRatFn>& fs, const UniPoly& A, int s, ConditionMode mode,
                                const std::optional<ParamSpec>& param = std::nullopt);

}  // namespace periodkit
