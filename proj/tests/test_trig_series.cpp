#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "periodkit/trigpoly.hpp"

using namespace periodkit;
using Real = boost::multiprecision::cpp_bin_float_50;

namespace {

TrigPoly C(int k, Rational c = Rational(1)) { return TrigPoly::cos_term(k, c); }
TrigPoly S(int k, Rational c = Rational(1)) { return TrigPoly::sin_term(k, c); }

TrigPoly random_trig(std::mt19937_64& rng, int deg) {
  TrigPoly t(oracle::random_rational(rng, 3));
  for (int k = 1; k <= deg; ++k) {
    if (rng() % 3 != 0) t += C(k, oracle::random_rational(rng, 3));
    if (rng() % 3 != 0) t += S(k, oracle::random_rational(rng, 3));
  }
  return t;
}

Real to_real(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

}  // namespace

TEST_CASE("product-to-sum examples") {
  CHECK(trig_mul(C(1), C(1)) == TrigPoly(Rational(1, 2)) + C(2, Rational(1, 2)));
  CHECK(trig_mul(S(1), C(1)) == S(2, Rational(1, 2)));
  TrigPoly one(Rational(1));
  CHECK(trig_mul(one + C(1), one - C(1)) == TrigPoly(Rational(1, 2)) - C(2, Rational(1, 2)));
  CHECK(trig_mul(S(1), S(1)) == trig_mul(one + C(1), one - C(1)));
  CHECK(trig_mul(S(2), S(3)) == C(1, Rational(1, 2)) - C(5, Rational(1, 2)));
  CHECK(trig_mul(C(1), S(3)) == S(4, Rational(1, 2)) + S(2, Rational(1, 2)));
  CHECK(trig_mul(S(1), C(3)) == S(4, Rational(1, 2)) - S(2, Rational(1, 2)));
}

TEST_CASE("secular factors") {
  TrigPoly th = TrigPoly::secular(Rational(2));
  CHECK(trig_mul(th, TrigPoly(Rational(3))) == TrigPoly::secular(Rational(6)));
  CHECK_THROWS_AS(trig_mul(th, th), PreconditionError);
  CHECK_THROWS_AS(trig_mul(th, C(1)), PreconditionError);
}

TEST_CASE("antiderivatives") {
  CHECK(trig_antiderivative(C(1)) == S(1));
  CHECK(trig_antiderivative(TrigPoly(Rational(3))) == TrigPoly::secular(Rational(3)));
  CHECK(trig_antiderivative(S(2)) == TrigPoly(Rational(1, 2)) - C(2, Rational(1, 2)));
  CHECK(trig_antiderivative(S(2)).derivative() == S(2));
  CHECK_THROWS_AS(trig_antiderivative(TrigPoly::secular(Rational(1))), PreconditionError);
  CHECK(trig_antiderivative(S(3) + C(2)).at_zero() == 0);
}

TEST_CASE("full-period integrals") {
  CHECK(trig_full_period_integral(TrigPoly(Rational(3)) + C(5)) == PiRational(Rational(6)));
  CHECK(trig_full_period_integral(S(1) + S(3)).is_zero());
  TrigPoly g2 = TrigPoly(Rational(5, 12)) - C(2, Rational(1, 2)) + C(4, Rational(1, 12));
  CHECK(trig_full_period_integral(g2) == PiRational(Rational(5, 6)));
  // hand expansion of [ρ²] 1/θ̇ for the cubic: -cos³θ·u₂ + cos⁶θ with u₂ = (1 - cos³θ)/3
  TrigPoly c3 = TrigPoly::cos_sin_power(3, 0), c6 = TrigPoly::cos_sin_power(6, 0);
  TrigPoly hand = c6 * Rational(4, 3) - c3 * Rational(1, 3);
  CHECK(hand.mean() == Rational(5, 12));
  CHECK_THROWS_AS(trig_full_period_integral(TrigPoly::secular(Rational(1))), PreconditionError);
}

TEST_CASE("cos/sin powers match the binomial expansion at θ = 0 and θ = π/2") {
  for (int i = 0; i <= 5; ++i) {
    for (int j = 0; j <= 5; ++j) {
      TrigPoly p = TrigPoly::cos_sin_power(i, j);
      CHECK(p.at_zero() == (j == 0 ? 1 : 0));
      Real v = p.evaluate(boost::math::constants::half_pi<Real>());
      Real expect = i == 0 ? 1 : 0;
      CHECK(abs(v - expect) < Real("1e-40"));
    }
  }
}

TEST_CASE("property: ring laws on random inputs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    TrigPoly a = random_trig(rng, 6), b = random_trig(rng, 6), c = random_trig(rng, 6);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("property: derivative inverts the antiderivative") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    TrigPoly a = random_trig(rng, 8);
    CHECK(a.antiderivative().derivative() == a);
    CHECK(a.antiderivative().at_zero() == 0);
  }
}

TEST_CASE("property: Parseval positivity") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    TrigPoly a = random_trig(rng, 7);
    Rational expect = a.mean() * a.mean();
    for (int k = 1; k <= a.degree(); ++k)
      expect += (a.cos_coeff(k) * a.cos_coeff(k) + a.sin_coeff(k) * a.sin_coeff(k)) / 2;
    PiRational got = trig_full_period_integral(a * a);
    CHECK(got == PiRational(2 * expect));
    CHECK(sgn(got.coefficient()) >= 0);
    CHECK(mean_of_product(a, a) == expect);
  }
}

TEST_CASE("property: exact arithmetic agrees with pointwise evaluation") {
  std::mt19937_64 rng(14);
  const Real tol("1e-30");
  for (int trial = 0; trial < 30; ++trial) {
    TrigPoly a = random_trig(rng, 6), b = random_trig(rng, 6);
    Real theta = to_real(oracle::random_rational(rng, 7));
    Real va = a.evaluate(theta), vb = b.evaluate(theta);
    CHECK(abs((a * b).evaluate(theta) - va * vb) < tol);
    CHECK(abs((a + b).evaluate(theta) - (va + vb)) < tol);
    // fundamental theorem: F(θ) - F(0) against a Simpson-free check via the derivative
    TrigPoly f = a.antiderivative();
    CHECK(abs(f.derivative().evaluate(theta) - va) < tol);
  }
}
