#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "periodkit/series.hpp"

using namespace periodkit;

namespace {

Series<Rational> poly(std::vector<long> c, int order) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Series<Rational>(v, order);
}

Series<Rational> random_series(std::mt19937_64& rng, int order, bool zero_constant) {
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (auto& v : c) v = oracle::random_rational(rng, 3);
  if (zero_constant) c[0] = 0;
  return Series<Rational>(c, order);
}

QuadExt q(const char* a, const char* b) { return {parse_rational(a), parse_rational(b)}; }

}  // namespace

TEST_CASE("basic arithmetic") {
  CHECK(series_mul(poly({1, 1}, 5), poly({1, -1}, 5)) == poly({1, 0, -1}, 5));
  CHECK(series_mul(poly({1, 1, 1}, 5), poly({1}, 5)) == poly({1, 1, 1}, 5));
  CHECK(series_add(poly({1, 2}, 3), poly({0, 0, 0, 0, 7}, 6)) == poly({1, 2}, 3));
  CHECK(series_scale(poly({1, 2}, 3), Rational(1, 2)) == Series<Rational>({Rational(1, 2), Rational(1)}, 3));
  // ρ·cos θ squared
  Series<TrigPoly> r({TrigPoly(), TrigPoly::cos_term(1, Rational(1))}, 4, "rho");
  Series<TrigPoly> r2 = series_mul(r, r);
  CHECK(r2[2] == TrigPoly(Rational(1, 2)) + TrigPoly::cos_term(2, Rational(1, 2)));
  CHECK(r2[1].is_zero());
}

TEST_CASE("truncation bookkeeping") {
  auto a = poly({1, 2, 3}, 2);
  CHECK_THROWS_AS(a[3], PreconditionError);
  auto b = series_mul(a, poly({1, 1, 1, 1, 1}, 8));
  CHECK(b.order() == 2);
  CHECK(a.integrate().order() == 3);
  CHECK(a.derivative().order() == 1);
  CHECK(poly({0, 0, 5}, 4).unshift(2) == poly({5}, 2));
  CHECK_THROWS_AS(poly({1, 0, 5}, 4).unshift(1), InvariantError);
}

TEST_CASE("reciprocal") {
  auto g = series_reciprocal(poly({1, -1}, 6));
  CHECK(g == poly({1, 1, 1, 1, 1, 1, 1}, 6));
  CHECK_THROWS_AS(series_reciprocal(poly({0, 1}, 4)), PreconditionError);
  Series<TrigPoly> d({TrigPoly(Rational(1)), TrigPoly::cos_term(3, Rational(1))}, 3, "r");
  auto inv = series_reciprocal(d);
  TrigPoly b1 = TrigPoly::cos_term(3, Rational(1));
  CHECK(inv[1] == -b1);
  CHECK(inv[2] == b1 * b1);
  CHECK(inv[3] == -(b1 * b1 * b1));
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto a = random_series(rng, 8, false);
    if (sgn(a[0]) == 0) continue;
    CHECK(series_reciprocal(series_reciprocal(a)) == a);
    CHECK(series_mul(a, series_reciprocal(a)) == poly({1}, 8));
  }
}

TEST_CASE("powers by the Miller recurrence match repeated products") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 10; ++t) {
    auto a = random_series(rng, 7, false);
    if (sgn(a[0]) == 0) continue;
    auto direct = Series<Rational>::constant(Rational(1), 7);
    for (unsigned k = 1; k <= 5; ++k) {
      direct = series_mul(direct, a);
      CHECK(series_pow(a, k) == direct);
    }
  }
}

TEST_CASE("composition") {
  std::vector<Rational> top{Rational(2), Rational(0), Rational(5, 6), Rational(5, 9), Rational(385, 288)};
  Series<Rational> outer(top, 4, "rho");
  Series<QuadExt> inner({QuadExt(), QuadExt::sqrt2(), QuadExt(Rational(-2, 3)), QuadExt(Rational(0), Rational(5, 9)),
                         QuadExt(Rational(-32, 27))},
                        4, "z");
  auto c = series_compose(outer, inner);
  CHECK(c[0] == QuadExt(Rational(2)));
  CHECK(c[1].is_zero());
  CHECK(c[2] == QuadExt(Rational(5, 3)));
  CHECK(c[3].is_zero());
  CHECK(c[4] == QuadExt(Rational(385, 72)));
  auto f = poly({3, 1, 4, 1, 5}, 4);
  CHECK(series_compose(f, Series<Rational>::identity(4)) == f);
  CHECK(series_compose(poly({0, 0, 1}, 6), poly({0, 1, 1}, 6)) == poly({0, 0, 1, 2, 1}, 6));
  CHECK_THROWS_AS(series_compose(f, poly({1, 1}, 4)), PreconditionError);
}

TEST_CASE("property: composition associativity") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto f = random_series(rng, 10, false), g = random_series(rng, 10, true), k = random_series(rng, 10, true);
    CHECK(series_compose(series_compose(f, g), k) == series_compose(f, series_compose(g, k)));
  }
}

TEST_CASE("integration") {
  auto a = series_integrate(Series<Rational>({Rational(2), Rational(5, 3)}, 1));
  CHECK(a == Series<Rational>({Rational(0), Rational(2), Rational(5, 6)}, 2));
  CHECK(series_integrate(Series<Rational>(4)).is_zero());
  std::mt19937_64 rng(6);
  for (int i = 0; i < 10; ++i) {
    auto s = random_series(rng, 9, false);
    CHECK(s.integrate().derivative() == s);
  }
}

TEST_CASE("implicit branch") {
  auto s0 = implicit_branch(poly({0, 0, 1}, 9) * Rational(1, 2), 8);
  CHECK(s0 == Series<QuadExt>({QuadExt(), QuadExt::sqrt2()}, 8));
  Series<Rational> cubic({Rational(0), Rational(0), Rational(1, 2), Rational(1, 3)}, 8, "rho");
  auto s = implicit_branch(cubic, 7);
  CHECK(s[1] == q("0", "1"));
  CHECK(s[2] == q("-2/3", "0"));
  CHECK(s[3] == q("0", "5/9"));
  CHECK(s[4] == q("-32/27", "0"));
  CHECK(s[5] == q("0", "77/54"));
  CHECK(s[6] == q("-896/243", "0"));
  CHECK(s[7] == q("0", "2431/486"));
  // H(S(z)) = z²
  auto back = series_compose(cubic.truncate(7), s);
  CHECK(back == Series<QuadExt>({QuadExt(), QuadExt(), QuadExt(Rational(1))}, 7));
  CHECK_THROWS_AS(implicit_branch(poly({0, 0, 1}, 5), 4), PreconditionError);
  CHECK_THROWS_AS(implicit_branch(cubic, 8), PreconditionError);
}

TEST_CASE("property: branch alternation and round trip on random axes") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 10; ++t) {
    std::vector<Rational> c(12);
    c[2] = Rational(1, 2);
    for (int k = 3; k < 12; ++k) c[static_cast<size_t>(k)] = oracle::random_rational(rng, 1);
    Series<Rational> h(c, 11, "rho");
    auto s = implicit_branch(h, 10);
    for (int k = 1; k <= 10; ++k) {
      if (k % 2 == 1) CHECK(sgn(s[k].rational_part()) == 0);
      if (k % 2 == 0) CHECK(s[k].is_rational());
    }
    auto back = series_compose(h.truncate(10), s);
    CHECK(back == Series<QuadExt>({QuadExt(), QuadExt(), QuadExt(Rational(1))}, 10));
  }
}
