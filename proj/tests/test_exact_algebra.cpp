#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "periodkit/poly_parse.hpp"
#include "periodkit/ratfn.hpp"
#include "periodkit/resultant.hpp"
#include "periodkit/sturm.hpp"

using namespace periodkit;

namespace {

UniPoly U(const char* s) { return parse_unipoly(s, 'x'); }
BiPoly B(const char* s) { return parse_bipoly(s); }
Rational Q(const char* s) { return parse_rational(s); }

BiPoly cubic_curve() { return B("1/2 x + 1/2 z + 1/3 x^2 + 1/3 x z + 1/3 z^2"); }

bool same_up_to_constant(const UniPoly& a, const UniPoly& b) { return a.monic() == b.monic(); }

UniRatFn param_u() { return UniRatFn(parse_unipoly("-3s^2 + 6s", 's'), parse_unipoly("2s^2 - 4s + 8", 's')); }
UniRatFn param_v() { return UniRatFn(parse_unipoly("-3s", 's'), parse_unipoly("s^2 - 2s + 4", 's')); }

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(to_string(Rational(5, 3)) == "5/3");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK(exact_sqrt(Rational(9, 4)).value() == Rational(3, 2));
  CHECK_FALSE(exact_sqrt(Rational(3)).has_value());
  CHECK(to_decimal(Rational(1, 3), 10) == "0.3333333333");
  Rational s = simplest_between(Rational(1, 3), Rational(1, 2));
  CHECK(s == Rational(2, 5));
}

TEST_CASE("gcd examples") {
  CHECK(gcd(U("x^2 - 1"), U("x - 1")) == U("x - 1"));
  CHECK(gcd(U("x"), U("1")) == U("1"));
  UniPoly p = U("2x^2 + 2x - 1");
  CHECK(gcd(p, p.derivative()) == U("1"));
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(gcd(U("(x-1)^3 (x+2)"), U("(x-1)^2 (x-3)")) == U("(x-1)^2"));
  CHECK(squarefree_part(U("3 (x-1)^3 (x+2)^2")) == U("3 (x-1) (x+2)"));
}

TEST_CASE("bivariate gcd and division") {
  BiPoly a = B("(x - z)^2 (1 + x + z)"), b = B("(x - z) (2x + 4z + 3)");
  CHECK(gcd(a, b) == B("x - z"));
  CHECK(gcd(B("x^2 z - z"), B("x z + z")) == B("x z + z"));
  CHECK(gcd(B("2x + 2"), B("3x + 3")) == B("x + 1"));
  CHECK(a.exact_div(B("x - z")) == B("(x - z)(1 + x + z)"));
  CHECK_FALSE(b.divide(B("x + z")).has_value());
  CHECK(B("(x - z)") * cubic_curve() == B("1/2 x^2 + 1/3 x^3 - 1/2 z^2 - 1/3 z^3"));
}

TEST_CASE("resultants against the curve S") {
  BiPoly S = cubic_curve();
  CHECK(same_up_to_constant(resultant_in_second_var(B("2x + 4z + 3"), S), U("(2x + 3)(2x - 1)")));
  CHECK(same_up_to_constant(resultant_in_second_var(B("4x^2 + 6x z + 4z^2 + 7x + 7z + 3"), S),
                            U("4/9 x^4 + 8/9 x^3 - 2/9 x^2 - 2/3 x + 1/2")));
  CHECK(same_up_to_constant(resultant_in_second_var(B("1 + x + z"), S), U("2x^2 + 2x - 1")));
  CHECK_THROWS_AS(resultant_in_second_var(B("x + 1"), S), PreconditionError);
}

TEST_CASE("Sturm sequences") {
  auto s = sturm_sequence(U("x^2 - 1"));
  REQUIRE(s.size() == 3);
  CHECK(s[0] == U("x^2 - 1"));
  CHECK(s[1] == U("2x"));
  CHECK(s[2] == U("1"));
  auto t = sturm_sequence(U("x^2 + 1"));
  CHECK(t.back().degree() == 0);
  CHECK(sgn(t.back().lead()) < 0);
  CHECK(sturm_sequence(U("2x^2 + 2x - 1")).size() == 3);
}

TEST_CASE("root counting examples") {
  CHECK(count_real_roots(U("2x^2 + 2x - 1"), Rational(0), Rational(1, 2)).root_count == 1);
  CHECK(count_real_roots(U("x^2 + 1"), Rational(-10), Rational(10)).root_count == 0);
  UniPoly s8 = parse_unipoly("5s^8 - 55s^7 + 197s^6 - 11s^5 - 1323s^4 + 2835s^3 - 1296s^2 - 1728s + 1728", 's');
  CHECK(count_real_roots(s8, Rational(0), Rational(1)).root_count == 0);
  CHECK_THROWS_AS(count_real_roots(UniPoly(), Rational(0), Rational(1)), PreconditionError);
}

TEST_CASE("endpoint roots are perturbed and recorded") {
  // roots 0, 1/2, 1
  UniPoly p = U("x (2x - 1) (x - 1)");
  auto rep = count_real_roots(p, Rational(0), Rational(1));
  CHECK(rep.root_count == 1);
  CHECK(rep.lo_perturbed);
  CHECK(rep.hi_perturbed);
  CHECK(Rational(0) < rep.eval_lo.value);
  CHECK(rep.eval_hi.value < Rational(1));
  // a cluster next to the endpoint is not skipped
  UniPoly q = U("x (1000x - 1)");
  CHECK(count_real_roots(q, Rational(0), Rational(1)).root_count == 1);
  CHECK(count_real_roots(U("x^2 - 2"), Bound::neg_inf(), Bound::pos_inf()).root_count == 2);
  CHECK(count_real_roots(U("x^3 - 2"), Bound::neg_inf(), Bound::at(Rational(0))).root_count == 0);
}

TEST_CASE("root isolation and rational roots") {
  UniPoly p = U("(x - 1/2)(x + 3)(x^2 - 2)(3x - 1)");
  auto iv = isolate_real_roots(p, Bound::neg_inf(), Bound::pos_inf());
  CHECK(iv.size() == 5);
  auto rr = rational_roots(p);
  REQUIRE(rr.size() == 3);
  CHECK(rr[0] == Rational(-3));
  CHECK(rr[1] == Rational(1, 3));
  CHECK(rr[2] == Rational(1, 2));
}

TEST_CASE("substitution of the rational parameterization") {
  BiPoly S = cubic_curve();
  CHECK(substitute(S, param_u(), param_v()).is_zero());
  UniRatFn m = substitute(B("1 + x + z"), param_u(), param_v());
  CHECK(m == UniRatFn(parse_unipoly("-(s^2 + 4s - 8)", 's'), parse_unipoly("2(s^2 - 2s + 4)", 's')));
  UniRatFn xz = substitute(B("x z"), param_u(), param_v());
  CHECK(xz == UniRatFn(parse_unipoly("9s^2 (s - 2)", 's'), parse_unipoly("2 (s^2 - 2s + 4)^2", 's')));
}

TEST_CASE("polynomial parser") {
  CHECK(B("3/4 * x^2 * z - 2x z^3") == BiPoly::term(Q("3/4"), 2, 1) - BiPoly::term(Q("2"), 1, 3));
  CHECK(U("2x^2+2x-1").to_string() == "2*x^2 + 2*x - 1");
  CHECK_THROWS_AS(B("x + y"), ParseError);
  CHECK_THROWS_AS(B("x +"), ParseError);
  try {
    (void)B("x + 3/0");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() > 0);
  }
  CHECK(parse_unipoly("h^2 + 1").var() == 'h');
}

TEST_CASE("property: Sturm count agrees with a Descartes bisection isolator") {
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<int> deg(1, 12);
  int compared = 0;
  while (compared < 200) {
    int d = deg(rng);
    std::vector<Rational> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = oracle::random_rational(rng, 10);
    if (sgn(c.back()) == 0) continue;
    UniPoly p(c);
    Rational a = oracle::random_rational(rng, 10), b = oracle::random_rational(rng, 10);
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    UniPoly sq = squarefree_part(p);
    if (sgn(sq(a)) == 0 || sgn(sq(b)) == 0) continue;
    int expect = oracle::descartes_count(sq.coeffs(), a, b);
    CHECK(count_real_roots(p, a, b).root_count == expect);
    ++compared;
  }
}

TEST_CASE("property: planted roots are counted exactly") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Rational> roots;
    UniPoly p(Rational(1));
    int nroots = static_cast<int>(rng() % 5) + 1;
    for (int i = 0; i < nroots; ++i) {
      Rational r = oracle::random_rational(rng, 5, 7);
      p = p * UniPoly::linear_root(r) * (rng() % 3 == 0 ? UniPoly::linear_root(r) : UniPoly(Rational(1)));
      roots.push_back(r);
    }
    // an irreducible positive quadratic factor adds no real roots
    p = p * U("x^2 + x + 1");
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    Rational a = oracle::random_rational(rng, 6), b = a + abs(oracle::random_rational(rng, 3)) + Rational(1, 5);
    int expect = 0;
    for (const auto& r : roots)
      if (a < r && r < b) ++expect;
    CHECK(count_real_roots(p, a, b).root_count == expect);
  }
}

TEST_CASE("property: interval additivity and scaling invariance") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> c(static_cast<size_t>(rng() % 9) + 2);
    for (auto& v : c) v = oracle::random_rational(rng, 10);
    if (sgn(c.back()) == 0) continue;
    UniPoly p(c);
    UniPoly sq = squarefree_part(p);
    Rational a(-11), mid = oracle::random_rational(rng, 10), b(11);
    if (sgn(sq(mid)) == 0) continue;
    int whole = count_real_roots(p, a, b).root_count;
    CHECK(count_real_roots(p, a, mid).root_count + count_real_roots(p, mid, b).root_count == whole);
    Rational k = oracle::random_rational(rng, 5);
    if (sgn(k) != 0) CHECK(count_real_roots(p * k, a, b).root_count == whole);
  }
}

TEST_CASE("property: resultant symmetry and shifted self-resultant") {
  std::mt19937_64 rng(5);
  auto rnd_bi = [&](int dx, int dz) {
    BiPoly p('x', 'z');
    for (int i = 0; i <= dx; ++i)
      for (int j = 0; j <= dz; ++j)
        if (rng() % 2 == 0 || j == dz) p += BiPoly::term(oracle::random_rational(rng, 4) + (j == dz && i == 0 ? 5 : 0), i, j);
    return p;
  };
  for (int trial = 0; trial < 20; ++trial) {
    BiPoly p = rnd_bi(2, 2), q = rnd_bi(1, 3);
    if (p.degree_second() < 1 || q.degree_second() < 1) continue;
    int m = p.degree_second(), n = q.degree_second();
    UniPoly r1 = resultant_in_second_var(p, q), r2 = resultant_in_second_var(q, p);
    CHECK(r1 == r2 * Rational((m * n) % 2 == 0 ? 1 : -1));
    // p(x, z + 1) shares no root with p(x, z) for generic p
    BiPoly shifted('x', 'z');
    for (const auto& [mono, c] : p.terms())
      shifted += BiPoly::term(c, mono.first, 0) * (BiPoly::second_var() + BiPoly(Rational(1), {'x', 'z'})).pow(static_cast<unsigned>(mono.second));
    CHECK_FALSE(resultant_in_second_var(p, shifted).is_zero());
  }
}

TEST_CASE("property: rational function reduction") {
  BiPoly num = B("(x - z)^3 (1 + x + z)"), den = B("-(x - z) (2x + 4z + 3) x");
  BiRatFn f(num, den);
  CHECK(f.den() == B("2x^2 + 4x z + 3x"));
  CHECK(BiRatFn(f.num(), f.den()) == f);
  BiRatFn g(B("2") * num * B("x + 1"), B("2") * den * B("x + 1"));
  CHECK(g == f);
  CHECK(f.num() * den == num * f.den());
  BiRatFn h = f + BiRatFn(B("1"), B("x"));
  CHECK(h - f == BiRatFn(B("1"), B("x")));
}
