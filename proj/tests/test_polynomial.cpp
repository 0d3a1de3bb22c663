#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "x1lag/polynomial.hpp"
#include "x1lag/ratfun.hpp"
#include "x1lag/rational.hpp"
#include "x1lag/symbolic.hpp"

using namespace x1lag;

TEST_CASE("polynomial basics") {
    const RationalPoly p{Rational(1), Rational(0), Rational(3)};  // 1 + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p[0] == 1);
    CHECK(p[1] == 0);
    CHECK(p[5] == 0);
    CHECK(p.eval(Rational(2)) == 13);
    CHECK(p.derivative() == RationalPoly{Rational(0), Rational(6)});

    const RationalPoly z{Rational(0)};
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    CHECK((p + (-p)).is_zero());
}

TEST_CASE("polynomial multiplication and composition") {
    const RationalPoly a{Rational(1), Rational(1)};   // 1 + x
    const RationalPoly b{Rational(-1), Rational(1)};  // -1 + x
    CHECK(a * b == RationalPoly{Rational(-1), Rational(0), Rational(1)});
    // (1+x)^2 composed with x-1 gives x^2
    const RationalPoly sq = a * a;
    CHECK(sq.compose(b) == RationalPoly::monomial(2, Rational(1)));
}

TEST_CASE("linear synthetic division") {
    const RationalPoly p{Rational(-6), Rational(11), Rational(-6), Rational(1)};  // (x-1)(x-2)(x-3)
    auto [q, r] = p.divide_linear(Rational(2));
    CHECK(r == 0);
    CHECK(q.eval(Rational(1)) == 0);
    CHECK(q.eval(Rational(3)) == 0);
    auto [q2, r2] = p.divide_linear(Rational(5));
    CHECK(r2 == p.eval(Rational(5)));
    CHECK(q2.degree() == 2);
}

TEST_CASE("euclidean division and gcd") {
    const RationalPoly a{Rational(-1), Rational(0), Rational(0), Rational(0), Rational(1)};  // x^4-1
    const RationalPoly b{Rational(-1), Rational(0), Rational(1)};                            // x^2-1
    auto [q, r] = a.divide(b);
    CHECK(r.is_zero());
    CHECK(q == b + RationalPoly{Rational(2)});
    CHECK(a.divide_exact(b) == q);
    CHECK_THROWS_AS(b.divide_exact(RationalPoly{Rational(1), Rational(1)}), std::domain_error);
    CHECK(poly_gcd(a, b) == b);  // monic
}

TEST_CASE("taylor shift is involutive on random rational polynomials") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Rational> c;
        const int deg = 1 + trial % 9;
        for (int i = 0; i <= deg; ++i) c.push_back(rational(num(rng), den(rng)));
        const RationalPoly p(c);
        const Rational x0 = rational(num(rng), den(rng));
        const RationalPoly shifted = p.taylor_at(x0);
        CHECK(shifted.taylor_at(-x0) == p);
        // p(x) = sum shifted_k (x - x0)^k, checked at a sample point
        const Rational s = rational(num(rng), den(rng));
        Rational acc(0), pw(1);
        for (int k = 0; k <= shifted.degree(); ++k) {
            acc += shifted[k] * pw;
            pw *= s - x0;
        }
        CHECK(acc == p.eval(s));
    }
}

TEST_CASE("rational function arithmetic reduces") {
    const RationalPoly x{Rational(0), Rational(1)};
    const RationalFunction f(x * x - RationalPoly{Rational(1)}, x - RationalPoly{Rational(1)});
    CHECK(f.is_polynomial());
    CHECK(f.as_polynomial() == x + RationalPoly{Rational(1)});

    const RationalFunction g(RationalPoly{Rational(1)}, x);
    CHECK((g + g) == RationalFunction(RationalPoly{Rational(2)}, x));
    CHECK((g - g).is_zero());
    CHECK(g * g == RationalFunction(RationalPoly{Rational(1)}, x * x));
    CHECK(g / g == RationalFunction(Rational(1)));
    CHECK(g.eval(Rational(4)) == rational(1, 4));
    CHECK_THROWS_AS(g.eval(Rational(0)), std::domain_error);
    CHECK_THROWS_AS(g / RationalFunction(), std::domain_error);
}

TEST_CASE("symbolic moment module arithmetic") {
    const SymbolicMoment m0(RationalPoly{Rational(1)}, RationalPoly{Rational(-2)});  // G - 2T
    const SymbolicMoment m1(RationalPoly{}, RationalPoly{Rational(1)});              // T
    const RationalPoly alpha{Rational(0), Rational(1)};

    // 2 alpha T + alpha (G - 2T) = alpha G
    const SymbolicMoment m2 = (alpha * Rational(2)) * m1 + alpha * m0;
    CHECK(m2.is_gamma_multiple());
    CHECK(m2.gamma_coeff() == alpha);
    CHECK(m2.gamma1_factor() == RationalPoly{Rational(1)});
    CHECK_THROWS_AS(m0.gamma1_factor(), std::domain_error);

    auto [g, t] = m0.eval_coeffs(rational(1, 2));
    CHECK(g == 1);
    CHECK(t == -2);
}

TEST_CASE("symbolic moment string form") {
    const SymbolicMoment m(RationalPoly{Rational(0), Rational(2), Rational(4)},
                           RationalPoly{rational(-1, 2)});
    CHECK(m.str() == "(4*alpha^2 + 2*alpha)*G + (-1/2)*T");
    CHECK(poly_str(RationalPoly{Rational(2), Rational(5), Rational(4)}) ==
          "4*alpha^2 + 5*alpha + 2");
    CHECK(poly_str(RationalPoly{}) == "0");
}

TEST_CASE("exact binomials and rising factorials") {
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(3, 7) == 0);
    CHECK(factorial(6) == 720);
    CHECK(rising_factorial(rational(1, 2), 3) == rational(15, 8));  // 1/2 * 3/2 * 5/2
    CHECK(rising_factorial(Rational(5), 0) == 1);
}
