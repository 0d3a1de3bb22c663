#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "quad_oracle.hpp"
#include "x1lag/precision.hpp"
#include "x1lag/specfun.hpp"

using namespace x1lag;
using doctest::Approx;

namespace {
double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }
} // namespace

TEST_CASE("gamma at classical points") {
    CHECK(specfun::gamma(1.0) == Approx(1.0).epsilon(1e-14));
    CHECK(specfun::gamma(5.0) == Approx(24.0).epsilon(1e-14));
    CHECK(specfun::gamma(0.5) == Approx(1.7724538509055160273).epsilon(1e-13));
}

TEST_CASE("gamma functional equation on a grid") {
    for (double x = 0.1; x <= 20.0001; x += 0.3) {
        CHECK(rel(specfun::gamma(x + 1.0), x * specfun::gamma(x)) <= precision().gamma_rel);
    }
}

TEST_CASE("gamma domain and overflow errors") {
    CHECK_THROWS_AS(specfun::gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma(-2.5), std::domain_error);
    CHECK_THROWS_AS(specfun::gamma(180.0), std::overflow_error);
    CHECK(std::isfinite(specfun::gamma(170.0)));
}

TEST_CASE("exponential integral order zero has the closed form") {
    for (double x : {0.5, 1.0, 2.0})
        CHECK(rel(specfun::exp_integral(0.0, x), std::exp(-x) / x) <= 1e-13);
}

TEST_CASE("exponential integral recurrence identity at the spec points") {
    for (auto [a, x] : {std::pair{1.5, 1.0}, {2.0, 0.7}, {3.2, 2.5}}) {
        const double r = (a - 1.0) * specfun::exp_integral(a, x) - std::exp(-x) +
                         x * specfun::exp_integral(a - 1.0, x);
        CHECK(std::abs(r) <= 1e-11 * std::exp(-x));
    }
}

TEST_CASE("exponential integral recurrence residual over the grid") {
    for (double a = 0.5; a <= 5.001; a += 0.5)
        for (double x = 0.1; x <= 5.001; x += 0.35) {
            const double r = (a - 1.0) * specfun::exp_integral(a, x) - std::exp(-x) +
                             x * specfun::exp_integral(a - 1.0, x);
            CHECK(std::abs(r) <= precision().exp_integral_rel * std::exp(-x));
        }
}

TEST_CASE("exponential integral against brute-force quadrature") {
    // E_1(1) = int_1^inf e^-t / t dt
    const double oracle = testoracle::integrate_to_inf([](double t) { return std::exp(-t) / t; }, 1.0);
    CHECK(rel(specfun::exp_integral(1.0, 1.0), oracle) <= 1e-10);
    CHECK(rel(specfun::exp_integral(1.0, 1.0), 0.21938393439552027368) <= 1e-11);
}

TEST_CASE("exponential integral across the series/cf switch and near-integer orders") {
    // frozen by high-precision evaluation of the defining integral
    struct Case {
        double a, x, want;
    };
    const Case cases[] = {
        {1.5, 0.5, 0.417681828578563951138},    {2.0, 0.5, 0.32664386232455301773},
        {2.00001, 0.5, 0.326642387267644540642}, {1.99999, 0.5, 0.326645337392959567343},
        {3.0000001, 0.9, 0.12570297490271418546}, {0.5, 0.25, 1.69978367615986225957},
        {1.0000001, 0.1, 1.82292373720454985213}, {4.5, 0.3, 0.190046594637512655273},
        {2.5, 1.0, 0.126487819593254420935},     {5.0, 2.0, 0.0213224002023230220537},
        {10.25, 0.6, 0.0553422739642470619623},  {7.0, 0.8, 0.0648276388947177161543},
    };
    for (const auto& c : cases) CHECK(rel(specfun::exp_integral(c.a, c.x), c.want) <= 1e-11);
}

TEST_CASE("exponential integral domain error") {
    CHECK_THROWS_AS(specfun::exp_integral(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::exp_integral(1.0, -2.0), std::domain_error);
}

TEST_CASE("incomplete gamma at order one is the exponential") {
    for (double x : {0.5, 1.0, 3.0})
        CHECK(rel(specfun::upper_incomplete_gamma(1.0, x), std::exp(-x)) <= 1e-12);
}

TEST_CASE("incomplete gamma tends to gamma as x -> 0+") {
    CHECK(rel(specfun::upper_incomplete_gamma(2.0, 1e-8), specfun::gamma(2.0)) <= 1e-6);
}

TEST_CASE("incomplete gamma at negative order against brute-force quadrature") {
    const double oracle = testoracle::integrate_to_inf(
        [](double t) { return std::pow(t, -2.5) * std::exp(-t); }, 1.5);
    CHECK(rel(specfun::upper_incomplete_gamma(-1.5, 1.5), oracle) <= 1e-9);
    CHECK(rel(specfun::upper_incomplete_gamma(-1.5, 1.5), 0.034834450616085086418) <= 1e-11);
}

TEST_CASE("bridge identity between the two function families") {
    for (double a = 0.5; a <= 5.001; a += 0.5)
        for (double x = 0.1; x <= 5.001; x += 0.35) {
            const double lhs = specfun::exp_integral(a, x);
            const double rhs = std::pow(x, a - 1.0) * specfun::upper_incomplete_gamma(1.0 - a, x);
            CHECK(rel(lhs, rhs) <= precision().bridge_rel);
        }
}

TEST_CASE("incomplete gamma domain error") {
    CHECK_THROWS_AS(specfun::upper_incomplete_gamma(2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(specfun::upper_incomplete_gamma(-1.0, -1.0), std::domain_error);
}

TEST_CASE("weighted beta integral matches direct quadrature") {
    // int_0^inf e^-x x^beta / (x+alpha) dx
    auto direct = [](double alpha, double beta) {
        return testoracle::integrate_to_inf(
            [=](double t) { return std::exp(-t) * std::pow(t, beta) / (t + alpha); }, 0.0);
    };
    CHECK(rel(specfun::weighted_beta_integral(1.0, 0.0), direct(1.0, 0.0)) <= 1e-9);
    CHECK(rel(specfun::weighted_beta_integral(1.0, 0.0), 0.59634736232319407434) <= 1e-11);
    CHECK(rel(specfun::weighted_beta_integral(2.0, 1.0), direct(2.0, 1.0)) <= 1e-9);
    CHECK(rel(specfun::weighted_beta_integral(2.0, 1.0), 0.27734276622355483061) <= 1e-11);
    CHECK(rel(specfun::weighted_beta_integral(0.5, 0.25), 0.717877254772732474132) <= 1e-10);
}

TEST_CASE("weighted beta integral domain errors") {
    CHECK_THROWS_AS(specfun::weighted_beta_integral(0.0, 0.5), std::domain_error);
    CHECK_THROWS_AS(specfun::weighted_beta_integral(1.0, -1.0), std::domain_error);
}
