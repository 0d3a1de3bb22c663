#include "x1lag/specfun.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "x1lag/precision.hpp"

namespace x1lag {

Precision& precision() {
    static Precision p;
    return p;
}

} // namespace x1lag

namespace x1lag::specfun {

namespace {

constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Lanczos g = 7, 9 terms; ~1e-15 relative over the positive axis.
constexpr long double kLanczosG = 7.0L;
constexpr long double kLanczos[9] = {
    0.99999999999980993L,     676.5203681218851L,     -1259.1392167224028L,
    771.32342877765313L,      -176.61502916214059L,   12.507343278686905L,
    -0.13857109526572012L,    9.9843695780195716e-6L, 1.5056327351493116e-7L,
};

long double lanczos_gamma_positive(long double x) {
    // valid for x >= 0.5
    long double acc = kLanczos[0];
    for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (x - 1.0L + i);
    const long double t = x + kLanczosG - 0.5L;
    return std::sqrt(2.0L * kPi) * std::pow(t, x - 0.5L) * std::exp(-t) * acc;
}

// Gamma on the whole real axis except the poles; reflection below 0.5.
long double gamma_any(long double x) {
    if (x >= 0.5L) return lanczos_gamma_positive(x);
    const long double s = std::sin(kPi * x);
    if (s == 0.0L) return std::numeric_limits<long double>::quiet_NaN();  // pole
    return kPi / (s * lanczos_gamma_positive(1.0L - x));
}

// Harmonic-type sums for polygamma at positive integers.
long double digamma_int(int n) {
    constexpr long double kEulerGamma = 0.57721566490153286060651209008240243L;
    long double h = 0.0L;
    for (int j = 1; j < n; ++j) h += 1.0L / j;
    return -kEulerGamma + h;
}
long double trigamma_int(int n) {
    constexpr long double kZeta2 = 1.64493406684822643647241516664602519L;
    long double s = 0.0L;
    for (int j = 1; j < n; ++j) s += 1.0L / (static_cast<long double>(j) * j);
    return kZeta2 - s;
}
long double tetragamma_int(int n) {  // psi''(n)
    constexpr long double kZeta3 = 1.20205690315959428539973816151144999L;
    long double s = 0.0L;
    for (int j = 1; j < n; ++j) s += 1.0L / (static_cast<long double>(j) * j * j);
    return -2.0L * (kZeta3 - s);
}
long double pentagamma_int(int n) {  // psi'''(n)
    constexpr long double kZeta4 = 1.08232323371113819151600369654116790L;
    long double s = 0.0L;
    for (int j = 1; j < n; ++j) s += 1.0L / (static_cast<long double>(j) * j * j * j);
    return 6.0L * (kZeta4 - s);
}

// Modified Lentz continued fraction for E_a(x), reliable for x >= ~1:
//   E_a(x) = e^{-x} / (x + a - 1*a/(x + a + 2 - 2(a+1)/(x + a + 4 - ...)))
long double exp_integral_cf(long double a, long double x) {
    const Precision& cfg = precision();
    constexpr long double tiny = 1e-4000L;
    long double b = x + a;
    long double c = 1.0L / tiny;
    long double d = (b == 0.0L) ? 1.0L / tiny : 1.0L / b;
    long double h = d;
    for (int i = 1; i <= cfg.cf_max_iter; ++i) {
        const long double an = -static_cast<long double>(i) * (a - 1.0L + i);
        b += 2.0L;
        d = an * d + b;
        if (d == 0.0L) d = tiny;
        c = b + an / c;
        if (c == 0.0L) c = tiny;
        d = 1.0L / d;
        const long double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0L) <= 1e-19L) return h * std::exp(-x);
    }
    throw std::runtime_error("exp_integral: continued fraction did not converge");
}

// Series for x < 1:  E_a(x) = Gamma(1-a) x^{a-1} - sum_m (-x)^m / (m! (m+1-a)).
// Near positive-integer a the two singular pieces are combined through
// expm1 of a log expansion to dodge the cancellation.
long double exp_integral_series(long double a, long double x) {
    const Precision& cfg = precision();
    const int n = static_cast<int>(std::lround(static_cast<double>(a)));
    const long double eps = a - n;
    const bool near_int = (n >= 1) && (std::fabs(eps) < cfg.near_integer_eps);

    long double singular;
    int skip_m = -1;
    if (near_int) {
        skip_m = n - 1;
        const long double L = std::log(x);
        // F(eps) = (pi eps / sin(pi eps)) * x^eps * Gamma(n)/Gamma(n+eps);
        // log(pi z / sin(pi z)) = zeta(2) z^2 + zeta(4) z^4 / 2 + O(z^6),
        // log Gamma(n+eps) - log Gamma(n) = eps psi + eps^2 psi'/2 + eps^3 psi''/6 + eps^4 psi'''/24 + ...
        constexpr long double kZeta2 = 1.64493406684822643647241516664602519L;
        constexpr long double kZeta4 = 1.08232323371113819151600369654116790L;
        const long double e2 = eps * eps;
        long double logF = eps * (L - digamma_int(n));
        logF += e2 * (kZeta2 - trigamma_int(n) / 2.0L);
        logF -= e2 * eps * tetragamma_int(n) / 6.0L;
        logF += e2 * e2 * (kZeta4 / 2.0L - pentagamma_int(n) / 24.0L);
        long double factor;  // (F(eps)-1)/eps, continuous at eps = 0
        if (eps == 0.0L)
            factor = L - digamma_int(n);
        else
            factor = std::expm1(logF) / eps;
        long double pref = std::pow(x, n - 1) / std::tgamma(static_cast<long double>(n));
        if (n % 2 != 0) pref = -pref;  // (-1)^n
        singular = pref * factor;
    } else {
        singular = gamma_any(1.0L - a) * std::pow(x, a - 1.0L);
    }

    long double sum = 0.0L;
    long double term = 1.0L;  // (-x)^m / m!
    for (int m = 0; m <= cfg.series_max_terms; ++m) {
        if (m != skip_m) {
            const long double piece = term / (m + 1.0L - a);
            sum += piece;
            if (m > skip_m + 2 && m > 2 && std::fabs(piece) < 1e-22L * (std::fabs(sum) + 1e-300L))
                break;
        }
        term *= -x / (m + 1.0L);
    }
    return singular - sum;
}

} // namespace

long double gamma_ld(long double x) {
    if (!(x > 0.0L)) throw std::domain_error("gamma: requires x > 0");
    if (x >= 0.5L) return lanczos_gamma_positive(x);
    return kPi / (std::sin(kPi * x) * lanczos_gamma_positive(1.0L - x));
}

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("gamma: requires x > 0, got " + std::to_string(x));
    const long double v = gamma_ld(x);
    if (v > static_cast<long double>(std::numeric_limits<double>::max()))
        throw std::overflow_error("gamma: value exceeds double range at x = " + std::to_string(x));
    return static_cast<double>(v);
}

long double exp_integral_ld(long double a, long double x) {
    if (!(x > 0.0L)) throw std::domain_error("exp_integral: requires x > 0");
    if (x >= precision().series_cf_switch_x) return exp_integral_cf(a, x);
    return exp_integral_series(a, x);
}

double exp_integral(double a, double x) {
    return static_cast<double>(exp_integral_ld(a, x));
}

double upper_incomplete_gamma(double a, double x) {
    if (!(x > 0.0)) throw std::domain_error("upper_incomplete_gamma: requires x > 0");
    const long double la = a, lx = x;
    // Gamma(a, x) = x^a E_{1-a}(x)
    const long double v = std::pow(lx, la) * exp_integral_ld(1.0L - la, lx);
    return static_cast<double>(v);
}

double weighted_beta_integral(double alpha, double beta) {
    if (!(alpha > 0.0)) throw std::domain_error("weighted_beta_integral: requires alpha > 0");
    if (!(beta > -1.0)) throw std::domain_error("weighted_beta_integral: requires beta > -1");
    const long double a = alpha, b = beta;
    return static_cast<double>(std::exp(a) * exp_integral_ld(1.0L + b, a) * gamma_ld(1.0L + b));
}

} // namespace x1lag::specfun
