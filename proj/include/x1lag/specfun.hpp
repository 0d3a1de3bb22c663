#ifndef X1LAG_SPECFUN_HPP
#define X1LAG_SPECFUN_HPP

namespace x1lag::specfun {

// Gamma function for x > 0 (Lanczos). Throws std::domain_error for x <= 0 and
// std::overflow_error when the value exceeds double range.
double gamma(double x);

// Generalized exponential integral E_a(x) = int_1^inf e^{-xt} t^{-a} dt, x > 0.
// Continued fraction for x >= 1, series for x < 1 (switch in Precision).
double exp_integral(double a, double x);

// Upper incomplete gamma Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt for x > 0,
// any real a; evaluated as x^a E_{1-a}(x).
double upper_incomplete_gamma(double a, double x);

// int_0^inf e^{-x} x^beta / (x + alpha) dx = e^alpha E_{1+beta}(alpha) Gamma(1+beta)
// for alpha > 0, beta > -1.
double weighted_beta_integral(double alpha, double beta);

// Extended-precision internals, exposed for compositions that would lose
// accuracy through intermediate doubles.
long double gamma_ld(long double x);
long double exp_integral_ld(long double a, long double x);

} // namespace x1lag::specfun

#endif
