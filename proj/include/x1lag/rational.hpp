#ifndef X1LAG_RATIONAL_HPP
#define X1LAG_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace x1lag {

// Arbitrary-precision rational. mpq_class keeps values canonical under
// arithmetic; explicit construction from num/den must canonicalize.
using Rational = mpq_class;

inline Rational rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline double to_double(const Rational& r) { return r.get_d(); }

// "p/q", or just "p" when the denominator is 1.
inline std::string rational_str(const Rational& r) { return r.get_str(); }

inline Rational binomial(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

inline Rational factorial(unsigned long n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

// Rising factorial x(x+1)...(x+n-1), empty product = 1.
inline Rational rising_factorial(const Rational& x, unsigned long n) {
    Rational p(1);
    for (unsigned long i = 0; i < n; ++i) p *= x + Rational(static_cast<long>(i));
    return p;
}

} // namespace x1lag

#endif
