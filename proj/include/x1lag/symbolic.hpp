#ifndef X1LAG_SYMBOLIC_HPP
#define X1LAG_SYMBOLIC_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "x1lag/polynomial.hpp"
#include "x1lag/rational.hpp"

namespace x1lag {

// Exact element a(alpha)*G + b(alpha)*T of the rank-2 module over Q[alpha]
// spanned by the formal symbols G (the value Gamma(alpha)) and T (the first
// adjusted moment). The whole adjusted sequence lives here: the recursion is
// linear with Q[alpha] coefficients and both seeds lie in the span.
class SymbolicMoment {
public:
    SymbolicMoment() = default;
    SymbolicMoment(RationalPoly gamma_coeff, RationalPoly t_coeff)
        : a_(std::move(gamma_coeff)), b_(std::move(t_coeff)) {}

    static SymbolicMoment gamma_multiple(RationalPoly p) { return {std::move(p), {}}; }
    static SymbolicMoment t_multiple(RationalPoly p) { return {{}, std::move(p)}; }

    const RationalPoly& gamma_coeff() const { return a_; }
    const RationalPoly& t_coeff() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_gamma_multiple() const { return b_.is_zero(); }

    // For adjusted moments of index >= 2: the value is Gamma(alpha+1) * p(alpha),
    // i.e. b = 0 and a divisible by alpha. Returns p; throws otherwise.
    RationalPoly gamma1_factor() const {
        if (!b_.is_zero()) throw std::domain_error("moment has a T component");
        auto [q, r] = a_.divide_linear(Rational(0));  // divide by alpha
        if (!(r == Rational(0))) throw std::domain_error("gamma coefficient not divisible by alpha");
        return q;
    }

    friend SymbolicMoment operator+(const SymbolicMoment& x, const SymbolicMoment& y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend SymbolicMoment operator-(const SymbolicMoment& x, const SymbolicMoment& y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend SymbolicMoment operator*(const RationalPoly& p, const SymbolicMoment& m) {
        return {p * m.a_, p * m.b_};
    }
    friend SymbolicMoment operator*(const Rational& s, const SymbolicMoment& m) {
        return {m.a_ * s, m.b_ * s};
    }
    friend bool operator==(const SymbolicMoment& x, const SymbolicMoment& y) {
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend bool operator!=(const SymbolicMoment& x, const SymbolicMoment& y) { return !(x == y); }

    // Exact value at a fixed rational alpha, as the pair (coefficient of G,
    // coefficient of T).
    std::pair<Rational, Rational> eval_coeffs(const Rational& alpha) const {
        return {a_.eval(alpha), b_.eval(alpha)};
    }

    std::string str() const;  // "(a_poly)*G + (b_poly)*T"

private:
    RationalPoly a_;
    RationalPoly b_;
};

// "4*alpha^2 + 5*alpha + 2" style, highest degree first; "0" for the zero poly.
std::string poly_str(const RationalPoly& p, const std::string& var = "alpha");

} // namespace x1lag

#endif
