#ifndef X1LAG_RATFUN_HPP
#define X1LAG_RATFUN_HPP

#include <stdexcept>
#include <utility>

#include "x1lag/polynomial.hpp"
#include "x1lag/rational.hpp"

namespace x1lag {

// Element of Q(alpha): reduced quotient of polynomials, monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_{Rational(1)} {}
    RationalFunction(long v) : num_{Rational(v)}, den_{Rational(1)} {}
    RationalFunction(const Rational& r) : num_{r}, den_{Rational(1)} {}
    RationalFunction(RationalPoly p) : num_(std::move(p)), den_{Rational(1)} {}
    RationalFunction(RationalPoly num, RationalPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        reduce();
    }

    const RationalPoly& num() const { return num_; }
    const RationalPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    // Exact polynomial content; throws if the denominator is nontrivial.
    RationalPoly as_polynomial() const {
        if (!is_polynomial()) throw std::domain_error("rational function is not a polynomial");
        return num_ * (Rational(1) / den_[0]);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
    RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw std::domain_error("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = RationalPoly{Rational(1)};
            return;
        }
        RationalPoly g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divide_exact(g);
            den_ = den_.divide_exact(g);
        }
        Rational lead = den_.leading();
        num_ *= Rational(1) / lead;
        den_ *= Rational(1) / lead;
    }

    RationalPoly num_;
    RationalPoly den_;
};

} // namespace x1lag

#endif
