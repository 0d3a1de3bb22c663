#ifndef X1LAG_POLYNOMIAL_HPP
#define X1LAG_POLYNOMIAL_HPP

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "x1lag/rational.hpp"

namespace x1lag {

template <class T>
struct is_exact_scalar {
    static constexpr bool value = true;
};
template <>
struct is_exact_scalar<double> {
    static constexpr bool value = false;
};
template <>
struct is_exact_scalar<long double> {
    static constexpr bool value = false;
};

// Dense univariate polynomial, coefficients lowest degree first, no trailing
// zero (the zero polynomial has an empty coefficient list and degree -1).
template <class T>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(long v) : c_{T(v)} { trim(); }
    Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }
    explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
    static Polynomial identity() { return Polynomial{T(0), T(1)}; }  // x
    static Polynomial monomial(int k, const T& coeff) {
        std::vector<T> c(static_cast<std::size_t>(k) + 1, T(0));
        c.back() = coeff;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<T>& coeffs() const { return c_; }

    // Coefficient of x^k; zero outside the stored range.
    T operator[](int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return T(0);
        return c_[static_cast<std::size_t>(k)];
    }

    T leading() const { return c_.empty() ? T(0) : c_.back(); }

    Polynomial& operator+=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    Polynomial& operator*=(const T& s) {
        if (s == T(0)) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        trim();
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (auto& v : r.c_) v = -v;
        return r;
    }
    friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
    friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial();
        std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(r));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial derivative() const {
        if (c_.size() <= 1) return Polynomial();
        std::vector<T> r(c_.size() - 1);
        for (std::size_t k = 1; k < c_.size(); ++k) r[k - 1] = c_[k] * T(static_cast<long>(k));
        return Polynomial(std::move(r));
    }

    // Horner evaluation in the scalar type U (U must convert from T).
    template <class U>
    U eval(const U& x) const {
        U acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + scalar_as<U>(c_[i]);
        return acc;
    }

    // p(q(x)), Horner over polynomials.
    Polynomial compose(const Polynomial& q) const {
        Polynomial acc;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * q + constant(c_[i]);
        return acc;
    }

    // Coefficients of p around x0: p(x) = sum r_k (x - x0)^k, by repeated
    // synthetic division (exact for exact scalar types).
    Polynomial taylor_at(const T& x0) const {
        std::vector<T> a = c_;
        const int n = degree();
        for (int k = 0; k < n; ++k)
            for (int i = n - 1; i >= k; --i)
                a[static_cast<std::size_t>(i)] += x0 * a[static_cast<std::size_t>(i) + 1];
        return Polynomial(std::move(a));
    }

    // Quotient and remainder of division by the linear factor (x - root).
    std::pair<Polynomial, T> divide_linear(const T& root) const {
        if (is_zero()) return {Polynomial(), T(0)};
        std::vector<T> q(c_.size() - 1, T(0));
        T carry = c_.back();
        for (std::size_t i = c_.size() - 1; i-- > 0;) {
            q[i] = carry;
            carry = c_[i] + carry * root;
        }
        return {Polynomial(std::move(q)), carry};
    }

    // Euclidean division (field coefficients): returns {quotient, remainder}.
    std::pair<Polynomial, Polynomial> divide(const Polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        Polynomial r = *this;
        std::vector<T> q(degree() >= d.degree() ? static_cast<std::size_t>(degree() - d.degree()) + 1 : 0,
                         T(0));
        while (!r.is_zero() && r.degree() >= d.degree()) {
            const int shift = r.degree() - d.degree();
            T factor = r.leading() / d.leading();
            q[static_cast<std::size_t>(shift)] = factor;
            for (int i = 0; i <= d.degree(); ++i) {
                r.c_[static_cast<std::size_t>(i + shift)] -= factor * d[i];
            }
            r.trim();
        }
        return {Polynomial(std::move(q)), r};
    }

    // Exact division: throws if the remainder is nonzero.
    Polynomial divide_exact(const Polynomial& d) const {
        auto [q, r] = divide(d);
        if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
        return q;
    }

private:
    template <class U, class S>
    static U scalar_as(const S& v) {
        if constexpr (std::is_same_v<U, S>) {
            return v;
        } else if constexpr (std::is_same_v<S, Rational> && std::is_floating_point_v<U>) {
            return U(v.get_d());
        } else {
            return U(v);
        }
    }

    void trim() {
        while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
    }

    std::vector<T> c_;
};

using RationalPoly = Polynomial<Rational>;

// Largest coefficient magnitude (float polynomials).
inline double max_abs_coeff(const Polynomial<double>& p) {
    double m = 0.0;
    for (double c : p.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

inline double sum_abs_coeff(const Polynomial<double>& p) {
    double s = 0.0;
    for (double c : p.coeffs()) s += std::abs(c);
    return s;
}

// Monic GCD over a field scalar type, Euclid's algorithm.
template <class T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divide(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    T lead = a.leading();
    std::vector<T> c = a.coeffs();
    for (auto& v : c) v = v / lead;
    return Polynomial<T>(std::move(c));
}

} // namespace x1lag

#endif
