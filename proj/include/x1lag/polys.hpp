#ifndef X1LAG_POLYS_HPP
#define X1LAG_POLYS_HPP

#include <Eigen/Dense>

#include <cmath>
#include <string>

#include "x1lag/errors.hpp"
#include "x1lag/moments.hpp"
#include "x1lag/polynomial.hpp"
#include "x1lag/precision.hpp"

namespace x1lag {

enum class MatrixFlavor { A, A_tilde };
enum class NormalizationKind { literature, raw };

struct Normalization {
    NormalizationKind kind = NormalizationKind::literature;
    double K = 0;  // actual constant used in the rhs
};

// (n+1) x (n+1) moment matrix with rhs b = (0, ..., 0, K)^T.
struct MomentMatrix {
    int n = 0;
    double alpha = 0;
    MatrixFlavor flavor = MatrixFlavor::A_tilde;
    Eigen::MatrixXd entries;
    Eigen::VectorXd rhs;  // built with K = 1; solve_polynomial rescales
};

struct SolveInfo {
    double residual_norm = 0;  // |A c - b|_inf after refinement
    double rcond = 0;
    double det = 0;
};

// Constructed polynomial: degree n, both bases, normalization metadata.
struct X1Polynomial {
    int n = 0;
    double alpha = 0;
    Polynomial<double> in_x;     // monomial coefficients c_{n0..nn}
    Polynomial<double> shifted;  // coefficients a_{n0..nn} in powers of (x+alpha)
    Normalization normalization;

    double leading_coefficient() const { return in_x.leading(); }
};

// K~_n = (-1)^n (alpha+n) Gamma(alpha+n-1): reproduces the literature
// normalization with leading coefficient (-1)^n / (n-1)!.
double literature_normalization(int n, double alpha);

// Matrix in the monomial basis from canonical moments (needs indices 0..2n).
MomentMatrix build_matrix_a(int n, const MomentTable& canonical, double alpha);

// Matrix in the shifted basis from adjusted moments (needs indices 0..2n).
MomentMatrix build_matrix_a_tilde(int n, const MomentTable& adjusted);

// Partial-pivot LU with long-double iterative refinement. K must be nonzero.
X1Polynomial solve_polynomial(const MomentMatrix& m, double K, SolveInfo* info = nullptr);

// Convenience: build moment tables, assemble, solve. K_raw ignored unless
// kind == raw.
X1Polynomial build_x1(int n, double alpha, MatrixFlavor flavor,
                      NormalizationKind kind = NormalizationKind::literature, double K_raw = 1.0);

// --- basis conversion --------------------------------------------------------

// p given by monomial coefficients -> coefficients in powers of (x+alpha).
template <class T>
Polynomial<T> to_shifted_basis(const Polynomial<T>& in_x, const T& alpha) {
    return in_x.taylor_at(-alpha);
}

// coefficients q_k of sum q_k (x+alpha)^k -> monomial coefficients.
template <class T>
Polynomial<T> from_shifted_basis(const Polynomial<T>& shifted, const T& alpha) {
    Polynomial<T> acc;
    const Polynomial<T> lin{alpha, T(1)};  // x + alpha
    for (int k = shifted.degree(); k >= 0; --k)
        acc = acc * lin + Polynomial<T>::constant(shifted[k]);
    return acc;
}

// --- classical Laguerre and the classical representation ---------------------

// Standard generalized Laguerre p_m^beta, leading coefficient (-1)^m / m!;
// m = -1 gives the zero polynomial.
template <class T>
Polynomial<T> classical_laguerre(int m, const T& beta) {
    if (m < 0) return {};
    Polynomial<T> prev;                              // p_{-1}
    Polynomial<T> cur{T(1)};                         // p_0
    const Polynomial<T> x = Polynomial<T>::identity();
    for (int j = 0; j < m; ++j) {
        // (j+1) p_{j+1} = (2j + 1 + beta - x) p_j - (j + beta) p_{j-1}
        Polynomial<T> next = (Polynomial<T>{T(2 * j + 1) + beta} - x) * cur - (T(j) + beta) * prev;
        next *= T(1) / T(j + 1);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

// Degree-n member from two classical Laguerre polynomials; leading coefficient
// (-1)^n / (n-1)! (the literature normalization).
template <class T>
Polynomial<T> x1_from_classical(int n, const T& alpha) {
    if (n < 1) throw std::domain_error("x1_from_classical: n >= 1 required");
    const Polynomial<T> u{alpha + T(1), T(1)};  // x + alpha + 1
    const Polynomial<T> v{alpha, T(1)};         // x + alpha
    const T beta = alpha - T(1);
    return -(u * classical_laguerre(n - 1, beta)) - v * classical_laguerre(n - 2, alpha);
}

// --- differential expression and condition checks ----------------------------

// p'(-alpha) - p(-alpha), plus the equivalent coefficient-sum form
// -c_0 + sum_k c_k [k (-alpha)^{k-1} - (-alpha)^k]; both are computed and must
// agree (exactly for exact scalars).
template <class T>
T exceptional_condition_residual(const Polynomial<T>& p, const T& alpha) {
    const T at = -alpha;
    T direct = p.derivative().eval(at) - p.eval(at);

    T sum = -p[0];
    T power = T(1);  // (-alpha)^{k-1}
    for (int k = 1; k <= p.degree(); ++k) {
        sum += p[k] * (T(k) * power - power * at);
        power = power * at;
    }
    if constexpr (is_exact_scalar<T>::value) {
        if (!(sum == direct)) throw std::logic_error("condition residual forms disagree");
    }
    return direct;
}

namespace detail {
inline bool remainder_small(const Rational& r, const Polynomial<Rational>&) { return r == 0; }
inline bool remainder_small(double r, const Polynomial<double>& p) {
    return std::abs(r) <= precision().operator_remainder_rel * std::max(1.0, max_abs_coeff(p));
}
} // namespace detail

// Differential expression applied to p:
//   -x p'' + (x - alpha) q,  q = [(x+alpha+1) p' - p] / (x+alpha).
// Throws NonzeroRemainderError when the division is not exact, i.e. when p
// violates the exceptional condition.
template <class T>
Polynomial<T> apply_operator(const Polynomial<T>& p, const T& alpha) {
    const Polynomial<T> dp = p.derivative();
    const Polynomial<T> bracket = Polynomial<T>{alpha + T(1), T(1)} * dp - p;
    auto [q, rem] = bracket.divide_linear(-alpha);
    if (!detail::remainder_small(rem, p))
        throw NonzeroRemainderError("operator: polynomial fails the exceptional condition");
    return -(Polynomial<T>::monomial(1, T(1)) * dp.derivative()) + Polynomial<T>{-alpha, T(1)} * q;
}

// Residual of the recurrence linking three consecutive literature-normalized
// polynomials (L_n, L_{n+1}, L_{n+2}); identically zero when they are genuine.
template <class T>
Polynomial<T> three_term_residual(const Polynomial<T>& L_n, const Polynomial<T>& L_n1,
                                  const Polynomial<T>& L_n2, int n, const T& alpha) {
    const Polynomial<T> sq = Polynomial<T>{alpha, T(1)} * Polynomial<T>{alpha, T(1)};  // (x+alpha)^2
    const T na = T(n) + alpha;
    const Polynomial<T> c2 = T(n + 1) * (sq * na - Polynomial<T>{alpha});
    const Polynomial<T> c1 = na * (sq * Polynomial<T>{-T(2 * n + 1) - alpha, T(1)} + Polynomial<T>{T(2) * alpha});
    const Polynomial<T> c0 = (na - T(1)) * (sq * (na + T(1)) - Polynomial<T>{alpha});
    return c2 * L_n2 + c1 * L_n1 + c0 * L_n;
}

// --- serialization ------------------------------------------------------------

std::string to_json_string(const X1Polynomial& p, const std::string& basis = "x", int digits = 17);
std::string pretty(const Polynomial<double>& p, int digits = 12);
std::string pretty(const Polynomial<Rational>& p);

} // namespace x1lag

#endif
