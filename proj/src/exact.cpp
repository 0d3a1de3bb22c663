#include "x1lag/exact.hpp"

#include <vector>

namespace x1lag::exact {

namespace {

template <class T>
T T_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>)
        return r;
    else
        return T{r};
}

template <class T>
std::vector<T> gauge_adjusted(int k_max, const T& alpha) {
    // T -> 0 gauge: mu~_0/G = 1, mu~_1/G = 0, then the adjusted recursion.
    std::vector<T> a;
    a.push_back(T(1));
    if (k_max >= 1) a.push_back(T(0));
    for (int k = 0; k + 2 <= k_max; ++k)
        a.push_back((alpha * T(2) + T(k)) * a[k + 1] + alpha * T(1 - k) * a[k]);
    return a;
}

template <class T>
std::vector<T> gauge_canonical(const std::vector<T>& adj, const T& alpha) {
    // mu_m / G = sum_j C(m,j) (-alpha)^{m-j} (mu~_j / G)
    std::vector<T> c(adj.size(), T(0));
    for (std::size_t m = 0; m < adj.size(); ++m) {
        T acc = T(0);
        T pw = T(1);  // (-alpha)^{m-j}, j = m downward
        for (int j = static_cast<int>(m); j >= 0; --j) {
            acc += T_from_rational<T>(binomial(m, j)) * pw * adj[static_cast<std::size_t>(j)];
            pw = pw * (-alpha);
        }
        c[m] = acc;
    }
    return c;
}

template <class T>
Matrix<T> assemble_a_tilde(int n, const std::vector<T>& mu) {
    Matrix<T> M(n + 1, std::vector<T>(n + 1, T(0)));
    M[0][0] = T(-1);
    M[0][1] = T(1);
    for (int k = 0; k <= n; ++k) M[1][k] = mu[k] + mu[k + 1];
    for (int s = 2; s <= n; ++s)
        for (int k = 0; k <= n; ++k) M[s][k] = mu[k + s];
    return M;
}

template <class T>
Matrix<T> assemble_a(int n, const std::vector<T>& muc, const T& alpha) {
    Matrix<T> M(n + 1, std::vector<T>(n + 1, T(0)));
    M[0][0] = T(-1);
    T pw = T(1);  // (-alpha)^{k-1}
    for (int k = 1; k <= n; ++k) {
        M[0][k] = T(k) * pw - pw * (-alpha);
        pw = pw * (-alpha);
    }
    for (int k = 0; k <= n; ++k) M[1][k] = muc[k + 1] + (alpha + T(1)) * muc[k];
    for (int s = 2; s <= n; ++s)
        for (int k = 0; k <= n; ++k) {
            T acc = T(0);
            T ap = T(1);  // alpha^{s-m}, m = s downward
            for (int m = s; m >= 0; --m) {
                acc += T_from_rational<T>(binomial(s, m)) * ap * muc[m + k];
                ap = ap * alpha;
            }
            M[s][k] = acc;
        }
    return M;
}

template <class T>
T kappa(int n, const T& alpha) {
    // (-1)^n (alpha + n) (alpha)_{n-1}
    T v = alpha + T(n);
    for (int j = 0; j + 1 < n; ++j) v = v * (alpha + T(j));
    if (n % 2 != 0) v = -v;
    return v;
}

} // namespace

std::vector<RationalPoly> adjusted_gauge_moments(int k_max) {
    return gauge_adjusted(k_max, RationalPoly{Rational(0), Rational(1)});
}

RationalPoly literature_kappa(int n) {
    return kappa(n, RationalPoly{Rational(0), Rational(1)});
}

Matrix<RationalPoly> matrix_a_tilde_reduced(int n) {
    return assemble_a_tilde(n, adjusted_gauge_moments(2 * n));
}

Matrix<RationalPoly> matrix_a_reduced(int n) {
    const RationalPoly alpha{Rational(0), Rational(1)};
    return assemble_a(n, gauge_canonical(adjusted_gauge_moments(2 * n), alpha), alpha);
}

Matrix<Rational> matrix_a_tilde_reduced(int n, const Rational& alpha) {
    return assemble_a_tilde(n, gauge_adjusted(2 * n, alpha));
}

Matrix<Rational> matrix_a_reduced(int n, const Rational& alpha) {
    return assemble_a(n, gauge_canonical(gauge_adjusted(2 * n, alpha), alpha), alpha);
}

ExactX1 x1_exact(int n, const Rational& alpha, MatrixFlavor flavor) {
    if (n < 1) throw std::domain_error("x1_exact: n >= 1 required");
    if (!(alpha > 0)) throw std::domain_error("x1_exact: alpha > 0 required");
    Matrix<Rational> M = flavor == MatrixFlavor::A_tilde ? matrix_a_tilde_reduced(n, alpha)
                                                         : matrix_a_reduced(n, alpha);
    std::vector<Rational> b(n + 1, Rational(0));
    b[n] = kappa(n, alpha);
    std::vector<Rational> sol = bareiss_solve(M, b);

    ExactX1 out;
    out.n = n;
    out.alpha = alpha;
    if (flavor == MatrixFlavor::A_tilde) {
        out.shifted = Polynomial<Rational>(sol);
        out.in_x = from_shifted_basis(out.shifted, alpha);
    } else {
        out.in_x = Polynomial<Rational>(sol);
        out.shifted = to_shifted_basis(out.in_x, alpha);
    }
    return out;
}

SymbolicX1 x1_symbolic(int n, MatrixFlavor flavor) {
    if (n < 1) throw std::domain_error("x1_symbolic: n >= 1 required");
    const RationalPoly alpha{Rational(0), Rational(1)};
    Matrix<RationalPoly> M =
        flavor == MatrixFlavor::A_tilde ? matrix_a_tilde_reduced(n) : matrix_a_reduced(n);
    std::vector<RationalPoly> b(n + 1, RationalPoly{});
    b[n] = literature_kappa(n);
    std::vector<RationalFunction> sol = bareiss_solve(M, b);

    SymbolicX1 out;
    out.n = n;
    const RationalFunction af{alpha};
    if (flavor == MatrixFlavor::A_tilde) {
        out.shifted = sol;
        // c_j = sum_k a_k C(k,j) alpha^{k-j}
        out.in_x.assign(n + 1, RationalFunction());
        for (int j = 0; j <= n; ++j) {
            RationalFunction acc;
            for (int k = j; k <= n; ++k) {
                RationalFunction pw{Rational(1)};
                for (int i = 0; i < k - j; ++i) pw *= af;
                acc += RationalFunction(binomial(k, j)) * pw * sol[k];
            }
            out.in_x[j] = acc;
        }
    } else {
        out.in_x = sol;
        // a_k = sum_j c_j C(j,k) (-alpha)^{j-k}
        out.shifted.assign(n + 1, RationalFunction());
        for (int k = 0; k <= n; ++k) {
            RationalFunction acc;
            for (int j = k; j <= n; ++j) {
                RationalFunction pw{Rational(1)};
                for (int i = 0; i < j - k; ++i) pw *= -af;
                acc += RationalFunction(binomial(j, k)) * pw * sol[j];
            }
            out.shifted[k] = acc;
        }
    }
    return out;
}

} // namespace x1lag::exact
