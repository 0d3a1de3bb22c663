#ifndef X1LAG_EXACT_HPP
#define X1LAG_EXACT_HPP

#include <functional>
#include <stdexcept>
#include <vector>

#include "x1lag/polynomial.hpp"
#include "x1lag/polys.hpp"
#include "x1lag/ratfun.hpp"
#include "x1lag/rational.hpp"
#include "x1lag/symbolic.hpp"

namespace x1lag::exact {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Fraction field an entry type embeds into for back substitution.
template <class T>
struct FieldOf {
    using type = T;
};
template <>
struct FieldOf<RationalPoly> {
    using type = RationalFunction;
};
template <class T>
using Field = typename FieldOf<T>::type;

// Exact quotient in the entry ring (Bareiss divisions are always exact).
inline Rational ring_div(const Rational& a, const Rational& b) { return a / b; }
inline RationalPoly ring_div(const RationalPoly& a, const RationalPoly& b) { return a.divide_exact(b); }

// Fraction-free Gaussian elimination (one-step Bareiss) with row pivoting.
// Returns the determinant; M is reduced in place to an upper-triangular system
// (the rhs travels as the last column of the augmented matrix).
template <class T>
T bareiss_eliminate(Matrix<T>& M) {
    const int n = static_cast<int>(M.size());
    T prev = T(1);
    bool negate = false;
    for (int k = 0; k < n; ++k) {
        int pivot = -1;
        for (int r = k; r < n; ++r)
            if (!(M[r][k] == T(0))) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw std::domain_error("bareiss: singular matrix");
        if (pivot != k) {
            std::swap(M[pivot], M[k]);
            negate = !negate;
        }
        const int cols = static_cast<int>(M[k].size());
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < cols; ++j)
                M[i][j] = ring_div(M[i][j] * M[k][k] - M[i][k] * M[k][j], prev);
            M[i][k] = T(0);
        }
        prev = M[k][k];
    }
    T det = M[n - 1][n - 1];
    if (negate) det = -det;
    return det;
}

template <class T>
T bareiss_determinant(Matrix<T> M) {
    return bareiss_eliminate(M);
}

// Solve M x = b exactly; the result lives in the fraction field.
template <class T>
std::vector<Field<T>> bareiss_solve(Matrix<T> M, const std::vector<T>& b) {
    const int n = static_cast<int>(M.size());
    for (int i = 0; i < n; ++i) M[i].push_back(b[i]);
    bareiss_eliminate(M);
    std::vector<Field<T>> x(n);
    for (int i = n - 1; i >= 0; --i) {
        Field<T> acc(M[i][n]);
        for (int j = i + 1; j < n; ++j) acc -= Field<T>(M[i][j]) * x[j];
        x[i] = acc / Field<T>(M[i][i]);
    }
    return x;
}

// Literal Laplace cofactor expansion along the first row.
template <class T>
T cofactor_determinant(const Matrix<T>& M) {
    const int n = static_cast<int>(M.size());
    if (n == 1) return M[0][0];
    T det(0);
    for (int j = 0; j < n; ++j) {
        if (M[0][j] == T(0)) continue;
        Matrix<T> minor(n - 1, std::vector<T>(n - 1, T(0)));
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor[r - 1][cc++] = M[r][c];
            }
        }
        T term = M[0][j] * cofactor_determinant(minor);
        if (j % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

// Cramer's rule with cofactor determinants, column by column.
template <class T>
std::vector<Field<T>> cramer_cofactor_solve(const Matrix<T>& M, const std::vector<T>& b) {
    const int n = static_cast<int>(M.size());
    T det = cofactor_determinant(M);
    if (det == T(0)) throw std::domain_error("cramer: singular matrix");
    std::vector<Field<T>> x(n);
    for (int k = 0; k < n; ++k) {
        Matrix<T> Mk = M;
        for (int r = 0; r < n; ++r) Mk[r][k] = b[r];
        x[k] = Field<T>(cofactor_determinant(Mk)) / Field<T>(det);
    }
    return x;
}

// --- exact moment matrices ----------------------------------------------------
//
// In both representations only row 2 depends on T = mu~1, and its T-derivative
// equals row 1; adding T * (row 1) to row 2 is an elementary row operation that
// leaves the solution unchanged (rhs rows 1-2 vanish). On that gauge every
// moment row is a Q[alpha]-multiple of G = Gamma(alpha) and can be divided out,
// leaving entries in Q[alpha] (or Q at fixed rational alpha).

// Adjusted moments on the T -> 0 gauge: mu~_k / G as a polynomial in alpha.
std::vector<RationalPoly> adjusted_gauge_moments(int k_max);

// rhs constant on the same gauge: K~_n / G = (-1)^n (alpha+n) (alpha)_{n-1}.
RationalPoly literature_kappa(int n);

// G-reduced matrices; entries polynomial in alpha. mu(k) supplies the gauge
// moments.
Matrix<RationalPoly> matrix_a_tilde_reduced(int n);
Matrix<RationalPoly> matrix_a_reduced(int n);

// Same matrices evaluated at a fixed rational alpha.
Matrix<Rational> matrix_a_tilde_reduced(int n, const Rational& alpha);
Matrix<Rational> matrix_a_reduced(int n, const Rational& alpha);

// Degree-n polynomial at fixed rational alpha, literature normalization,
// exact coefficients in both bases.
struct ExactX1 {
    int n = 0;
    Rational alpha;
    Polynomial<Rational> in_x;
    Polynomial<Rational> shifted;
};
ExactX1 x1_exact(int n, const Rational& alpha, MatrixFlavor flavor = MatrixFlavor::A_tilde);

// Fully symbolic in alpha: coefficients in Q(alpha).
struct SymbolicX1 {
    int n = 0;
    std::vector<RationalFunction> shifted;  // index k: coefficient of (x+alpha)^k
    std::vector<RationalFunction> in_x;     // index k: coefficient of x^k
};
SymbolicX1 x1_symbolic(int n, MatrixFlavor flavor = MatrixFlavor::A_tilde);

} // namespace x1lag::exact

#endif
