#include "x1lag/polys.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "x1lag/io.hpp"
#include "x1lag/specfun.hpp"

namespace x1lag {

using json = nlohmann::json;

double literature_normalization(int n, double alpha) {
    if (n < 1) throw std::domain_error("literature_normalization: n >= 1 required");
    if (!(alpha > 0.0)) throw std::domain_error("literature_normalization: alpha > 0 required");
    const double v = (alpha + n) * specfun::gamma(alpha + n - 1);
    return (n % 2 == 0) ? v : -v;
}

namespace {

void require_table(const MomentTable& t, MomentKind kind, int need, const char* who) {
    if (t.kind != kind) throw std::invalid_argument(std::string(who) + ": wrong moment kind");
    if (t.k_max() < need)
        throw std::invalid_argument(std::string(who) + ": moments through index " +
                                    std::to_string(need) + " required");
}

} // namespace

MomentMatrix build_matrix_a(int n, const MomentTable& canonical, double alpha) {
    if (n < 1) throw std::domain_error("build_matrix_a: n >= 1 required");
    if (!(alpha > 0.0)) throw std::domain_error("build_matrix_a: alpha > 0 required");
    require_table(canonical, MomentKind::canonical, 2 * n, "build_matrix_a");
    const auto& mu = canonical.values;

    MomentMatrix m;
    m.n = n;
    m.alpha = alpha;
    m.flavor = MatrixFlavor::A;
    m.entries = Eigen::MatrixXd::Zero(n + 1, n + 1);
    m.rhs = Eigen::VectorXd::Zero(n + 1);
    m.rhs(n) = 1.0;

    // row 1: the exceptional condition on monomial coefficients
    m.entries(0, 0) = -1.0;
    double pw = 1.0;  // (-alpha)^{k-1}
    for (int k = 1; k <= n; ++k) {
        m.entries(0, k) = k * pw - pw * (-alpha);
        pw *= -alpha;
    }
    // row 2: <p, x+alpha+1>
    for (int k = 0; k <= n; ++k) m.entries(1, k) = mu[k + 1] + (alpha + 1.0) * mu[k];
    // rows s+1, s = 2..n: <p, (x+alpha)^s> expanded binomially
    for (int s = 2; s <= n; ++s)
        for (int k = 0; k <= n; ++k) {
            long double acc = 0.0L;
            long double ap = std::pow(static_cast<long double>(alpha), s);  // alpha^{s-m}
            for (int mm = 0; mm <= s; ++mm) {
                acc += binomial(s, mm).get_d() * ap * mu[mm + k];
                ap /= alpha;
            }
            m.entries(s, k) = static_cast<double>(acc);
        }
    return m;
}

MomentMatrix build_matrix_a_tilde(int n, const MomentTable& adjusted) {
    if (n < 1) throw std::domain_error("build_matrix_a_tilde: n >= 1 required");
    require_table(adjusted, MomentKind::adjusted, 2 * n, "build_matrix_a_tilde");
    const auto& mu = adjusted.values;

    MomentMatrix m;
    m.n = n;
    m.alpha = adjusted.alpha;
    m.flavor = MatrixFlavor::A_tilde;
    m.entries = Eigen::MatrixXd::Zero(n + 1, n + 1);
    m.rhs = Eigen::VectorXd::Zero(n + 1);
    m.rhs(n) = 1.0;

    m.entries(0, 0) = -1.0;
    m.entries(0, 1) = 1.0;
    for (int k = 0; k <= n; ++k) m.entries(1, k) = mu[k] + mu[k + 1];
    for (int s = 2; s <= n; ++s)
        for (int k = 0; k <= n; ++k) m.entries(s, k) = mu[k + s];
    return m;
}

X1Polynomial solve_polynomial(const MomentMatrix& m, double K, SolveInfo* info) {
    if (K == 0.0) throw std::invalid_argument("solve_polynomial: K must be nonzero");
    if (m.n > precision().float_degree_limit)
        throw std::domain_error("solve_polynomial: float path limited to n <= " +
                                std::to_string(precision().float_degree_limit));
    const int dim = m.n + 1;
    Eigen::VectorXd b = m.rhs * K;

    Eigen::PartialPivLU<Eigen::MatrixXd> lu(m.entries);
    const double rcond = lu.rcond();
    const double det = lu.determinant();
    if (!(std::abs(det) > 0.0) || rcond < 1e-15)
        throw SingularMatrixError("solve_polynomial: matrix numerically singular", rcond);

    Eigen::VectorXd x = lu.solve(b);
    // iterative refinement with a long-double residual
    for (int pass = 0; pass < 3; ++pass) {
        Eigen::VectorXd r(dim);
        for (int i = 0; i < dim; ++i) {
            long double acc = static_cast<long double>(b(i));
            for (int j = 0; j < dim; ++j)
                acc -= static_cast<long double>(m.entries(i, j)) * static_cast<long double>(x(j));
            r(i) = static_cast<double>(acc);
        }
        if (r.lpNorm<Eigen::Infinity>() <= 1e-18 * b.lpNorm<Eigen::Infinity>()) break;
        x += lu.solve(r);
    }

    double resid = 0.0;
    for (int i = 0; i < dim; ++i) {
        long double acc = static_cast<long double>(b(i));
        for (int j = 0; j < dim; ++j)
            acc -= static_cast<long double>(m.entries(i, j)) * static_cast<long double>(x(j));
        resid = std::max(resid, std::abs(static_cast<double>(acc)));
    }
    if (info) {
        info->residual_norm = resid;
        info->rcond = rcond;
        info->det = det;
    }
    if (resid > precision().solve_residual_rel * b.lpNorm<Eigen::Infinity>())
        throw SingularMatrixError("solve_polynomial: refinement residual above tolerance", rcond);

    std::vector<double> coeffs(x.data(), x.data() + dim);
    X1Polynomial p;
    p.n = m.n;
    p.alpha = m.alpha;
    p.normalization.K = K;
    if (m.flavor == MatrixFlavor::A) {
        p.in_x = Polynomial<double>(coeffs);
        p.shifted = to_shifted_basis(p.in_x, m.alpha);
    } else {
        p.shifted = Polynomial<double>(coeffs);
        p.in_x = from_shifted_basis(p.shifted, m.alpha);
    }
    return p;
}

X1Polynomial build_x1(int n, double alpha, MatrixFlavor flavor, NormalizationKind kind, double K_raw) {
    if (n < 1) throw std::domain_error("build_x1: no degree-0 member; n >= 1 required");
    if (!(alpha > 0.0)) throw std::domain_error("build_x1: alpha > 0 required");
    const double K =
        kind == NormalizationKind::literature ? literature_normalization(n, alpha) : K_raw;
    MomentMatrix m;
    if (flavor == MatrixFlavor::A_tilde) {
        m = build_matrix_a_tilde(n, adjusted_recursion(2 * n, alpha));
    } else {
        m = build_matrix_a(n, canonical_from_adjusted(adjusted_recursion(2 * n, alpha)), alpha);
    }
    X1Polynomial p = solve_polynomial(m, K);
    p.normalization.kind = kind;
    return p;
}

std::string to_json_string(const X1Polynomial& p, const std::string& basis, int digits) {
    if (basis != "x" && basis != "shifted")
        throw std::invalid_argument("to_json_string: basis must be \"x\" or \"shifted\"");
    const Polynomial<double>& src = basis == "x" ? p.in_x : p.shifted;
    json j;
    j["n"] = p.n;
    j["alpha"] = p.alpha;
    j["basis"] = basis;
    j["coeffs"] = json::array();
    for (int k = 0; k <= p.n; ++k) j["coeffs"].push_back(json::parse(format_double(src[k], digits)));
    j["normalization"] = p.normalization.kind == NormalizationKind::literature
                             ? json("literature")
                             : json({{"raw", p.normalization.K}});
    j["leading_coefficient"] = p.leading_coefficient();
    return j.dump();
}

namespace {

std::string term_str(const std::string& coeff, int k, bool coeff_is_one) {
    std::string var;
    if (k == 1)
        var = "x";
    else if (k > 1)
        var = "x^" + std::to_string(k);
    if (k == 0) return coeff;
    if (coeff_is_one) return var;
    return coeff + var;
}

} // namespace

std::string pretty(const Polynomial<double>& p, int digits) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const double c = p[k];
        if (c == 0.0) continue;
        const double mag = std::abs(c);
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        out << term_str(format_double(mag, digits), k, k > 0 && mag == 1.0);
        first = false;
    }
    return out.str();
}

std::string pretty(const Polynomial<Rational>& p) {
    if (p.is_zero()) return "0";
    // factor out the content so the inside has coprime integer coefficients
    mpz_class num_gcd(0), den_lcm(1);
    for (const Rational& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_class num = abs(c.get_num());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    std::ostringstream inner;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rational c = p[k] / content;
        if (c == 0) continue;
        if (!first)
            inner << (c < 0 ? " - " : " + ");
        else if (c < 0)
            inner << "-";
        const Rational mag = abs(c);
        inner << term_str(mag.get_str(), k, k > 0 && mag == 1);
        first = false;
    }
    if (content == 1) return inner.str();
    return "(" + content.get_str() + ")*(" + inner.str() + ")";
}

} // namespace x1lag
