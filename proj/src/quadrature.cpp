#include "x1lag/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>

#include "x1lag/errors.hpp"
#include "x1lag/specfun.hpp"

namespace x1lag::quad {

namespace {

constexpr long double kHalfPi = 1.57079632679489661923132169163975144L;

struct TanhSinhEstimate {
    long double value;
    long double abs_integral;  // int |f|, for the relative-error scale
    long double err;
};

// Tanh-sinh on [0, X]. Nodes are generated per level; abscissas near the
// endpoints are computed from e^{-2s} directly so x and X-x stay accurate.
TanhSinhEstimate tanh_sinh_0X(const std::function<long double(long double)>& f, long double X,
                              long double rel_tol, int max_levels) {
    const long double t_max = 6.5L;

    auto eval_pair = [&](long double t, long double& acc, long double& acc_abs) {
        const long double s = kHalfPi * std::sinh(t);
        const long double w = kHalfPi * std::cosh(t) / std::pow(std::cosh(s), 2.0L);
        // x = X/2 (1 + tanh s): right node X/(1+e^{-2s}), left node X/(1+e^{2s})
        const long double xr = X / (1.0L + std::exp(-2.0L * s));
        const long double xl = X / (1.0L + std::exp(2.0L * s));
        if (w == 0.0L) return;
        const long double vr = f(xr) * w;
        const long double vl = f(xl) * w;
        acc += vr + vl;
        acc_abs += std::fabs(vr) + std::fabs(vl);
    };

    long double h = 1.0L;
    long double sum = 0.0L, sum_abs = 0.0L;
    {
        const long double w0 = kHalfPi;  // t = 0: cosh 0 / cosh^2 0
        const long double v0 = f(X / 2.0L) * w0;
        sum = v0;
        sum_abs = std::fabs(v0);
        for (long double t = h; t <= t_max; t += h) eval_pair(t, sum, sum_abs);
    }
    long double prev = sum * h * (X / 2.0L);
    long double prev_abs = sum_abs * h * (X / 2.0L);
    long double err = std::fabs(prev);

    for (int level = 1; level <= max_levels; ++level) {
        h *= 0.5L;
        long double add = 0.0L, add_abs = 0.0L;
        for (long double t = h; t <= t_max; t += 2.0L * h) eval_pair(t, add, add_abs);
        sum = sum + add;
        sum_abs = sum_abs + add_abs;
        const long double cur = sum * h * (X / 2.0L);
        const long double cur_abs = sum_abs * h * (X / 2.0L);
        err = std::fabs(cur - prev);
        prev = cur;
        prev_abs = cur_abs;
        // scale against the L1 norm so near-zero (orthogonality) integrals converge
        if (level >= 3 && err <= rel_tol * std::max(std::fabs(cur), cur_abs) + 1e-300L)
            return {cur, cur_abs, err};
    }
    return {prev, prev_abs, err};
}

long double weight_fn(long double x, long double alpha) {
    if (x <= 0.0L) return 0.0L;
    return std::exp(alpha * std::log(x) - x) / ((x + alpha) * (x + alpha));
}

double auto_truncation(double alpha, double tol) {
    return std::max(40.0, alpha + 40.0 * std::log10(1.0 / tol));
}

// Tail certificate: |int_X^inf f W| <= sum|c| * 2 X^{alpha+d} e^{-X} / (X+alpha)^2
// for |f(x)| <= sum|c| x^d, valid once X >= 2(alpha+d). Computed in logs.
double tail_bound_log(double coeff_sum, double degree, double alpha, double X) {
    if (coeff_sum <= 0) return -std::numeric_limits<double>::infinity();
    return std::log(coeff_sum) + std::log(2.0) + (alpha + degree) * std::log(X) - X -
           2.0 * std::log(X + alpha);
}

QuadResult run_tanh_sinh(const std::function<double(double)>& f, double alpha,
                         const QuadratureConfig& cfg, double coeff_sum, double degree) {
    const double tol = cfg.target_rel_tol;
    const double X = cfg.truncation_x_max > 0 ? cfg.truncation_x_max : auto_truncation(alpha, tol);
    if (X < 2.0 * (alpha + degree))
        throw QuadratureError("truncation point too small for the integrand degree", 1.0, tol);

    const long double la = alpha;
    auto integrand = [&](long double x) -> long double {
        return static_cast<long double>(f(static_cast<double>(x))) * weight_fn(x, la);
    };
    TanhSinhEstimate est = tanh_sinh_0X(integrand, X, tol * 0.1L, cfg.max_levels);

    const double tail_log = tail_bound_log(coeff_sum, degree, alpha, X);
    const double scale = std::max(static_cast<double>(est.abs_integral), 1e-300);
    double tail = std::exp(std::min(tail_log, 700.0));
    double err = static_cast<double>(est.err) + tail;
    if (err > tol * scale)
        throw QuadratureError("tanh-sinh levels exhausted above tolerance", err / scale, tol);
    return {static_cast<double>(est.value), err};
}

struct RuleKey {
    double alpha;
    int n;
    bool operator<(const RuleKey& o) const {
        return alpha < o.alpha || (alpha == o.alpha && n < o.n);
    }
};

// Read-mostly cache: one computation per key, then shared lookups.
const GaussLaguerreRule& cached_rule(double alpha, int n) {
    static std::map<RuleKey, std::unique_ptr<GaussLaguerreRule>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[{alpha, n}];
    if (!slot) {
        // Golub-Welsch: Jacobi matrix for weight x^alpha e^{-x} has
        // diagonal 2i+alpha+1 and off-diagonal sqrt(i(i+alpha)).
        Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            J(i, i) = 2.0 * i + alpha + 1.0;
            if (i > 0) {
                const double b = std::sqrt(i * (i + alpha));
                J(i, i - 1) = b;
                J(i - 1, i) = b;
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
        auto rule = std::make_unique<GaussLaguerreRule>();
        rule->nodes.resize(n);
        rule->weights.resize(n);
        const double mu0 = specfun::gamma(alpha + 1.0);
        for (int i = 0; i < n; ++i) {
            rule->nodes[i] = es.eigenvalues()(i);
            const double v0 = es.eigenvectors()(0, i);
            rule->weights[i] = mu0 * v0 * v0;
        }
        slot = std::move(rule);
    }
    return *slot;
}

QuadResult run_gauss_laguerre(const std::function<double(double)>& f, double alpha,
                              const QuadratureConfig& cfg) {
    // integrate g(x) x^alpha e^{-x} with g = f / (x+alpha)^2
    auto apply = [&](const GaussLaguerreRule& r) {
        long double acc = 0.0L, acc_abs = 0.0L;
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            const double x = r.nodes[i];
            const long double v =
                static_cast<long double>(r.weights[i]) * f(x) / ((x + alpha) * (x + alpha));
            acc += v;
            acc_abs += std::fabs(v);
        }
        return std::pair<double, double>(static_cast<double>(acc), static_cast<double>(acc_abs));
    };

    const double tol = cfg.target_rel_tol;
    int n = cfg.nodes;
    auto [prev, prev_abs] = apply(cached_rule(alpha, n));
    while (2 * n <= precision().gl_max_nodes) {
        n *= 2;
        auto [cur, cur_abs] = apply(cached_rule(alpha, n));
        const double err = std::abs(cur - prev);
        const double scale = std::max(std::abs(cur), std::max(cur_abs, 1e-300));
        prev = cur;
        prev_abs = cur_abs;
        if (err <= tol * scale) return {cur, err};
    }
    throw QuadratureError("gauss-laguerre nodes exhausted above tolerance", 1.0, tol);
}

} // namespace

const GaussLaguerreRule& gauss_laguerre_rule(double alpha, int n) {
    if (!(alpha > 0.0)) throw std::domain_error("gauss_laguerre_rule: requires alpha > 0");
    if (n < 1) throw std::domain_error("gauss_laguerre_rule: requires n >= 1");
    return cached_rule(alpha, n);
}

namespace {
void validate(double alpha, const QuadratureConfig& cfg) {
    if (!(alpha > 0.0)) throw std::domain_error("weighted_integral: requires alpha > 0");
    if (!(cfg.target_rel_tol >= 1e-14 && cfg.target_rel_tol <= 1e-4))
        throw std::invalid_argument("weighted_integral: target_rel_tol outside [1e-14, 1e-4]");
}
} // namespace

QuadResult weighted_integral(const std::function<double(double)>& f, double alpha,
                             const QuadratureConfig& cfg) {
    validate(alpha, cfg);
    if (cfg.strategy == Strategy::gauss_laguerre) return run_gauss_laguerre(f, alpha, cfg);
    return run_tanh_sinh(f, alpha, cfg, /*coeff_sum=*/1.0, /*degree=*/cfg.degree_hint);
}

QuadResult weighted_integral(const Polynomial<double>& f, double alpha, const QuadratureConfig& cfg) {
    validate(alpha, cfg);
    auto fn = [&f](double x) { return f.eval(x); };
    if (cfg.strategy == Strategy::gauss_laguerre) return run_gauss_laguerre(fn, alpha, cfg);
    return run_tanh_sinh(fn, alpha, cfg, sum_abs_coeff(f), std::max(f.degree(), 0));
}

QuadResult inner_product(const Polynomial<double>& p, const Polynomial<double>& q, double alpha,
                         const QuadratureConfig& cfg) {
    return weighted_integral(p * q, alpha, cfg);
}

} // namespace x1lag::quad
