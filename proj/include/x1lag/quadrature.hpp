#ifndef X1LAG_QUADRATURE_HPP
#define X1LAG_QUADRATURE_HPP

#include <functional>

#include "x1lag/polynomial.hpp"
#include "x1lag/precision.hpp"

namespace x1lag::quad {

enum class Strategy { split_tanh_sinh, gauss_laguerre };

struct QuadratureConfig {
    Strategy strategy = Strategy::split_tanh_sinh;
    double target_rel_tol = 1e-10;
    int max_levels = 12;          // tanh-sinh refinements
    int nodes = 96;               // Gauss-Laguerre starting count (doubled until converged)
    double truncation_x_max = 0;  // 0 = auto: max(40, alpha + 40*log10(1/tol))
    int degree_hint = 32;         // growth bound for callables in the tail certificate

    static QuadratureConfig defaults() {
        QuadratureConfig c;
        const Precision& p = precision();
        c.target_rel_tol = p.quad_default_rel_tol;
        c.max_levels = p.quad_max_levels;
        c.nodes = p.gl_base_nodes;
        c.degree_hint = p.quad_degree_hint;
        return c;
    }
};

struct QuadResult {
    double value;
    double error_estimate;
};

// int_0^inf f(x) W^alpha(x) dx with W^alpha(x) = x^alpha e^{-x} / (x+alpha)^2.
// Throws QuadratureError when levels/nodes are exhausted above tolerance and
// std::domain_error for alpha <= 0.
QuadResult weighted_integral(const std::function<double(double)>& f, double alpha,
                             const QuadratureConfig& cfg = QuadratureConfig::defaults());

// Polynomial overload: the exact degree feeds the truncation tail certificate.
QuadResult weighted_integral(const Polynomial<double>& f, double alpha,
                             const QuadratureConfig& cfg = QuadratureConfig::defaults());

QuadResult inner_product(const Polynomial<double>& p, const Polynomial<double>& q, double alpha,
                         const QuadratureConfig& cfg = QuadratureConfig::defaults());

// Gauss-Laguerre rule for weight x^alpha e^{-x} (Golub-Welsch); cached per (alpha, n).
struct GaussLaguerreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLaguerreRule& gauss_laguerre_rule(double alpha, int n);

} // namespace x1lag::quad

#endif
