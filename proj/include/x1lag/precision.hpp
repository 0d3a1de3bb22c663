#ifndef X1LAG_PRECISION_HPP
#define X1LAG_PRECISION_HPP

namespace x1lag {

// Single record holding every numeric knob: algorithm switch points and the
// tolerances the library promises (and its cross-checks enforce).
struct Precision {
    // --- special functions ---
    double series_cf_switch_x = 1.0;  // E_a: series below, continued fraction at/above
    int cf_max_iter = 1000;
    int series_max_terms = 300;
    double near_integer_eps = 1e-4;   // switch to the log-expansion around integer order

    double gamma_rel = 1e-13;
    double exp_integral_rel = 1e-11;
    double incomplete_gamma_rel = 1e-11;
    double bridge_rel = 1e-10;        // E_a(x) vs x^{a-1} Gamma(1-a,x)

    // --- moments ---
    double seed_identity_rel = 1e-12;       // mu~0 + 2 mu~1 = Gamma(alpha+1)/alpha
    double route_agreement_rel = 1e-10;     // numeric moment routes against each other
    double binomial_roundtrip_rel = 1e-11;  // adjusted -> canonical -> adjusted

    // --- quadrature oracle ---
    double quad_default_rel_tol = 1e-10;
    int quad_max_levels = 12;       // tanh-sinh refinement levels
    int gl_base_nodes = 96;         // Gauss-Laguerre starting node count
    int gl_max_nodes = 768;
    int quad_degree_hint = 32;      // growth bound used by the tail certificate

    // --- polynomial construction ---
    double solve_residual_rel = 1e-10;      // |A c - b| <= rel * |b|
    double operator_remainder_rel = 1e-10;  // synthetic-division remainder gate
    int float_degree_limit = 10;            // float path refuses larger n
};

// Process-wide instance. Mutable so a driver can tighten/loosen the single knob.
Precision& precision();

} // namespace x1lag

#endif
