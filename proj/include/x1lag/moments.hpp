#ifndef X1LAG_MOMENTS_HPP
#define X1LAG_MOMENTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "x1lag/quadrature.hpp"
#include "x1lag/symbolic.hpp"

namespace x1lag {

enum class MomentKind { adjusted, canonical };
enum class Route { recursion, closed_form, matrix_product, quadrature, inversion };

std::string to_string(MomentKind k);
std::string to_string(Route r);

// Immutable numeric moment sequence for one alpha; indices contiguous from 0,
// each entry tagged with the route that produced it.
struct MomentTable {
    double alpha = 0;
    MomentKind kind = MomentKind::adjusted;
    std::vector<double> values;
    std::vector<Route> route;

    int k_max() const { return static_cast<int>(values.size()) - 1; }
};

// --- adjusted moments -------------------------------------------------------

// Transcendental seeds (mu~0, mu~1) from
//   mu~1 = e^alpha alpha^alpha Gamma(1+alpha) Gamma(-alpha, alpha),
//   mu~0 = Gamma(alpha) - 2 mu~1.
std::pair<double, double> adjusted_seed_moments(double alpha);

// Table of mu~_0..mu~_kmax: seeds plus the forward recursion
//   mu~_{k+2} = (2 alpha + k) mu~_{k+1} + alpha (1-k) mu~_k.
MomentTable adjusted_recursion(int k_max, double alpha);

// Exact counterpart over the {G, T} module; index k of the result is mu~_k.
std::vector<SymbolicMoment> adjusted_recursion_symbolic(int k_max);

// Closed form, valid for index k >= 2 only (the first two moments are not
// reachable this way); exact Leibniz-sum expansion.
SymbolicMoment adjusted_closed_form(int k);
// Numeric evaluation through the terminating-1F1 form (independent arithmetic path).
double adjusted_closed_form_value(int k, double alpha);

// 2x2 companion-product route, index k >= 2.
SymbolicMoment adjusted_matrix_product(int k);
double adjusted_matrix_product_value(int k, double alpha);

// Full numeric tables for the alternative routes (seeds from the closed-form
// seed expressions; entries >= 2 from the named route).
MomentTable adjusted_closed_form_table(int k_max, double alpha);
MomentTable adjusted_matrix_product_table(int k_max, double alpha);

// Numeric value of a symbolic moment: a(alpha) Gamma(alpha) + b(alpha) mu~1(alpha).
double eval(const SymbolicMoment& m, double alpha);

// --- generating function ----------------------------------------------------

// G(t) = Gamma(alpha+1) e^{alpha t} (1-t)^{-(alpha+1)}, |t| < 1; its k-th
// Maclaurin coefficient nu_k satisfies k! nu_k = mu~_{k+2}.
double generating_function(double t, double alpha);
double generating_function_derivative(double t, double alpha);
double taylor_coefficient(int k, double alpha);

// --- canonical (exceptional) moments ----------------------------------------

// mu_k = sum_m C(k,m) (-alpha)^{k-m} mu~_m  (binomial inversion; primary route).
MomentTable canonical_from_adjusted(const MomentTable& adjusted);

// Forward direction mu~_k = sum_m C(k,m) alpha^{k-m} mu_m (round-trip checks).
MomentTable adjusted_from_canonical(const MomentTable& canonical);

// Direct recursion for the canonical moments (cross-check route):
//   mu_{k+2} = sum_{m<=k} [(2a+k)C(k+1,m) - a C(k+2,m) + (1-k)C(k,m)] a^{k+1-m} mu_m
//              + (1-a) k mu_{k+1}.
MomentTable canonical_recursion(int k_max, double alpha);

// Quadrature-backed table (oracle route).
MomentTable moments_from_quadrature(int k_max, double alpha, MomentKind kind,
                                    const quad::QuadratureConfig& cfg = quad::QuadratureConfig::defaults());

// --- serialization ----------------------------------------------------------

std::string to_json_string(const MomentTable& t, int digits = 17);
std::string to_csv(const MomentTable& t, int digits = 17);

} // namespace x1lag

#endif
