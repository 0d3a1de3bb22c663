#include "x1lag/moments.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "x1lag/io.hpp"
#include "x1lag/precision.hpp"
#include "x1lag/specfun.hpp"

namespace x1lag {

using json = nlohmann::json;

std::string to_string(MomentKind k) {
    return k == MomentKind::adjusted ? "adjusted" : "canonical";
}

std::string to_string(Route r) {
    switch (r) {
        case Route::recursion: return "recursion";
        case Route::closed_form: return "closed_form";
        case Route::matrix_product: return "matrix_product";
        case Route::quadrature: return "quadrature";
        case Route::inversion: return "inversion";
    }
    return "?";
}

namespace {

void require_alpha(double alpha) {
    if (!(alpha > 0.0)) throw std::domain_error("moments: requires alpha > 0");
}

long double seed_mu1_ld(long double a) {
    // e^a a^a Gamma(1+a) Gamma(-a, a); Gamma(-a,a) through the bridge identity
    const long double inc = std::pow(a, -a) * specfun::exp_integral_ld(1.0L + a, a);
    return std::exp(a) * std::pow(a, a) * specfun::gamma_ld(1.0L + a) * inc;
}

} // namespace

std::pair<double, double> adjusted_seed_moments(double alpha) {
    require_alpha(alpha);
    const long double a = alpha;
    const long double mu1 = seed_mu1_ld(a);
    const long double mu0 = specfun::gamma_ld(a) - 2.0L * mu1;
    if (!(mu0 > 0.0L) || !(mu1 > 0.0L) || !std::isfinite(static_cast<double>(mu0)) ||
        !std::isfinite(static_cast<double>(mu1)))
        throw std::runtime_error("adjusted_seed_moments: seeds not positive finite");
    return {static_cast<double>(mu0), static_cast<double>(mu1)};
}

MomentTable adjusted_recursion(int k_max, double alpha) {
    require_alpha(alpha);
    if (k_max < 0) throw std::invalid_argument("adjusted_recursion: k_max >= 0 required");
    auto [m0, m1] = adjusted_seed_moments(alpha);
    MomentTable t;
    t.alpha = alpha;
    t.kind = MomentKind::adjusted;
    std::vector<long double> v;
    v.push_back(m0);
    if (k_max >= 1) v.push_back(m1);
    for (int k = 0; k + 2 <= k_max; ++k)
        v.push_back((2.0L * alpha + k) * v[k + 1] + alpha * (1.0L - k) * v[k]);
    for (std::size_t i = 0; i < v.size(); ++i) {
        t.values.push_back(static_cast<double>(v[i]));
        t.route.push_back(i < 2 ? Route::closed_form : Route::recursion);
    }
    return t;
}

std::vector<SymbolicMoment> adjusted_recursion_symbolic(int k_max) {
    if (k_max < 1) throw std::invalid_argument("adjusted_recursion_symbolic: k_max >= 1 required");
    std::vector<SymbolicMoment> m;
    m.emplace_back(RationalPoly{Rational(1)}, RationalPoly{Rational(-2)});  // G - 2T
    m.emplace_back(RationalPoly{}, RationalPoly{Rational(1)});              // T
    for (int k = 0; k + 2 <= k_max; ++k) {
        const RationalPoly c1{Rational(k), Rational(2)};      // 2 alpha + k
        const RationalPoly c0{Rational(0), Rational(1 - k)};  // alpha (1-k)
        m.push_back(c1 * m[k + 1] + c0 * m[k]);
    }
    return m;
}

SymbolicMoment adjusted_closed_form(int k) {
    if (k < 2) throw std::out_of_range("adjusted_closed_form: defined for k >= 2 only");
    const int K = k - 2;
    // sum_{m=0}^{K} (-1)^{K-m} C(K,m) alpha^m (-alpha-K+m)_{K-m}, times Gamma(alpha+1)
    RationalPoly sum;
    for (int m = 0; m <= K; ++m) {
        RationalPoly term = RationalPoly::monomial(m, binomial(K, m));
        if ((K - m) % 2 != 0) term *= Rational(-1);
        for (int i = 0; i < K - m; ++i)
            term = term * RationalPoly{Rational(m - K + i), Rational(-1)};  // -alpha + (m-K+i)
        sum += term;
    }
    // Gamma(alpha+1) = alpha G
    return SymbolicMoment::gamma_multiple(RationalPoly{Rational(0), Rational(1)} * sum);
}

double adjusted_closed_form_value(int k, double alpha) {
    require_alpha(alpha);
    if (k < 2) throw std::out_of_range("adjusted_closed_form_value: defined for k >= 2 only");
    const int K = k - 2;
    const long double a = alpha;
    // (-1)^K (-a-K)_K * 1F1(-K, -a-K; a), the 1F1 terminating after K+1 terms
    long double poch = 1.0L;
    for (int i = 0; i < K; ++i) poch *= (-a - K + i);
    long double f = 0.0L;
    long double term = 1.0L;  // m = 0
    for (int m = 0; m <= K; ++m) {
        f += term;
        term *= (-static_cast<long double>(K) + m) / (-a - K + m) * a / (m + 1.0L);
    }
    long double v = poch * f * specfun::gamma_ld(a + 1.0L);
    if (K % 2 != 0) v = -v;
    return static_cast<double>(v);
}

namespace {

// [mu~_{K+2}, mu~_{K+1}]^T = Gamma(alpha+1) * (B_K ... B_2) * [2 alpha + 1, 1]^T,
// with B_n = [[2 alpha + n, alpha(1-n)], [1, 0]]; empty product = identity.
template <class T, class MakeB>
std::pair<T, T> companion_product_pair(int K, const MakeB& make_b, const T& one, const T& zero) {
    T m00 = one, m01 = zero, m10 = zero, m11 = one;
    for (int n = 2; n <= K; ++n) {
        auto [b00, b01] = make_b(n);
        // M = B_n * M
        T n00 = b00 * m00 + b01 * m10;
        T n01 = b00 * m01 + b01 * m11;
        T n10 = m00;
        T n11 = m01;
        m00 = n00;
        m01 = n01;
        m10 = n10;
        m11 = n11;
    }
    return {m00, m01};  // first row of the product
}

} // namespace

SymbolicMoment adjusted_matrix_product(int k) {
    if (k < 2) throw std::out_of_range("adjusted_matrix_product: defined for k >= 2 only");
    const RationalPoly alpha{Rational(0), Rational(1)};
    const RationalPoly one{Rational(1)};
    const RationalPoly seed0 = RationalPoly{Rational(1), Rational(2)};  // 2 alpha + 1
    auto make_b = [&](int n) {
        return std::pair<RationalPoly, RationalPoly>(RationalPoly{Rational(n), Rational(2)},
                                                     RationalPoly{Rational(0), Rational(1 - n)});
    };
    // k = K+2 -> first component; k = 2 is the seed (empty product, second component)
    const int K = k - 2;
    RationalPoly value;
    if (K < 1) {
        value = one;
    } else {
        auto [r00, r01] = companion_product_pair(K, make_b, one, RationalPoly{});
        value = r00 * seed0 + r01 * one;
    }
    return SymbolicMoment::gamma_multiple(alpha * value);  // Gamma(alpha+1) = alpha G
}

double adjusted_matrix_product_value(int k, double alpha) {
    require_alpha(alpha);
    if (k < 2) throw std::out_of_range("adjusted_matrix_product_value: defined for k >= 2 only");
    auto make_b = [&](int n) {
        return std::pair<long double, long double>(2.0L * alpha + n, alpha * (1.0L - n));
    };
    const int K = k - 2;
    long double value = 1.0L;
    if (K >= 1) {
        auto [r00, r01] = companion_product_pair<long double>(K, make_b, 1.0L, 0.0L);
        value = r00 * (2.0L * alpha + 1.0L) + r01;
    }
    return static_cast<double>(value * specfun::gamma_ld(1.0L + alpha));
}

namespace {

MomentTable adjusted_alt_route_table(int k_max, double alpha, Route route,
                                     double (*entry)(int, double)) {
    require_alpha(alpha);
    if (k_max < 2) throw std::invalid_argument("adjusted route table: k_max >= 2 required");
    auto [m0, m1] = adjusted_seed_moments(alpha);
    MomentTable t;
    t.alpha = alpha;
    t.kind = MomentKind::adjusted;
    t.values = {m0, m1};
    t.route = {Route::closed_form, Route::closed_form};
    for (int k = 2; k <= k_max; ++k) {
        t.values.push_back(entry(k, alpha));
        t.route.push_back(route);
    }
    return t;
}

} // namespace

MomentTable adjusted_closed_form_table(int k_max, double alpha) {
    return adjusted_alt_route_table(k_max, alpha, Route::closed_form, &adjusted_closed_form_value);
}

MomentTable adjusted_matrix_product_table(int k_max, double alpha) {
    return adjusted_alt_route_table(k_max, alpha, Route::matrix_product,
                                    &adjusted_matrix_product_value);
}

double eval(const SymbolicMoment& m, double alpha) {
    require_alpha(alpha);
    const long double a = alpha;
    const long double g = specfun::gamma_ld(a);
    const long double t = seed_mu1_ld(a);
    const long double v = m.gamma_coeff().eval(a) * g + m.t_coeff().eval(a) * t;
    return static_cast<double>(v);
}

double generating_function(double t, double alpha) {
    require_alpha(alpha);
    if (!(std::abs(t) < 1.0)) throw std::domain_error("generating_function: requires |t| < 1");
    const long double a = alpha, lt = t;
    return static_cast<double>(specfun::gamma_ld(a + 1.0L) * std::exp(a * lt) *
                               std::pow(1.0L - lt, -(a + 1.0L)));
}

double generating_function_derivative(double t, double alpha) {
    require_alpha(alpha);
    if (!(std::abs(t) < 1.0)) throw std::domain_error("generating_function: requires |t| < 1");
    const long double a = alpha, lt = t;
    const long double base = specfun::gamma_ld(a + 1.0L) * std::exp(a * lt);
    return static_cast<double>(base * (a * std::pow(1.0L - lt, -(a + 1.0L)) +
                                       (a + 1.0L) * std::pow(1.0L - lt, -(a + 2.0L))));
}

double taylor_coefficient(int k, double alpha) {
    require_alpha(alpha);
    if (k < 0) throw std::invalid_argument("taylor_coefficient: k >= 0 required");
    const long double a = alpha;
    // nu_k = Gamma(a+1) sum_j a^j/j! * (a+1)_{k-j}/(k-j)!
    std::vector<long double> rising(k + 1);
    rising[0] = 1.0L;
    for (int i = 1; i <= k; ++i) rising[i] = rising[i - 1] * (a + i);
    long double sum = 0.0L;
    long double apow = 1.0L;  // a^j / j!
    for (int j = 0; j <= k; ++j) {
        long double fac = 1.0L;
        for (int i = 2; i <= k - j; ++i) fac *= i;
        sum += apow * rising[k - j] / fac;
        apow *= a / (j + 1.0L);
    }
    return static_cast<double>(specfun::gamma_ld(a + 1.0L) * sum);
}

MomentTable canonical_from_adjusted(const MomentTable& adjusted) {
    if (adjusted.kind != MomentKind::adjusted)
        throw std::invalid_argument("canonical_from_adjusted: input must be an adjusted table");
    const double alpha = adjusted.alpha;
    MomentTable t;
    t.alpha = alpha;
    t.kind = MomentKind::canonical;
    const int kmax = adjusted.k_max();
    for (int k = 0; k <= kmax; ++k) {
        long double acc = 0.0L;
        long double pw = 1.0L;  // (-alpha)^{k-m} built from m=k downward
        for (int m = k; m >= 0; --m) {
            acc += static_cast<long double>(binomial(k, m).get_d()) * pw * adjusted.values[m];
            pw *= -alpha;
        }
        t.values.push_back(static_cast<double>(acc));
        t.route.push_back(Route::inversion);
    }
    return t;
}

MomentTable adjusted_from_canonical(const MomentTable& canonical) {
    if (canonical.kind != MomentKind::canonical)
        throw std::invalid_argument("adjusted_from_canonical: input must be a canonical table");
    const double alpha = canonical.alpha;
    MomentTable t;
    t.alpha = alpha;
    t.kind = MomentKind::adjusted;
    const int kmax = canonical.k_max();
    for (int k = 0; k <= kmax; ++k) {
        long double acc = 0.0L;
        long double pw = 1.0L;  // alpha^{k-m}
        for (int m = k; m >= 0; --m) {
            acc += static_cast<long double>(binomial(k, m).get_d()) * pw * canonical.values[m];
            pw *= alpha;
        }
        t.values.push_back(static_cast<double>(acc));
        t.route.push_back(Route::inversion);
    }
    return t;
}

MomentTable canonical_recursion(int k_max, double alpha) {
    require_alpha(alpha);
    if (k_max < 2) throw std::invalid_argument("canonical_recursion: k_max >= 2 required");
    MomentTable seedsrc = canonical_from_adjusted(adjusted_recursion(1, alpha));
    MomentTable t;
    t.alpha = alpha;
    t.kind = MomentKind::canonical;
    std::vector<long double> v = {seedsrc.values[0], seedsrc.values[1]};
    const long double a = alpha;
    for (int k = 0; k + 2 <= k_max; ++k) {
        long double sum = 0.0L;
        long double apow = std::pow(a, static_cast<long double>(k + 1));  // a^{k+1-m}, m = 0
        for (int m = 0; m <= k; ++m) {
            const long double coeff = (2.0L * a + k) * binomial(k + 1, m).get_d() -
                                      a * binomial(k + 2, m).get_d() +
                                      (1.0L - k) * binomial(k, m).get_d();
            sum += coeff * apow * v[m];
            apow /= a;
        }
        sum += (1.0L - a) * k * v[k + 1];
        v.push_back(sum);
    }
    for (long double x : v) {
        t.values.push_back(static_cast<double>(x));
        t.route.push_back(Route::recursion);
    }
    for (int i = 0; i < 2 && i < static_cast<int>(t.route.size()); ++i) t.route[i] = Route::inversion;
    return t;
}

MomentTable moments_from_quadrature(int k_max, double alpha, MomentKind kind,
                                    const quad::QuadratureConfig& cfg) {
    require_alpha(alpha);
    if (k_max < 0) throw std::invalid_argument("moments_from_quadrature: k_max >= 0 required");
    MomentTable t;
    t.alpha = alpha;
    t.kind = kind;
    for (int k = 0; k <= k_max; ++k) {
        Polynomial<double> f;
        if (kind == MomentKind::canonical) {
            f = Polynomial<double>::monomial(k, 1.0);
        } else {
            f = Polynomial<double>{1.0};
            for (int i = 0; i < k; ++i) f = f * Polynomial<double>{alpha, 1.0};
        }
        t.values.push_back(quad::weighted_integral(f, alpha, cfg).value);
        t.route.push_back(Route::quadrature);
    }
    return t;
}

std::string to_json_string(const MomentTable& t, int digits) {
    json j;
    j["alpha"] = t.alpha;
    j["kind"] = to_string(t.kind);
    j["values"] = json::array();
    j["route"] = json::array();
    for (std::size_t i = 0; i < t.values.size(); ++i) {
        j["values"].push_back(json::parse(format_double(t.values[i], digits)));
        j["route"].push_back(to_string(t.route[i]));
    }
    return j.dump();
}

std::string to_csv(const MomentTable& t, int digits) {
    std::ostringstream out;
    out << "k,value,route\n";
    for (std::size_t i = 0; i < t.values.size(); ++i)
        out << i << ',' << format_double(t.values[i], digits) << ',' << to_string(t.route[i]) << '\n';
    return out.str();
}

} // namespace x1lag
