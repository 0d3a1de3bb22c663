// Command-line front end: moment tables, polynomial coefficients, and
// verification reports for the X1-Laguerre family.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "x1lag/errors.hpp"
#include "x1lag/exact.hpp"
#include "x1lag/io.hpp"
#include "x1lag/moments.hpp"
#include "x1lag/polys.hpp"
#include "x1lag/quadrature.hpp"
#include "x1lag/specfun.hpp"

using json = nlohmann::json;
using namespace x1lag;

namespace {

struct GlobalOpts {
    double tol = 1e-8;        // verification / route-agreement tolerance
    double quad_tol = 1e-10;  // oracle tolerance
    std::string quad_strategy = "tanhsinh";
    int digits = 17;

    quad::QuadratureConfig quad_config() const {
        quad::QuadratureConfig cfg = quad::QuadratureConfig::defaults();
        cfg.target_rel_tol = quad_tol;
        cfg.strategy = quad_strategy == "gausslaguerre" ? quad::Strategy::gauss_laguerre
                                                        : quad::Strategy::split_tanh_sinh;
        return cfg;
    }
};

MomentTable compute_table(const std::string& kind, const std::string& route, int kmax, double alpha,
                          const GlobalOpts& g) {
    if (kind == "adjusted") {
        if (route == "recursion") return adjusted_recursion(kmax, alpha);
        if (route == "closed") return adjusted_closed_form_table(kmax, alpha);
        if (route == "matrix") return adjusted_matrix_product_table(kmax, alpha);
        if (route == "quadrature")
            return moments_from_quadrature(kmax, alpha, MomentKind::adjusted, g.quad_config());
        throw CLI::ValidationError("--route", "unknown adjusted route: " + route);
    }
    if (route == "inversion") return canonical_from_adjusted(adjusted_recursion(kmax, alpha));
    if (route == "recursion") return canonical_recursion(std::max(kmax, 2), alpha);
    if (route == "quadrature")
        return moments_from_quadrature(kmax, alpha, MomentKind::canonical, g.quad_config());
    throw CLI::ValidationError("--route", "unknown canonical route: " + route);
}

// Largest relative gap between two tables.
double table_diff(const MomentTable& a, const MomentTable& b) {
    double worst = 0;
    for (std::size_t i = 0; i < a.values.size() && i < b.values.size(); ++i) {
        const double scale = std::max({std::abs(a.values[i]), std::abs(b.values[i]), 1e-300});
        worst = std::max(worst, std::abs(a.values[i] - b.values[i]) / scale);
    }
    return worst;
}

int cmd_moments(const std::string& kind, const std::string& route, int kmax, double alpha,
                const std::string& format, const GlobalOpts& g) {
    MomentTable t = compute_table(kind, route, kmax, alpha, g);

    // cross-check against the designated primary route
    const std::string primary = kind == "adjusted" ? "recursion" : "inversion";
    if (route != primary && kmax >= 2) {
        MomentTable ref = compute_table(kind, primary, kmax, alpha, g);
        const double diff = table_diff(t, ref);
        if (diff > g.tol) {
            std::cerr << "route disagreement: " << route << " vs " << primary << " max rel diff "
                      << format_double(diff, 3) << " > tol " << format_double(g.tol, 3) << "\n";
            for (int k = 0; k <= t.k_max() && k <= ref.k_max(); ++k)
                std::cerr << "  k=" << k << " " << route << "=" << format_double(t.values[k], 17)
                          << " " << primary << "=" << format_double(ref.values[k], 17) << "\n";
            return 2;
        }
    }
    if (format == "json")
        std::cout << to_json_string(t, g.digits) << "\n";
    else
        std::cout << to_csv(t, g.digits);
    return 0;
}

int cmd_table(const std::string& kind, int kmax, double alpha, bool with_quadrature,
              const GlobalOpts& g) {
    std::vector<std::string> routes =
        kind == "adjusted" ? std::vector<std::string>{"recursion", "closed", "matrix"}
                           : std::vector<std::string>{"inversion", "recursion"};
    if (with_quadrature) routes.push_back("quadrature");
    std::vector<MomentTable> tables;
    for (const auto& r : routes) tables.push_back(compute_table(kind, r, std::max(kmax, 2), alpha, g));

    std::cout << "k";
    for (const auto& r : routes) std::cout << ',' << r;
    std::cout << ",max_rel_diff\n";
    double worst = 0;
    for (int k = 0; k <= kmax; ++k) {
        std::cout << k;
        double lo = tables[0].values[k], hi = lo;
        for (const auto& t : tables) {
            std::cout << ',' << format_double(t.values[k], g.digits);
            lo = std::min(lo, t.values[k]);
            hi = std::max(hi, t.values[k]);
        }
        const double diff = (hi - lo) / std::max({std::abs(hi), std::abs(lo), 1e-300});
        worst = std::max(worst, diff);
        std::cout << ',' << format_double(diff, 3) << "\n";
    }
    if (worst > g.tol) {
        std::cerr << "route disagreement: max rel diff " << format_double(worst, 3) << " > tol "
                  << format_double(g.tol, 3) << "\n";
        return 2;
    }
    return 0;
}

int cmd_poly(int n, double alpha, const std::string& path, const std::string& basis,
             const std::string& normalization, double K_raw, const std::string& format,
             const GlobalOpts& g) {
    if (n < 1) throw std::domain_error("poly: no degree-0 member; n >= 1 required");
    const NormalizationKind kind =
        normalization == "raw" ? NormalizationKind::raw : NormalizationKind::literature;

    auto emit = [&](const X1Polynomial& p) {
        if (format == "pretty") {
            std::cout << pretty(basis == "x" ? p.in_x : p.shifted, std::min(g.digits, 15)) << "\n";
        } else if (format == "csv") {
            const Polynomial<double>& src = basis == "x" ? p.in_x : p.shifted;
            std::cout << "k,coeff\n";
            for (int k = 0; k <= p.n; ++k)
                std::cout << k << ',' << format_double(src[k], g.digits) << "\n";
        } else {
            std::cout << to_json_string(p, basis, g.digits) << "\n";
        }
    };

    if (path == "both") {
        X1Polynomial pa = build_x1(n, alpha, MatrixFlavor::A, kind, K_raw);
        X1Polynomial pt = build_x1(n, alpha, MatrixFlavor::A_tilde, kind, K_raw);
        double worst = 0;
        for (int k = 0; k <= n; ++k) {
            const double scale = std::max({std::abs(pa.in_x[k]), std::abs(pt.in_x[k]), 1e-300});
            worst = std::max(worst, std::abs(pa.in_x[k] - pt.in_x[k]) / scale);
        }
        emit(pa);
        emit(pt);
        std::cout << "max_coeff_rel_diff," << format_double(worst, 3) << "\n";
        if (worst > g.tol) {
            std::cerr << "representation disagreement: " << format_double(worst, 3) << " > tol "
                      << format_double(g.tol, 3) << "\n";
            return 2;
        }
        return 0;
    }
    const MatrixFlavor flavor = path == "a" ? MatrixFlavor::A : MatrixFlavor::A_tilde;
    emit(build_x1(n, alpha, flavor, kind, K_raw));
    return 0;
}

struct VerifyRecord {
    std::string check;
    int n;
    double alpha;
    double residual;
    bool pass;
};

void run_check(const std::string& check, int nmax, double alpha, double tol,
               const quad::QuadratureConfig& qcfg, std::vector<VerifyRecord>& out) {
    std::vector<X1Polynomial> L(nmax + 3);
    for (int n = 1; n <= nmax + 2; ++n) L[n] = build_x1(n, alpha, MatrixFlavor::A_tilde);

    if (check == "eigen") {
        for (int n = 1; n <= nmax; ++n) {
            Polynomial<double> r =
                apply_operator(L[n].in_x, alpha) - static_cast<double>(n - 1) * L[n].in_x;
            const double res = max_abs_coeff(r) / std::max(1.0, max_abs_coeff(L[n].in_x));
            out.push_back({check, n, alpha, res, res <= tol});
        }
    } else if (check == "orthogonality") {
        std::vector<double> norms(nmax + 1);
        for (int n = 1; n <= nmax; ++n)
            norms[n] = std::sqrt(quad::inner_product(L[n].in_x, L[n].in_x, alpha, qcfg).value);
        for (int m = 1; m <= nmax; ++m)
            for (int n = m + 1; n <= nmax; ++n) {
                const double ip = quad::inner_product(L[m].in_x, L[n].in_x, alpha, qcfg).value;
                const double res = std::abs(ip) / (norms[m] * norms[n]);
                out.push_back({check, n, alpha, res, res <= tol});
            }
    } else if (check == "norm") {
        for (int n = 1; n <= nmax; ++n) {
            const double got = quad::inner_product(L[n].in_x, L[n].in_x, alpha, qcfg).value;
            double expect = specfun::gamma(alpha + n - 1) * (alpha + n);
            for (int j = 2; j < n; ++j) expect /= j;
            const double res = std::abs(got - expect) / expect;
            out.push_back({check, n, alpha, res, res <= tol});
        }
    } else if (check == "three_term") {
        for (int n = 1; n <= nmax; ++n) {
            Polynomial<double> r =
                three_term_residual(L[n].in_x, L[n + 1].in_x, L[n + 2].in_x, n, alpha);
            double scale = 0;
            for (int j = n; j <= n + 2; ++j) scale = std::max(scale, max_abs_coeff(L[j].in_x));
            const double res =
                max_abs_coeff(r) / (scale * (1 + alpha) * (1 + alpha) * (n + alpha + 1));
            out.push_back({check, n, alpha, res, res <= tol});
        }
    } else if (check == "exceptional") {
        for (int n = 1; n <= nmax; ++n) {
            const double res = std::abs(exceptional_condition_residual(L[n].in_x, alpha)) /
                               std::max(1.0, max_abs_coeff(L[n].in_x));
            out.push_back({check, n, alpha, res, res <= tol});
        }
        // degree-0 exclusion: the constant polynomial has residual exactly -1
        const double c = exceptional_condition_residual(Polynomial<double>{1.0}, alpha);
        out.push_back({check + "_constant", 0, alpha, std::abs(c + 1.0), std::abs(c + 1.0) <= tol});
    } else if (check == "representation") {
        for (int n = 1; n <= nmax; ++n) {
            X1Polynomial pa = build_x1(n, alpha, MatrixFlavor::A);
            double worst = 0;
            for (int k = 0; k <= n; ++k) {
                const double scale = std::max({std::abs(pa.in_x[k]), std::abs(L[n].in_x[k]), 1e-300});
                worst = std::max(worst, std::abs(pa.in_x[k] - L[n].in_x[k]) / scale);
            }
            out.push_back({check, n, alpha, worst, worst <= tol});
        }
    } else if (check == "moments") {
        const int kmax = std::max(4, 2 * nmax);
        MomentTable rec = adjusted_recursion(kmax, alpha);
        const double d1 = table_diff(rec, adjusted_closed_form_table(kmax, alpha));
        const double d2 = table_diff(rec, adjusted_matrix_product_table(kmax, alpha));
        MomentTable inv = canonical_from_adjusted(rec);
        const double d3 = table_diff(inv, canonical_recursion(kmax, alpha));
        const double res = std::max({d1, d2, d3});
        out.push_back({check, kmax, alpha, res, res <= tol});
    } else {
        throw std::invalid_argument("unknown check: " + check);
    }
}

int cmd_verify(int nmax, const std::vector<double>& alphas, std::vector<std::string> checks,
               const GlobalOpts& g) {
    if (checks.empty() || (checks.size() == 1 && checks[0] == "all"))
        checks = {"eigen", "orthogonality", "norm", "three_term", "exceptional", "representation",
                  "moments"};

    // independent (check, alpha) cells; fan out, then order-independent assembly
    std::vector<std::future<std::vector<VerifyRecord>>> futures;
    for (const auto& check : checks)
        for (double alpha : alphas)
            futures.push_back(std::async(std::launch::async, [&g, check, nmax, alpha] {
                std::vector<VerifyRecord> recs;
                run_check(check, nmax, alpha, g.tol, g.quad_config(), recs);
                return recs;
            }));

    std::vector<VerifyRecord> records;
    for (auto& f : futures) {
        auto r = f.get();
        records.insert(records.end(), r.begin(), r.end());
    }
    std::sort(records.begin(), records.end(), [](const VerifyRecord& a, const VerifyRecord& b) {
        return std::tie(a.check, a.alpha, a.n) < std::tie(b.check, b.alpha, b.n);
    });

    json report;
    report["records"] = json::array();
    int failed = 0;
    for (const auto& r : records) {
        report["records"].push_back({{"check", r.check},
                                     {"n", r.n},
                                     {"alpha", r.alpha},
                                     {"residual", r.residual},
                                     {"pass", r.pass}});
        if (!r.pass) ++failed;
    }
    report["failed"] = failed;
    report["pass"] = failed == 0;
    std::cout << report.dump(2) << "\n";
    return failed == 0 ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"X1-Laguerre polynomials and moments"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    app.set_config("--config")->envname("X1LAG_CONFIG");

    GlobalOpts g;
    app.add_option("--tol", g.tol, "verification/route-agreement tolerance")->capture_default_str();
    app.add_option("--quad-tol", g.quad_tol, "oracle quadrature relative tolerance")
        ->capture_default_str();
    app.add_option("--quad-strategy", g.quad_strategy, "tanhsinh | gausslaguerre")
        ->check(CLI::IsMember({"tanhsinh", "gausslaguerre"}))
        ->capture_default_str();
    app.add_option("--digits", g.digits, "significant digits in numeric output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    double alpha = 1.0;
    int kmax = 8;
    std::string kind = "adjusted", route, format = "csv";

    auto* mom = app.add_subcommand("moments", "emit a moment table");
    mom->add_option("--alpha", alpha, "weight parameter (> 0)")->required();
    mom->add_option("--kind", kind)->check(CLI::IsMember({"adjusted", "canonical"}));
    mom->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
    mom->add_option("--route", route,
                    "adjusted: recursion|closed|matrix|quadrature; "
                    "canonical: inversion|recursion|quadrature");
    mom->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

    auto* tab = app.add_subcommand("table", "side-by-side route comparison");
    bool with_quadrature = false;
    tab->add_option("--alpha", alpha, "weight parameter (> 0)")->required();
    tab->add_option("--kind", kind)->check(CLI::IsMember({"adjusted", "canonical"}));
    tab->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
    tab->add_flag("--quadrature", with_quadrature, "include the oracle column");

    auto* pol = app.add_subcommand("poly", "construct one polynomial");
    int n = 1;
    std::string path = "tilde", basis = "x", normalization = "literature", pformat = "json";
    double K_raw = 1.0;
    pol->add_option("--n", n, "degree (>= 1)")->required();
    pol->add_option("--alpha", alpha, "weight parameter (> 0)")->required();
    pol->add_option("--path", path)->check(CLI::IsMember({"a", "tilde", "both"}));
    pol->add_option("--basis", basis)->check(CLI::IsMember({"x", "shifted"}));
    pol->add_option("--normalization", normalization)->check(CLI::IsMember({"literature", "raw"}));
    pol->add_option("--K", K_raw, "constant for --normalization raw (nonzero)");
    pol->add_option("--format", pformat)->check(CLI::IsMember({"json", "csv", "pretty"}));

    auto* ver = app.add_subcommand("verify", "run invariant checks, JSON report");
    int nmax = 3;
    std::string alpha_list = "1";
    std::string checks_list = "all";
    ver->add_option("--nmax", nmax, "largest degree checked (>= 1)");
    ver->add_option("--alpha", alpha_list, "comma-separated alpha values");
    ver->add_option("--checks", checks_list,
                    "comma list: eigen,orthogonality,norm,three_term,exceptional,"
                    "representation,moments (or all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (mom->parsed()) {
            if (route.empty()) route = kind == "adjusted" ? "recursion" : "inversion";
            return cmd_moments(kind, route, kmax, alpha, format, g);
        }
        if (tab->parsed()) return cmd_table(kind, kmax, alpha, with_quadrature, g);
        if (pol->parsed()) return cmd_poly(n, alpha, path, basis, normalization, K_raw, pformat, g);
        if (ver->parsed()) {
            if (nmax < 1) throw std::domain_error("verify: nmax >= 1 required");
            std::vector<double> alphas;
            std::stringstream ss(alpha_list);
            std::string item;
            while (std::getline(ss, item, ',')) alphas.push_back(std::stod(item));
            if (alphas.empty()) alphas.push_back(1.0);
            std::vector<std::string> checks;
            std::stringstream cs(checks_list);
            while (std::getline(cs, item, ',')) checks.push_back(item);
            return cmd_verify(nmax, alphas, checks, g);
        }
    } catch (const std::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 1;
    } catch (const std::out_of_range& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
