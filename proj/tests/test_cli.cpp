#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#ifndef X1LAG_CLI_PATH
#error "X1LAG_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string out_path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                                 "/x1lag_cli_out.txt";
    const std::string cmd = std::string(X1LAG_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(status), ss.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) out.push_back(field);
    return out;
}

} // namespace

TEST_CASE("moments csv: adjusted recursion table ends with mu~4 = 11") {
    auto r = run("moments --alpha 1 --kind adjusted --kmax 4 --route recursion --format csv");
    REQUIRE(r.exit_code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "k,value,route");
    auto last = split_csv(ls.back());
    REQUIRE(last.size() == 3);
    CHECK(last[0] == "4");
    CHECK(std::abs(std::stod(last[1]) - 11.0) <= 1e-12);
    CHECK(last[2] == "recursion");
}

TEST_CASE("moments csv: mu~2 row is Gamma(2) = 1") {
    auto r = run("moments --alpha 1 --kind adjusted --kmax 2");
    REQUIRE(r.exit_code == 0);
    auto row = split_csv(lines(r.out).back());
    CHECK(row[0] == "2");
    CHECK(std::abs(std::stod(row[1]) - 1.0) <= 1e-13);
}

TEST_CASE("moments rejects nonpositive alpha with exit 1") {
    auto r = run("moments --alpha -1 --kind adjusted --kmax 3");
    CHECK(r.exit_code == 1);
}

TEST_CASE("moments json output parses and round-trips the csv schema") {
    auto rj = run("moments --alpha 0.5 --kind canonical --kmax 6 --format json");
    REQUIRE(rj.exit_code == 0);
    auto j = nlohmann::json::parse(rj.out);
    CHECK(j["kind"] == "canonical");
    CHECK(j["values"].size() == 7);
    CHECK(j["route"][0] == "inversion");

    auto rc = run("moments --alpha 0.5 --kind canonical --kmax 6 --format csv");
    auto ls = lines(rc.out);
    REQUIRE(ls.size() == 8);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto row = split_csv(ls[i]);
        REQUIRE(row.size() == 3);
        CHECK(std::stoul(row[0]) == i - 1);
        CHECK(std::abs(std::stod(row[1]) - j["values"][i - 1].get<double>()) <= 1e-15);
        CHECK(row[2] == j["route"][i - 1].get<std::string>());
    }
}

TEST_CASE("alternative moment routes agree and cross-check against the primary") {
    for (const char* route : {"closed", "matrix", "quadrature"}) {
        auto r = run(std::string("moments --alpha 2 --kind adjusted --kmax 8 --route ") + route);
        CHECK(r.exit_code == 0);
    }
    auto r = run("moments --alpha 2 --kind canonical --kmax 8 --route recursion");
    CHECK(r.exit_code == 0);
    // absurd tolerance forces the disagreement exit
    auto bad = run("moments --alpha 2 --kind adjusted --kmax 8 --route quadrature --tol 1e-17");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("poly: quadratic at alpha 1 is x^2 - 3") {
    auto r = run("poly --n 2 --alpha 1 --path tilde --normalization literature --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["coeffs"].size() == 3);
    CHECK(std::abs(j["coeffs"][0].get<double>() + 3.0) <= 1e-9);
    CHECK(std::abs(j["coeffs"][1].get<double>()) <= 1e-9);
    CHECK(std::abs(j["coeffs"][2].get<double>() - 1.0) <= 1e-9);
    CHECK(j["normalization"] == "literature");

    auto rp = run("poly --n 2 --alpha 1 --format pretty");
    CHECK(lines(rp.out)[0] == "x^2 - 3");
}

TEST_CASE("poly: linear at alpha 2 is a sign of x + 3") {
    auto r = run("poly --n 1 --alpha 2 --format json");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    const double c0 = j["coeffs"][0].get<double>();
    const double c1 = j["coeffs"][1].get<double>();
    CHECK(std::abs(c0 / c1 - 3.0) <= 1e-9);  // root at -3 either way
    CHECK(std::abs(std::abs(c1) - 1.0) <= 1e-9);
    CHECK(j["leading_coefficient"].get<double>() == c1);
}

TEST_CASE("poly: degree zero is refused with exit 1") {
    auto r = run("poly --n 0 --alpha 1");
    CHECK(r.exit_code == 1);
}

TEST_CASE("poly: both paths agree") {
    auto r = run("poly --n 4 --alpha 0.75 --path both --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("max_coeff_rel_diff") != std::string::npos);
}

TEST_CASE("poly: shifted basis output converts back") {
    auto rx = run("poly --n 3 --alpha 1.5 --basis x --format json");
    auto rs = run("poly --n 3 --alpha 1.5 --basis shifted --format json");
    REQUIRE(rx.exit_code == 0);
    REQUIRE(rs.exit_code == 0);
    auto jx = nlohmann::json::parse(rx.out);
    auto js = nlohmann::json::parse(rs.out);
    CHECK(js["basis"] == "shifted");
    // evaluate both forms at a sample point
    const double x = 0.37, alpha = 1.5;
    double vx = 0, vs = 0, pw = 1;
    for (int k = 0; k <= 3; ++k) {
        vx += jx["coeffs"][k].get<double>() * pw;
        pw *= x;
    }
    pw = 1;
    for (int k = 0; k <= 3; ++k) {
        vs += js["coeffs"][k].get<double>() * pw;
        pw *= x + alpha;
    }
    CHECK(std::abs(vx - vs) <= 1e-9 * std::max(1.0, std::abs(vx)));
}

TEST_CASE("verify: eigen residuals vanish") {
    auto r = run("verify --nmax 3 --alpha 1 --checks eigen");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    REQUIRE(j["records"].size() == 3);
    for (const auto& rec : j["records"]) CHECK(rec["residual"].get<double>() <= 1e-10);
}

TEST_CASE("verify: orthogonality and norm at tolerance 1e-7") {
    auto r = run("verify --nmax 4 --alpha 0.5 --checks orthogonality,norm --tol 1e-7");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    CHECK(j["failed"] == 0);
}

TEST_CASE("verify: three-term residuals vanish") {
    auto r = run("verify --checks three_term --nmax 4 --alpha 1");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    for (const auto& rec : j["records"]) CHECK(rec["residual"].get<double>() <= 1e-9);
}

TEST_CASE("verify: full battery over two alphas, records sorted") {
    auto r = run("verify --nmax 3 --alpha 1,2.5");
    REQUIRE(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pass"] == true);
    // records arrive sorted by (check, alpha, n)
    std::string prev_check;
    double prev_alpha = -1;
    int prev_n = -1;
    for (const auto& rec : j["records"]) {
        const std::string check = rec["check"].get<std::string>();
        const double alpha = rec["alpha"].get<double>();
        const int n = rec["n"].get<int>();
        const bool ordered = std::tie(prev_check, prev_alpha, prev_n) <= std::tie(check, alpha, n);
        CHECK(ordered);
        prev_check = check;
        prev_alpha = alpha;
        prev_n = n;
    }
}

TEST_CASE("table compares routes side by side") {
    auto r = run("table --alpha 1 --kind adjusted --kmax 6");
    REQUIRE(r.exit_code == 0);
    auto ls = lines(r.out);
    CHECK(ls[0] == "k,recursion,closed,matrix,max_rel_diff");
    CHECK(ls.size() == 8);
}

TEST_CASE("config file presets are honored and flags win") {
    const std::string cfg_path = "/tmp/x1lag_test_cfg.ini";
    {
        std::ofstream f(cfg_path);
        f << "digits=5\n";
    }
    auto r = run("--config " + cfg_path + " moments --alpha 1 --kind adjusted --kmax 2");
    REQUIRE(r.exit_code == 0);
    auto row = split_csv(lines(r.out)[1]);
    CHECK(row[1].size() <= 8);  // 5 significant digits
    auto r2 = run("--config " + cfg_path + " moments --alpha 1 --kind adjusted --kmax 2 --digits 17");
    auto row2 = split_csv(lines(r2.out)[1]);
    CHECK(row2[1].size() > 8);
}

TEST_CASE("unknown flags exit 1") {
    CHECK(run("moments --alpha 1 --bogus 3").exit_code == 1);
    CHECK(run("nonsense").exit_code == 1);
}
