#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ncheat/errors.hpp"
#include "ncheat/runs.hpp"

using namespace ncheat;

namespace {

RunConfig plotted_config(double gamma) {
    RunConfig cfg;
    cfg.gamma = gamma;
    cfg.n_bar = 2.0;
    cfg.m_bar = 4.0;
    return cfg;
}

std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> lines;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#' && (std::isdigit(line[0]) || line[0] == '-' ||
                                                line.compare(0, 3, "nan") == 0))
            lines.push_back(line);
    return lines;
}

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(std::stod(field));
    return out;
}

}  // namespace

TEST_CASE("config keys parse scalars, options and lists") {
    RunConfig cfg;
    set_config_key(cfg, "omega", "2.5");
    set_config_key(cfg, "gamma", "0.25");
    set_config_key(cfg, "steps", "11");
    set_config_key(cfg, "gammas", "0,0.1,0.5");
    CHECK(cfg.omega == 2.5);
    CHECK(cfg.gamma.has_value());
    CHECK(*cfg.gamma == 0.25);
    CHECK(cfg.steps == 11);
    REQUIRE(cfg.gammas.size() == 3);
    CHECK(cfg.gammas[1] == 0.1);

    CHECK_THROWS_AS(set_config_key(cfg, "omgea", "1.0"), ConfigError);
    CHECK_THROWS_AS(set_config_key(cfg, "omega", "fast"), ConfigError);
    CHECK_THROWS_AS(set_config_key(cfg, "steps", "2.5x"), ConfigError);
}

TEST_CASE("config files support comments and blank lines") {
    const char* path = "ncheat_test_config.tmp";
    {
        std::ofstream out(path);
        out << "# plotted parameter set\n\n";
        out << "gamma = 0.5\n";
        out << "n_bar = 2   # cold mode\n";
        out << "m_bar=4\n";
    }
    RunConfig cfg;
    apply_config_file(cfg, path);
    CHECK(*cfg.gamma == 0.5);
    CHECK(*cfg.n_bar == 2.0);
    CHECK(*cfg.m_bar == 4.0);
    std::remove(path);

    CHECK_THROWS_AS(apply_config_file(cfg, "does_not_exist.tmp"), ConfigError);

    {
        std::ofstream out(path);
        out << "omega 4\n";  // missing '='
    }
    CHECK_THROWS_AS(apply_config_file(cfg, path), ConfigError);
    std::remove(path);
}

TEST_CASE("resolve derives the mixing rate from either deformation input") {
    const ResolvedRun direct = resolve(plotted_config(0.5));
    CHECK(direct.gamma == 0.5);
    CHECK(direct.Gamma == 1.0);
    CHECK_FALSE(direct.algebra.has_value());
    CHECK_FALSE(direct.coeffs.has_value());
    CHECK(direct.pair.n_bar == 2.0);
    CHECK(direct.fock.k == 0);
    CHECK(direct.fock.l == 1);

    RunConfig cfg;
    cfg.theta = 0.0;
    cfg.eta = 1.0;
    cfg.n_bar = 2.0;
    cfg.m_bar = 4.0;
    const ResolvedRun mapped = resolve(cfg);
    REQUIRE(mapped.coeffs.has_value());
    CHECK(std::abs(mapped.gamma - 0.5) < 1e-15);
    CHECK(std::abs(mapped.Gamma - 1.0) < 1e-15);
    CHECK(mapped.algebra.has_value());
}

TEST_CASE("resolve rejects over- and under-specified deformations") {
    RunConfig cfg = plotted_config(0.5);
    cfg.theta = 0.1;
    cfg.eta = 0.1;
    CHECK_THROWS_AS(resolve(cfg), ConfigError);  // gamma and (theta, eta)

    RunConfig partial = plotted_config(0.5);
    partial.gamma.reset();
    partial.theta = 0.1;
    CHECK_THROWS_AS(resolve(partial), ConfigError);  // theta without eta

    RunConfig none = plotted_config(0.5);
    none.gamma.reset();
    CHECK_THROWS_AS(resolve(none), ConfigError);

    RunConfig invalid = plotted_config(0.5);
    invalid.gamma = -0.1;
    CHECK_THROWS_AS(resolve(invalid), ConfigError);
}

TEST_CASE("resolve handles bath state alternatives") {
    RunConfig cfg = plotted_config(0.5);
    cfg.T1 = 9.865213849505727;  // the occupation-2 temperature at omega = 4
    CHECK_THROWS_AS(resolve(cfg), ConfigError);  // occupations and temperatures

    RunConfig temps = plotted_config(0.5);
    temps.n_bar.reset();
    temps.m_bar.reset();
    temps.T1 = 9.865213849505727;
    temps.T2 = 17.925680470898197;
    const ResolvedRun run = resolve(temps);
    CHECK(std::abs(run.pair.n_bar - 2.0) < 1e-12);
    CHECK(std::abs(run.pair.m_bar - 4.0) < 1e-12);

    RunConfig missing = plotted_config(0.5);
    missing.m_bar.reset();
    CHECK_THROWS_AS(resolve(missing), ConfigError);

    RunConfig negative = plotted_config(0.5);
    negative.n_bar = -1.0;
    CHECK_THROWS_AS(resolve(negative), ConfigError);
}

TEST_CASE("resolve propagates impossible deformations and bad labels") {
    RunConfig cfg;
    cfg.theta = 1.2;
    cfg.eta = 1.0;
    cfg.n_bar = 2.0;
    cfg.m_bar = 4.0;
    CHECK_THROWS_AS(resolve(cfg), NoRealScaling);

    RunConfig bad_fock = plotted_config(0.5);
    bad_fock.k = -1;
    CHECK_THROWS_AS(resolve(bad_fock), ConfigError);

    RunConfig bad_steps = plotted_config(0.5);
    bad_steps.steps = 1;
    CHECK_THROWS_AS(resolve(bad_steps), ConfigError);
}

TEST_CASE("simulate traces the plotted energies to their crossing") {
    const std::string csv = run_simulate(plotted_config(0.0));
    CHECK(csv.rfind("t,E1,E2,Q1,Q2,P\n", 0) == 0);
    CHECK(csv.find("# gamma = 0\n") != std::string::npos);
    CHECK(csv.find("# Gamma = 0.5\n") != std::string::npos);
    CHECK(csv.find("# tau = 4.35808381141021\n") != std::string::npos);

    const auto rows = data_lines(csv);
    REQUIRE(rows.size() == 101);
    const auto first = parse_row(rows.front());
    REQUIRE(first.size() == 6);
    CHECK(first[0] == 0.0);
    CHECK(first[1] == 10.0);
    CHECK(first[2] == 54.0);
    CHECK(first[3] == 0.0);
    CHECK(first[4] == 0.0);
    CHECK(first[5] == 0.0);

    const auto last = parse_row(rows.back());
    CHECK(std::abs(last[0] - 4.3580838114102125) < 1e-12);
    CHECK(std::abs(last[1] - 180.0 / 7.0) < 1e-10);
    CHECK(std::abs(last[2] - 180.0 / 7.0) < 1e-10);
    CHECK(std::abs(last[3] - 110.0 / 7.0) < 1e-10);
    CHECK(std::abs(last[4] + 198.0 / 7.0) < 1e-10);
    CHECK(std::abs(last[5] - 3.6057786849218028) < 1e-10);

    // energies stay inside the initial bracket on the way there
    for (const auto& line : rows) {
        const auto row = parse_row(line);
        CHECK(row[1] >= 10.0 - 1e-12);
        CHECK(row[2] <= 54.0 + 1e-12);
        CHECK(row[1] <= row[2] + 1e-12);
    }
}

TEST_CASE("simulate output is deterministic and honors t_max") {
    const std::string a = run_simulate(plotted_config(0.1));
    const std::string b = run_simulate(plotted_config(0.1));
    CHECK(a == b);

    RunConfig cfg = plotted_config(0.1);
    cfg.t_max = 2.0;
    cfg.steps = 21;
    const auto rows = data_lines(run_simulate(cfg));
    REQUIRE(rows.size() == 21);
    CHECK(parse_row(rows.back())[0] == 2.0);
}

TEST_CASE("simulate conserves the energy sum for equal occupations") {
    RunConfig cfg = plotted_config(0.2);
    cfg.m_bar = 2.0;
    const auto rows = data_lines(run_simulate(cfg));
    // E1(0) + E2(0) = (hbar omega / 2)(2 n_bar + 1)(1 + 3) = 40
    for (const auto& line : rows) {
        const auto row = parse_row(line);
        CHECK(std::abs(row[1] + row[2] - 40.0) < 1e-12);
    }
}

TEST_CASE("sweep emits sorted rows with the frozen crossing times") {
    RunConfig cfg = plotted_config(0.0);
    cfg.gamma.reset();
    cfg.gammas = {0.5, 0.0, 0.1};
    const std::string csv = run_sweep(cfg);
    CHECK(csv.rfind("gamma,Gamma,tau,P_tau,second_law,no_equilibrium\n", 0) == 0);
    const auto rows = data_lines(csv);
    REQUIRE(rows.size() == 3);
    const auto r0 = parse_row(rows[0]);
    const auto r1 = parse_row(rows[1]);
    const auto r2 = parse_row(rows[2]);
    CHECK(r0[0] == 0.0);
    CHECK(r1[0] == 0.1);
    CHECK(r2[0] == 0.5);
    CHECK(std::abs(r0[2] - 4.3580838114102125) < 1e-12);
    CHECK(std::abs(r1[2] - 3.6317365095085106) < 1e-12);
    CHECK(std::abs(r2[2] - 2.1790419057051063) < 1e-12);
    CHECK(r0[3] < r1[3]);
    CHECK(r1[3] < r2[3]);
    CHECK(r0[4] >= 0.0);
    CHECK(r0[5] == 0.0);
    CHECK(r2[5] == 0.0);
    CHECK(run_sweep(cfg) == csv);  // deterministic
}

TEST_CASE("sweep expands a deformation grid into coupling rows") {
    RunConfig cfg = plotted_config(0.0);
    cfg.gamma.reset();
    cfg.thetas = {0.0, 0.5};
    cfg.etas = {0.25, 0.75};
    const auto rows = data_lines(run_sweep(cfg));
    REQUIRE(rows.size() == 4);
    double prev = -1.0;
    for (const auto& line : rows) {
        const double g = parse_row(line)[0];
        CHECK(g >= prev);
        prev = g;
    }
}

TEST_CASE("sweep flags states that never cross") {
    RunConfig cfg = plotted_config(0.0);
    cfg.gamma.reset();
    cfg.n_bar = 0.0;  // empty cold mode: no finite-temperature crossing
    cfg.gammas = {0.0, 0.5};
    const auto rows = data_lines(run_sweep(cfg));
    REQUIRE(rows.size() == 2);
    for (const auto& line : rows) {
        const auto row = parse_row(line);
        CHECK(std::isnan(row[2]));
        CHECK(std::isnan(row[3]));
        CHECK(std::isnan(row[4]));
        CHECK(row[5] == 1.0);
    }
}

TEST_CASE("sweep validates its point lists") {
    RunConfig cfg = plotted_config(0.0);
    cfg.gamma.reset();
    CHECK_THROWS_AS(run_sweep(cfg), ConfigError);  // no lists at all
    cfg.gammas = {0.1};
    cfg.thetas = {0.1};
    cfg.etas = {0.1};
    CHECK_THROWS_AS(run_sweep(cfg), ConfigError);  // both kinds
    cfg.thetas.clear();
    cfg.etas.clear();
    cfg.gammas = {-0.5};
    CHECK_THROWS_AS(run_sweep(cfg), ConfigError);
}

TEST_CASE("wigner snapshot renders the requested mode") {
    RunConfig cfg = plotted_config(0.5);
    const WignerGrid grid = run_wigner(cfg);
    REQUIRE(grid.values.size() == 201u * 201u);
    // auto window covers the wider (hot) mode: 6 sqrt(27)
    CHECK(std::abs(grid.spec.x_max - 31.17691453623979) < 1e-12);
    CHECK(grid.spec.x_min == -grid.spec.x_max);
    CHECK(std::abs(grid.values[100 * 201 + 100] - 1.0 / (10.0 * M_PI)) < 1e-12);

    cfg.mode = 2;
    const WignerGrid hot = run_wigner(cfg);
    CHECK(std::abs(hot.values[100 * 201 + 100] - 1.0 / (54.0 * M_PI)) < 1e-12);

    cfg.mode = 1;
    cfg.window = 10.0;
    const WignerGrid fixed = run_wigner(cfg);
    CHECK(fixed.spec.x_max == 10.0);
}

TEST_CASE("wigner modes look identical at the crossing time") {
    RunConfig cfg = plotted_config(0.5);
    cfg.t = 2.1790419057051063;
    cfg.nx = cfg.ny = 51;
    const WignerGrid m1 = run_wigner(cfg);
    cfg.mode = 2;
    const WignerGrid m2 = run_wigner(cfg);
    double worst = 0.0;
    for (std::size_t i = 0; i < m1.values.size(); ++i)
        worst = std::max(worst, std::abs(m1.values[i] - m2.values[i]));
    CHECK(worst < 1e-12);
}

TEST_CASE("verification passes on the mapped deformation point") {
    RunConfig cfg;
    cfg.theta = 0.75;
    cfg.eta = 1.0;
    cfg.n_bar = 2.0;
    cfg.m_bar = 4.0;
    const VerifyReport report = run_verify(cfg);
    CHECK(report.checks.size() == 16);
    CHECK(report.all_pass());
    const std::string text = format_verify(report);
    CHECK(text.find("PASS algebra_isomorphism") != std::string::npos);
    CHECK(text.find("16/16 checks passed") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("verification passes in direct-coupling mode and for a swapped pair") {
    RunConfig direct = plotted_config(0.5);
    CHECK(run_verify(direct).all_pass());

    RunConfig swapped = plotted_config(0.5);
    swapped.k = 1;
    swapped.l = 0;
    const VerifyReport report = run_verify(swapped);
    CHECK(report.checks.size() == 15);  // no closed-form bridge for (1, 0)
    CHECK(report.all_pass());
}
