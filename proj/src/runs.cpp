#include "ncheat/runs.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "ncheat/errors.hpp"
#include "ncheat/format.hpp"
#include "ncheat/gaussian_dynamics.hpp"
#include "ncheat/quadrature.hpp"
#include "ncheat/thermo.hpp"

namespace ncheat {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double tau_or_nan(const ThermalPair& pair, double gamma, double omega_B) {
    try {
        return equilibrium_time(pair, gamma, omega_B);
    } catch (const DomainError&) {
        return kNan;
    }
}

double mode_energy(int mode, double t, const ThermalPair& pair, double Gamma) {
    return internal_energy(closed_form_covariance(mode, t, pair, Gamma));
}

}  // namespace

std::string run_simulate(const RunConfig& cfg) {
    const ResolvedRun run = resolve(cfg);
    const double tau = tau_or_nan(run.pair, run.gamma, cfg.omega_B);
    const double t_end = std::isnan(tau) ? cfg.t_max : std::min(cfg.t_max, tau);
    const double e10 = mode_energy(1, 0.0, run.pair, run.Gamma);
    const double e20 = mode_energy(2, 0.0, run.pair, run.Gamma);

    std::ostringstream out;
    out << "t,E1,E2,Q1,Q2,P\n";
    for (int i = 0; i < cfg.steps; ++i) {
        const double t = t_end * i / (cfg.steps - 1);
        const double e1 = mode_energy(1, t, run.pair, run.Gamma);
        const double e2 = mode_energy(2, t, run.pair, run.Gamma);
        out << g15(t) << ',' << g15(e1) << ',' << g15(e2) << ',' << g15(heat_exchanged(e1, e10))
            << ',' << g15(heat_exchanged(e2, e20)) << ',' << g15(heating_power(e1, e10, t)) << '\n';
    }
    out << "# gamma = " << g15(run.gamma) << '\n';
    out << "# Gamma = " << g15(run.Gamma) << '\n';
    out << "# tau = " << g15(tau) << '\n';
    return out.str();
}

std::string run_sweep(const RunConfig& cfg) {
    // The swept deformation comes from the lists; satisfy the scalar
    // requirement with a placeholder so the shared knobs still validate.
    RunConfig base = cfg;
    if (!base.gamma.has_value() && !base.theta.has_value() && !base.eta.has_value())
        base.gamma = 0.0;
    const ResolvedRun run = resolve(base);

    std::vector<double> gammas;
    if (!cfg.gammas.empty()) {
        if (!cfg.thetas.empty() || !cfg.etas.empty())
            throw ConfigError("sweep takes either gammas or the pair (thetas, etas), not both");
        for (double g : cfg.gammas) {
            if (g < 0.0) throw ConfigError("swept gamma values must be nonnegative");
            gammas.push_back(g);
        }
    } else if (!cfg.thetas.empty() && !cfg.etas.empty()) {
        for (double th : cfg.thetas)
            for (double et : cfg.etas)
                gammas.push_back(closed_form_coefficients(run.osc, make_algebra(th, et, cfg.hbar)).gamma);
    } else {
        throw ConfigError("sweep needs a gammas list or both thetas and etas");
    }
    std::stable_sort(gammas.begin(), gammas.end());

    const bool have_temps = run.pair.n_bar > 0.0 && run.pair.m_bar > 0.0;
    const double T1 = have_temps ? temperature_of(run.pair.n_bar, cfg.omega, cfg.hbar, cfg.k_B) : kNan;
    const double T2 = have_temps ? temperature_of(run.pair.m_bar, cfg.omega, cfg.hbar, cfg.k_B) : kNan;

    // rows are independent; compute them concurrently, render in order
    struct Row {
        double Gamma = 0.0, tau = kNan, p_tau = kNan, law = kNan;
        bool flagged = true;
    };
    std::vector<Row> rows(gammas.size());
    const std::ptrdiff_t n = std::ptrdiff_t(gammas.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const double g = gammas[std::size_t(i)];
        Row& row = rows[std::size_t(i)];
        row.Gamma = g + 0.5 * cfg.omega_B;
        row.tau = tau_or_nan(run.pair, g, cfg.omega_B);
        row.flagged = std::isnan(row.tau);
        if (!row.flagged) {
            const double e10 = mode_energy(1, 0.0, run.pair, row.Gamma);
            const double q1 = heat_exchanged(mode_energy(1, row.tau, run.pair, row.Gamma), e10);
            row.p_tau = heating_power(q1 + e10, e10, row.tau);
            if (have_temps) row.law = second_law_functional(q1, T1, T2, cfg.k_B);
        }
    }

    std::ostringstream out;
    out << "gamma,Gamma,tau,P_tau,second_law,no_equilibrium\n";
    for (std::size_t i = 0; i < gammas.size(); ++i) {
        const Row& row = rows[i];
        out << g15(gammas[i]) << ',' << g15(row.Gamma) << ',' << g15(row.tau) << ','
            << g15(row.p_tau) << ',' << g15(row.law) << ',' << (row.flagged ? 1 : 0) << '\n';
    }
    return out.str();
}

WignerGrid run_wigner(const RunConfig& cfg) {
    const ResolvedRun run = resolve(cfg);
    const ThermalCM cm = closed_form_covariance(cfg.mode, cfg.t, run.pair, run.Gamma);
    double w = cfg.window;
    if (w <= 0.0) {
        // default window: six standard deviations of the wider mode, so the
        // two modes of one snapshot share a scale
        const ThermalCM other = closed_form_covariance(cfg.mode == 1 ? 2 : 1, cfg.t, run.pair, run.Gamma);
        const double vmax = std::max(max_abs(cm.matrix()), max_abs(other.matrix()));
        w = 6.0 * std::sqrt(vmax);
    }
    const GridSpec spec{-w, w, -w, w, cfg.nx, cfg.ny};
    return gaussian_grid(cm.matrix(), {0.0, 0.0}, spec, cfg.t);
}

bool VerifyReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

namespace {

struct Suite {
    VerifyReport report;

    // value must stay at or below the threshold
    void at_most(std::string name, double value, double threshold, std::string note = {}) {
        report.checks.push_back({std::move(name), value <= threshold, value, threshold, std::move(note)});
    }
    // value must stay at or above the threshold
    void at_least(std::string name, double value, double threshold, std::string note = {}) {
        report.checks.push_back({std::move(name), value >= threshold, value, threshold, std::move(note)});
    }
    void vacuous(std::string name, std::string note) {
        report.checks.push_back({std::move(name), true, kNan, kNan, std::move(note)});
    }
};

Mat2 scaled_identity_diff(const Mat2& m, double s) {
    return m - Mat2::scaled_identity(s);
}

}  // namespace

VerifyReport run_verify(const RunConfig& cfg) {
    const ResolvedRun run = resolve(cfg);
    Suite s;

    // Structural identities, on the configured point (when the deformation
    // is explicit) and on fixed-seed random parameter draws.
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    double r_alg = 0.0, r_det = 0.0, r_coef = 0.0, r_cross = 0.0, r_comm = 0.0;
    const auto det_residual = [](const LinearMap4& t, const NcAlgebra& alg) {
        return std::abs(det(t) - (1.0 - alg.theta * alg.eta / (alg.hbar * alg.hbar)));
    };
    if (run.algebra) {
        const LinearMap4 t = sw_map_matrix(*run.algebra);
        r_alg = algebra_residual(t, *run.algebra);
        r_det = det_residual(t, *run.algebra);
        r_coef = coefficient_residual(run.osc, *run.algebra);
    }
    for (int i = 0; i < 100; ++i) {
        const NcAlgebra alg = make_algebra(u01(rng), u01(rng), 1.0);
        const OscillatorSpec osc{0.5 + 1.5 * u01(rng), 0.5 + 3.5 * u01(rng), 2.0 * u01(rng)};
        const LinearMap4 t = sw_map_matrix(alg);
        r_alg = std::max(r_alg, algebra_residual(t, alg));
        r_det = std::max(r_det, det_residual(t, alg));
        r_coef = std::max(r_coef, coefficient_residual(osc, alg));
        const QuadForm4 pulled = pullback_quadratic_form(build_nc_quadratic_form(osc), t);
        r_cross = std::max({r_cross, std::abs(pulled.a(0, 1)), std::abs(pulled.a(2, 3))});
        r_comm = std::max(r_comm, parts_commute_check(closed_form_coefficients(osc, alg)));
    }
    s.at_most("algebra_isomorphism", r_alg, 1e-12, "mapped commutators vs deformed algebra, 100 draws");
    s.at_most("map_determinant", r_det, 1e-12, "det T = 1 - theta*eta/hbar^2");
    s.at_most("coefficient_match", r_coef, 1e-10, "closed-form coefficients vs exact pullback");
    s.at_most("same_mode_cross_terms", r_cross, 1e-12, "no q_i p_i terms survive the pullback");
    s.at_most("split_flows_commute", r_comm, 1e-12, "free and coupling flows commute");
    const NcAlgebra flat = make_algebra(0.0, 0.0, cfg.hbar);
    s.at_most("commutative_limit", algebra_residual(sw_map_matrix(flat), flat), 1e-15,
              "map reduces to the identity");

    // Oracle cross-checks on the configured state over one mixing period.
    // Without (theta, eta) the quadrature scalings are free; unit scalings
    // give the same dimensionless moments.
    const CoeffSet coeffs =
        run.coeffs ? *run.coeffs : CoeffSet{1.0, 1.0, run.gamma, run.Gamma};
    const int order = std::max(cfg.order, run.fock.k + run.fock.l + 2);
    const double period = run.Gamma > 0.0 ? 2.0 * std::numbers::pi / run.Gamma : 1.0;
    const QuadForm4 generator =
        run.coeffs ? rescaled_form(*run.coeffs) : rescaled_interaction_form(run.Gamma);
    const CovState init = initial_pair_covariance(run.fock);
    const double tr0 = trace(init.cm);
    const double occ_a = 2.0 * run.fock.k + 1.0;
    const double occ_b = 2.0 * run.fock.l + 1.0;

    double r_oracle = 0.0, r_mix = 0.0, r_scaled = 0.0, r_trace = 0.0;
    double min_eig = std::numeric_limits<double>::infinity();
    const int npts = 50;
    for (int i = 0; i < npts; ++i) {
        const double t = period * i / (npts - 1);
        const auto [m1, m2] = quadrature_local_moments(run.fock, t, coeffs, cfg.hbar, order);
        const CovState ev = evolve_covariance(init, symplectic_propagator(generator, t));
        r_oracle = std::max({r_oracle, max_abs(m1.second - local_block(ev.cm, 1)),
                             max_abs(m2.second - local_block(ev.cm, 2))});
        const double c2 = std::cos(2.0 * run.Gamma * t);
        const double mix1 = 0.5 * (occ_a + occ_b) - 0.5 * (occ_b - occ_a) * c2;
        const double mix2 = 0.5 * (occ_a + occ_b) + 0.5 * (occ_b - occ_a) * c2;
        r_mix = std::max({r_mix, max_abs(scaled_identity_diff(m1.second, mix1)),
                          max_abs(scaled_identity_diff(m2.second, mix2)),
                          max_abs(scaled_identity_diff(local_block(ev.cm, 1), mix1)),
                          max_abs(scaled_identity_diff(local_block(ev.cm, 2), mix2))});
        if (run.fock.k == 0 && run.fock.l == 1) {
            // closed-form covariance family runs at half the mixing angle:
            // closed(2t) must equal the oracles at t, including the energy scale
            const ThermalCM c1 = closed_form_covariance(1, 2.0 * t, run.pair, run.Gamma);
            const ThermalCM c2m = closed_form_covariance(2, 2.0 * t, run.pair, run.Gamma);
            r_scaled = std::max(
                {r_scaled,
                 max_abs(scale_covariance(m1, run.pair.n_bar, cfg.omega, cfg.hbar, 1).matrix() -
                         c1.matrix()),
                 max_abs(scale_covariance(m2, run.pair.m_bar, cfg.omega, cfg.hbar, 2).matrix() -
                         c2m.matrix())});
        }
        min_eig = std::min({min_eig, physicality_check(ev).min_symplectic_eigenvalue,
                            symplectic_eigenvalue(m1.second), symplectic_eigenvalue(m2.second)});
        r_trace = std::max(r_trace, std::abs(trace(ev.cm) - tr0));
    }
    s.at_most("oracle_agreement", r_oracle, 1e-8, "quadrature vs symplectic transport, 50 times");
    s.at_most("mixture_agreement", r_mix, 1e-8, "both oracles vs the two-level mixture blocks");
    if (run.fock.k == 0 && run.fock.l == 1)
        s.at_most("closed_form_agreement", r_scaled, 1e-7,
                  "energy-scaled oracle moments vs closed-form covariance at doubled time");
    s.at_least("physicality", min_eig, 1.0 - 1e-10, "min symplectic eigenvalue across oracle states");
    s.at_most("trace_conserved", r_trace, 1e-10, "total dimensionless variance under transport");

    {
        const CovState below{0.5 * Mat4::identity(), {}, Units::dimensionless};
        const PhysicalityReport rep = physicality_check(below);
        s.report.checks.push_back({"unphysical_rejected", !rep.pass, rep.min_symplectic_eigenvalue,
                                   1.0 - 1e-10, "covariance 0.5 I must fail the check"});
    }

    // Closed-form energy identities.
    {
        ThermalPair eq = run.pair;
        eq.m_bar = eq.n_bar;
        const double sum0 = mode_energy(1, 0.0, eq, run.Gamma) + mode_energy(2, 0.0, eq, run.Gamma);
        double r_sum = 0.0;
        for (int i = 0; i <= 24; ++i) {
            const double t = period * i / 24.0;
            r_sum = std::max(r_sum, std::abs(mode_energy(1, t, eq, run.Gamma) +
                                             mode_energy(2, t, eq, run.Gamma) - sum0));
        }
        s.at_most("energy_sum_conserved", r_sum, 1e-12, "equal occupations");
    }

    try {
        const double tau = equilibrium_time(run.pair, run.gamma, cfg.omega_B);
        const double gap =
            std::abs(mode_energy(1, tau, run.pair, run.Gamma) - mode_energy(2, tau, run.pair, run.Gamma));
        s.at_most("equilibrium_crossing", gap, 1e-10, "E1(tau) = E2(tau)");
    } catch (const DomainError& e) {
        s.vacuous("equilibrium_crossing", std::string("skipped: ") + e.what());
    }

    if (run.pair.n_bar > 0.0 && run.pair.m_bar > 0.0) {
        const double T1 = temperature_of(run.pair.n_bar, cfg.omega, cfg.hbar, cfg.k_B);
        const double T2 = temperature_of(run.pair.m_bar, cfg.omega, cfg.hbar, cfg.k_B);
        double worst = std::numeric_limits<double>::infinity();
        for (double th : {0.0, 0.25, 0.5, 1.0}) {
            for (double et : {0.0, 0.25, 0.5, 1.0}) {
                if (th * et > cfg.hbar * cfg.hbar) continue;
                const double g = closed_form_coefficients(run.osc, make_algebra(th, et, cfg.hbar)).gamma;
                const double Gam = g + 0.5 * cfg.omega_B;
                const double tau = tau_or_nan(run.pair, g, cfg.omega_B);
                if (std::isnan(tau)) continue;
                const double e10 = mode_energy(1, 0.0, run.pair, Gam);
                for (int i = 1; i <= 25; ++i) {
                    const double t = tau * i / 25.0;
                    const double q1 = heat_exchanged(mode_energy(1, t, run.pair, Gam), e10);
                    worst = std::min(worst, second_law_functional(q1, T1, T2, cfg.k_B));
                }
            }
        }
        s.at_least("second_law", worst, -1e-12, "Clausius sign over a deformation grid, t in (0, tau]");
    } else {
        s.vacuous("second_law", "skipped: zero occupation has no finite temperature");
    }

    {
        const GaussHermiteRule rule = gauss_hermite(order);
        double r_norm = 0.0;
        for (double frac : {0.0, 0.37, 0.74}) {
            const MomentSums ms = rotated_fock_moment_sums(run.fock, run.Gamma * frac * period, rule);
            r_norm = std::max(r_norm, std::abs(ms.norm - 1.0));
        }
        s.at_most("wigner_normalized", r_norm, 1e-10, "phase-space integral of the evolved state");
    }

    return s.report;
}

std::string format_verify(const VerifyReport& report) {
    std::ostringstream out;
    int passed = 0;
    for (const CheckResult& c : report.checks) {
        out << (c.pass ? "PASS " : "FAIL ") << std::left << std::setw(26) << c.name << std::right
            << " value=" << std::setw(12) << g15(c.value) << " threshold=" << std::setw(8)
            << g15(c.threshold);
        if (!c.note.empty()) out << "  " << c.note;
        out << '\n';
        if (c.pass) ++passed;
    }
    out << passed << '/' << report.checks.size() << " checks passed\n";
    return out.str();
}

}  // namespace ncheat
