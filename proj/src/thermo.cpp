#include "ncheat/thermo.hpp"

#include <cmath>

#include "ncheat/errors.hpp"

namespace ncheat {

namespace {

void check_constants(double omega, double hbar, double k_B) {
    if (omega <= 0.0) throw DomainError("omega must be positive");
    if (hbar <= 0.0) throw DomainError("hbar must be positive");
    if (k_B <= 0.0) throw DomainError("k_B must be positive");
}

}  // namespace

double mean_occupation(double T, double omega, double hbar, double k_B) {
    check_constants(omega, hbar, k_B);
    if (T <= 0.0) throw DomainError("temperature must be positive");
    return 1.0 / std::expm1(hbar * omega / (k_B * T));
}

double temperature_of(double n_bar, double omega, double hbar, double k_B) {
    check_constants(omega, hbar, k_B);
    if (n_bar <= 0.0) throw DomainError("occupation must be positive to define a temperature");
    return hbar * omega / (k_B * std::log1p(1.0 / n_bar));
}

ThermalCM closed_form_covariance(int mode, double t, const ThermalPair& pair, double Gamma) {
    if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
    check_constants(pair.omega, pair.hbar, pair.k_B);
    if (pair.n_bar < 0.0 || pair.m_bar < 0.0) throw DomainError("occupations must be nonnegative");
    const double c = std::cos(Gamma * t);
    ThermalCM cm;
    cm.mode = mode;
    cm.t = t;
    if (mode == 1) {
        cm.scale = 0.25 * pair.hbar * pair.omega * (2.0 * pair.n_bar + 1.0);
        cm.block = Mat2::scaled_identity(2.0 - c);
    } else {
        cm.scale = 0.25 * pair.hbar * pair.omega * (2.0 * pair.m_bar + 1.0);
        cm.block = Mat2::scaled_identity(2.0 + c);
    }
    return cm;
}

double internal_energy(const ThermalCM& cm) { return cm.scale * trace(cm.block); }

double heat_exchanged(double E_t, double E_0) { return E_t - E_0; }

double heating_power(double E_t, double E_0, double t) {
    if (t < 0.0) throw DomainError("time must be nonnegative");
    if (t == 0.0) return 0.0;
    return (E_t - E_0) / t;
}

double equilibrium_time(const ThermalPair& pair, double gamma, double omega_B) {
    check_constants(pair.omega, pair.hbar, pair.k_B);
    if (pair.n_bar < 0.0 || pair.m_bar < 0.0) throw DomainError("occupations must be nonnegative");
    if (gamma < 0.0 || omega_B < 0.0) throw DomainError("rates must be nonnegative");
    const double rate = 2.0 * gamma + omega_B;
    if (rate <= 0.0) throw DomainError("mixing rate 2 gamma + omega_B must be positive");
    const double arg = -2.0 * (pair.m_bar - pair.n_bar) / (1.0 + pair.n_bar + pair.m_bar);
    if (arg < -1.0 || arg > 1.0)
        throw NoEquilibrium("local energies never cross for these occupations");
    return 2.0 * std::acos(arg) / rate;
}

double second_law_functional(double Q1, double T1, double T2, double k_B) {
    if (T1 <= 0.0 || T2 <= 0.0) throw DomainError("temperatures must be positive");
    if (k_B <= 0.0) throw DomainError("k_B must be positive");
    return Q1 * (1.0 / (k_B * T1) - 1.0 / (k_B * T2));
}

ThermalCM scale_covariance(const LocalMoments& moments, double occupation, double omega,
                           double hbar, int mode) {
    if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
    check_constants(omega, hbar, 1.0);
    if (occupation < 0.0) throw DomainError("occupation must be nonnegative");
    ThermalCM cm;
    cm.block = moments.second;
    cm.scale = 0.25 * hbar * omega * (2.0 * occupation + 1.0);
    cm.mode = mode;
    cm.t = moments.t;
    return cm;
}

}  // namespace ncheat
