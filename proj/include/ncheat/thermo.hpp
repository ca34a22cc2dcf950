#pragma once

#include "ncheat/linalg.hpp"
#include "ncheat/quadrature.hpp"

namespace ncheat {

/// Occupations of the two thermal modes and the shared physical constants.
struct ThermalPair {
    double n_bar = 0.0;  // mode 1
    double m_bar = 0.0;  // mode 2
    double omega = 1.0;
    double hbar = 1.0;
    double k_B = 1.0;
};

/// Bose-Einstein occupation 1 / (exp(hbar omega / k_B T) - 1).
double mean_occupation(double T, double omega, double hbar, double k_B);

/// Inverse map: T = hbar omega / (k_B ln(1 + 1/n_bar)). Requires n_bar > 0.
double temperature_of(double n_bar, double omega, double hbar, double k_B);

/// Energy-scaled single-mode covariance: matrix() = scale * block with
/// scale = (hbar omega / 4)(2 occupation + 1). block is dimensionless
/// (identity for a vacuum at rest).
struct ThermalCM {
    Mat2 block = Mat2::identity();
    double scale = 0.0;
    int mode = 1;
    double t = 0.0;

    Mat2 matrix() const { return scale * block; }
};

/// Closed-form covariance of one mode of the coupled thermal pair:
///
///   mode 1: scale = (hbar omega / 4)(2 n_bar + 1), block = (2 - cos(Gamma t)) I
///   mode 2: scale = (hbar omega / 4)(2 m_bar + 1), block = (2 + cos(Gamma t)) I
///
/// The mixing rate Gamma enters only through cos(Gamma t).
ThermalCM closed_form_covariance(int mode, double t, const ThermalPair& pair, double Gamma);

/// E = trace of the energy-scaled covariance matrix.
double internal_energy(const ThermalCM& cm);

/// Heat absorbed between energies E_0 and E_t.
double heat_exchanged(double E_t, double E_0);

/// Average heating power (E_t - E_0) / t; defined as 0 at t = 0.
double heating_power(double E_t, double E_0, double t);

/// First time the two local energies cross:
///
///   cos(Gamma tau) = -2 (m_bar - n_bar) / (1 + n_bar + m_bar),
///   tau = 2 arccos(...) / (2 gamma + omega_B).
///
/// Throws NoEquilibrium when the right-hand side leaves [-1, 1] and
/// DomainError when the mixing rate 2 gamma + omega_B vanishes.
double equilibrium_time(const ThermalPair& pair, double gamma, double omega_B);

/// Clausius expression Q1 (1/(k_B T1) - 1/(k_B T2)); nonnegative whenever
/// heat flows from hot to cold.
double second_law_functional(double Q1, double T1, double T2, double k_B);

/// Attach the (hbar omega / 4)(2 occupation + 1) energy scale to a
/// dimensionless quadrature moment block.
ThermalCM scale_covariance(const LocalMoments& moments, double occupation, double omega,
                           double hbar, int mode);

}  // namespace ncheat
