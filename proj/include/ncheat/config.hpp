#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ncheat/hamiltonian.hpp"
#include "ncheat/nc_algebra.hpp"
#include "ncheat/thermo.hpp"
#include "ncheat/wigner.hpp"

namespace ncheat {

/// One run's knobs. Deformation is given either as (theta, eta) or directly
/// as the coupling correction gamma; bath states either as occupations
/// (n_bar, m_bar) or temperatures (T1, T2). Exactly one alternative of each
/// pair must be chosen (resolve enforces this).
struct RunConfig {
    double hbar = 1.0;
    double m = 1.0;
    double k_B = 1.0;
    double omega = 4.0;
    double omega_B = 1.0;

    std::optional<double> theta, eta;
    std::optional<double> gamma;
    std::optional<double> n_bar, m_bar;
    std::optional<double> T1, T2;

    int k = 0, l = 1;

    // simulate
    double t_max = 10.0;
    int steps = 101;

    // quadrature
    int order = 16;

    // sweep: either a gamma list or a (theta, eta) grid
    std::vector<double> gammas;
    std::vector<double> thetas, etas;

    // wigner
    int mode = 1;
    double t = 0.0;
    double window = 0.0;  // half-width; 0 picks one from the covariance
    int nx = 201, ny = 201;
};

/// Set one key from its textual value. Keys match the struct field names.
/// Throws ConfigError for unknown keys or malformed values.
void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value);

/// Apply a flat key = value file ('#' starts a comment, blank lines skipped).
void apply_config_file(RunConfig& cfg, const std::string& path);

/// Everything downstream code needs, validated. algebra and coeffs are
/// present only when the deformation was given as (theta, eta); a bare
/// gamma fixes the mixing rate but leaves the quadrature scalings free.
struct ResolvedRun {
    OscillatorSpec osc;
    std::optional<NcAlgebra> algebra;
    std::optional<CoeffSet> coeffs;
    double gamma = 0.0;
    double Gamma = 0.0;
    ThermalPair pair;
    FockPair fock;
};

/// Validate and derive. Throws ConfigError on violated invariants and
/// propagates NoRealScaling for theta*eta > hbar^2.
ResolvedRun resolve(const RunConfig& cfg);

}  // namespace ncheat
