#pragma once

#include "ncheat/hamiltonian.hpp"
#include "ncheat/linalg.hpp"
#include "ncheat/wigner.hpp"

namespace ncheat {

/// Linear phase-space flow of a quadratic Hamiltonian H = R^T a R over a
/// time span: R(t) = s R(0) with s = exp(2 Omega a t). s preserves the
/// symplectic form to 1e-10 (checked at construction).
struct SymplecticPropagator {
    Mat4 s;
    double t = 0.0;
    QuadForm4 generator;
};

SymplecticPropagator symplectic_propagator(const QuadForm4& form, double t);

/// How the covariance entries are scaled.
enum class Units {
    dimensionless,  // rescaled quadratures; vacuum = identity
    energy_scaled,  // multiplied by (hbar omega / 4)(2 n_bar + 1)
};

/// Second and first moments of a Gaussian (or Gaussian-mixture) state.
struct CovState {
    Mat4 cm;
    Vec4 first{};
    Units units = Units::dimensionless;
};

/// sigma -> s sigma s^T, d -> s d.
CovState evolve_covariance(const CovState& state, const SymplecticPropagator& prop);

/// Dimensionless covariance of the product number state (k, l):
/// diag(2k+1, 2k+1, 2l+1, 2l+1), zero means.
CovState initial_pair_covariance(const FockPair& pair);

/// Uncertainty-principle check via symplectic eigenvalues. For a two-mode
/// covariance sigma = [[A, C], [C^T, B]] the invariants
/// Delta = det A + det B + 2 det C and det sigma give
/// nu_pm^2 = (Delta +- sqrt(Delta^2 - 4 det sigma)) / 2; the state is
/// physical iff min(nu) >= 1 (dimensionless units).
struct PhysicalityReport {
    double min_symplectic_eigenvalue = 0.0;
    bool pass = false;
};

/// Throws NonSymmetric / NonPositive for malformed input; tolerance for
/// the pass flag is 1 - 1e-10.
PhysicalityReport physicality_check(const CovState& state);

/// Symplectic eigenvalue of a single-mode covariance: sqrt(det cm).
double symplectic_eigenvalue(const Mat2& cm);

/// Smaller symplectic eigenvalue of a two-mode covariance.
double min_symplectic_eigenvalue(const Mat4& cm);

/// 2x2 diagonal block of the given mode (1 or 2).
Mat2 local_block(const Mat4& cm, int mode);

}  // namespace ncheat
