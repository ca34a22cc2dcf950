#pragma once

#include <utility>

#include "ncheat/linalg.hpp"

namespace ncheat {

/// Two-mode deformed algebra
///
///   [q_i, q_j] = i theta eps_ij,  [q_i, p_j] = i hbar delta_ij,
///   [p_i, p_j] = i eta eps_ij,    eps_12 = +1,
///
/// together with the scaling pair (mu, nu) of the linear map back to
/// standard canonical variables. Phase vectors are ordered
/// (Q1, P1, Q2, P2) everywhere in this library.
struct NcAlgebra {
    double theta = 0.0;
    double eta = 0.0;
    double hbar = 1.0;
    double mu = 1.0;
    double nu = 1.0;
};

/// Solve theta*eta = 4 hbar^2 mu nu (1 - mu nu) in the symmetric convention
/// mu = nu = sqrt(s) with s = (1 + sqrt(1 - theta*eta/hbar^2)) / 2, the root
/// continuously connected to mu = nu = 1 at theta = eta = 0.
///
/// Throws NoRealScaling when theta*eta > hbar^2 and DomainError for
/// negative deformation parameters or hbar <= 0.
std::pair<double, double> solve_sw_scaling(double theta, double eta, double hbar);

/// Validate parameters and attach the scaling pair.
NcAlgebra make_algebra(double theta, double eta, double hbar);

/// Standard symplectic form for the ordering (Q1, P1, Q2, P2).
Mat4 symplectic_form();

/// Row-major matrix of a linear change of phase-space variables.
using LinearMap4 = Mat4;

/// Antisymmetric matrix M with [r_i, r_j] = i M_ij.
using CommutationMatrix = Mat4;

/// Map T with (q1, p1, q2, p2) = T (Q1, P1, Q2, P2):
///
///   q_i = nu Q_i - (theta / 2 nu hbar) eps_ij P_j,
///   p_i = mu P_i + (eta  / 2 mu hbar) eps_ij Q_j.
///
/// det T = 1 - theta*eta/hbar^2, so the map degenerates as theta*eta
/// approaches hbar^2; throws DomainError within 1e-12 of that boundary.
LinearMap4 sw_map_matrix(const NcAlgebra& alg);

/// Commutation matrix of the deformed variables (q1, p1, q2, p2).
CommutationMatrix nc_commutation_matrix(const NcAlgebra& alg);

/// Max-abs norm of T (hbar Omega) T^T - M(alg). Zero iff the mapped
/// variables realize the deformed commutators.
double algebra_residual(const LinearMap4& t, const NcAlgebra& alg);

}  // namespace ncheat
