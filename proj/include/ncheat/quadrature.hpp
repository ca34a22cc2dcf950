#pragma once

#include <utility>
#include <vector>

#include "ncheat/hamiltonian.hpp"
#include "ncheat/linalg.hpp"
#include "ncheat/wigner.hpp"

namespace ncheat {

/// Gauss-Hermite rule for the weight exp(-x^2): integral f(x) exp(-x^2) dx
/// ~= sum_i w_i f(x_i), exact for polynomials of degree <= 2 order - 1.
/// Nodes are ascending and exactly sign-symmetric.
struct GaussHermiteRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Build the rule of the given order (>= 1) by Newton iteration on the
/// orthonormal recurrence. Node orthogonality holds to 1e-13 (enforced by
/// tests).
GaussHermiteRule gauss_hermite(int order);

/// First and second moments of one mode in its rescaled quadratures
/// (u, v), where the vacuum has second = identity. second is the
/// symmetrized covariance sigma_ab = <ab + ba> - 2<a><b>. q_scale and
/// p_scale convert to physical coordinates: Q = q_scale * u, P = p_scale * v.
struct LocalMoments {
    Mat2 second;
    Vec2 first{};
    double t = 0.0;
    double q_scale = 1.0;
    double p_scale = 1.0;
};

/// Raw node sums of the rotated two-mode state (k, l): the normalization
/// and the first and second moments of all four quadratures, plus the
/// within-mode cross moments.
struct MomentSums {
    double norm = 0.0;
    double u1 = 0.0, v1 = 0.0, u2 = 0.0, v2 = 0.0;
    double u1u1 = 0.0, v1v1 = 0.0, u1v1 = 0.0;
    double u2u2 = 0.0, v2v2 = 0.0, u2v2 = 0.0;
};

/// Tensor-product quadrature over all order^4 nodes of the (k, l) state
/// whose mode split is rotated by the given angle. OpenMP-parallel over
/// the flattened outer node pairs with static scheduling, so results are
/// bitwise reproducible for a fixed rule.
MomentSums rotated_fock_moment_sums(const FockPair& pair, double angle, const GaussHermiteRule& rule);

/// Serial reference implementation of rotated_fock_moment_sums.
MomentSums rotated_fock_moment_sums_reference(const FockPair& pair, double angle,
                                              const GaussHermiteRule& rule);

/// Local moments of both modes at time t, by Gauss-Hermite quadrature of
/// the full two-mode Wigner function. The rotation angle is Gamma t.
/// Throws OrderTooLow unless order >= k + l + 2 (the node count per axis
/// needed to integrate the Laguerre factors exactly).
std::pair<LocalMoments, LocalMoments> quadrature_local_moments(const FockPair& pair, double t,
                                                               const CoeffSet& c, double hbar,
                                                               int order);

}  // namespace ncheat
