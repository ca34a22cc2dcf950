#pragma once

#include "ncheat/linalg.hpp"
#include "ncheat/nc_algebra.hpp"

namespace ncheat {

/// Two identical oscillators of mass m and frequency omega, coupled by an
/// angular-momentum term of strength omega_B. The effective oscillator
/// frequency is Omega^2 = omega^2 + omega_B^2 / 4.
struct OscillatorSpec {
    double m = 1.0;
    double omega = 1.0;
    double omega_B = 0.0;

    double Omega2() const { return omega * omega + 0.25 * omega_B * omega_B; }
};

/// Symmetric 4x4 quadratic form; H(R) = R^T a R with no extra 1/2.
struct QuadForm4 {
    Mat4 a;

    /// Symmetrize an arbitrary matrix into a form.
    static QuadForm4 from_matrix(const Mat4& m);

    double value(const Vec4& r) const { return dot(r, mul(a, r)); }
};

/// Closed-form coefficients of the Hamiltonian written in standard
/// canonical variables:
///
///   H = alpha^2 (Q1^2 + Q2^2) + beta^2 (P1^2 + P2^2)
///       + Gamma (P1 Q2 - P2 Q1),   Gamma = omega_B / 2 + gamma.
struct CoeffSet {
    double alpha2 = 0.0;
    double beta2 = 0.0;
    double gamma = 0.0;
    double Gamma = 0.0;
};

/// Quadratic form of the Hamiltonian in the deformed variables
/// (q1, p1, q2, p2):
///
///   H = sum_i p_i^2 / 2m + m Omega^2 q_i^2 / 2
///       + (omega_B / 2) (p1 q2 - p2 q1).
QuadForm4 build_nc_quadratic_form(const OscillatorSpec& osc);

/// Pull a form back through the substitution r = T R: returns T^T a T,
/// symmetrized.
QuadForm4 pullback_quadratic_form(const QuadForm4& form, const LinearMap4& t);

/// Coefficients of the pulled-back Hamiltonian in closed form. Both
/// coupling corrections enter gamma with one power of 1/hbar each:
/// gamma = (theta / 2 hbar) m Omega^2 + eta / (2 m hbar). The mixed terms
/// of alpha^2 and beta^2 carry 1/(4 hbar); this is fixed by requiring
/// agreement with the exact pullback (see coefficient_residual).
CoeffSet closed_form_coefficients(const OscillatorSpec& osc, const NcAlgebra& alg);

/// Assemble the quadratic form with the CoeffSet structure: diagonal
/// (alpha^2, beta^2, alpha^2, beta^2) plus antisymmetric mode coupling of
/// strength Gamma.
QuadForm4 coefficient_form(const CoeffSet& c);

/// Max-abs difference between the exact pullback and the closed-form
/// coefficients, for one parameter point.
double coefficient_residual(const OscillatorSpec& osc, const NcAlgebra& alg);

/// Max-abs norm of [Omega A0, Omega AV] where A0 is the diagonal part of
/// coefficient_form(c) and AV the off-diagonal rest. Identically zero:
/// the free and coupling flows commute, so the coupling can be treated
/// alone in a rotating frame.
double parts_commute_check(const CoeffSet& c);

/// Generator form in rescaled quadratures u_i = sqrt(alpha/(beta hbar)) Q_i,
/// v_i = sqrt(beta/(alpha hbar)) P_i, where mode vacua become identity
/// covariances: H / hbar = alpha beta sum_i (u_i^2 + v_i^2)
/// + Gamma (v1 u2 - v2 u1).
QuadForm4 rescaled_form(const CoeffSet& c);

/// Coupling part of rescaled_form alone (diagonal dropped).
QuadForm4 rescaled_interaction_form(double Gamma);

}  // namespace ncheat
