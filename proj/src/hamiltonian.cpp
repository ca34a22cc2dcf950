#include "ncheat/hamiltonian.hpp"

#include <cmath>

#include "ncheat/errors.hpp"

namespace ncheat {

QuadForm4 QuadForm4::from_matrix(const Mat4& m) {
    return QuadForm4{0.5 * (m + transpose(m))};
}

QuadForm4 build_nc_quadratic_form(const OscillatorSpec& osc) {
    if (osc.m <= 0.0) throw DomainError("mass must be positive");
    if (osc.omega <= 0.0) throw DomainError("omega must be positive");
    if (osc.omega_B < 0.0) throw DomainError("omega_B must be nonnegative");
    const double kq = 0.5 * osc.m * osc.Omega2();
    const double kp = 0.5 / osc.m;
    QuadForm4 f;
    f.a(0, 0) = kq;  // q1^2
    f.a(1, 1) = kp;  // p1^2
    f.a(2, 2) = kq;
    f.a(3, 3) = kp;
    // (omega_B / 2)(p1 q2 - p2 q1), split across the symmetric pair.
    const double g = 0.25 * osc.omega_B;
    f.a(1, 2) = g;
    f.a(2, 1) = g;
    f.a(0, 3) = -g;
    f.a(3, 0) = -g;
    return f;
}

QuadForm4 pullback_quadratic_form(const QuadForm4& form, const LinearMap4& t) {
    return QuadForm4::from_matrix(transpose(t) * form.a * t);
}

CoeffSet closed_form_coefficients(const OscillatorSpec& osc, const NcAlgebra& alg) {
    const double m = osc.m;
    const double w2 = osc.Omega2();
    const double h = alg.hbar;
    const double mu = alg.mu, nu = alg.nu;
    CoeffSet c;
    c.alpha2 = 0.5 * nu * nu * m * w2 + alg.eta * alg.eta / (8.0 * m * mu * mu * h * h) +
               (nu / mu) * osc.omega_B * alg.eta / (4.0 * h);
    c.beta2 = 0.5 * mu * mu / m + m * w2 * alg.theta * alg.theta / (8.0 * nu * nu * h * h) +
              (mu / nu) * osc.omega_B * alg.theta / (4.0 * h);
    c.gamma = 0.5 * alg.theta * m * w2 / h + 0.5 * alg.eta / (m * h);
    c.Gamma = 0.5 * osc.omega_B + c.gamma;
    return c;
}

QuadForm4 coefficient_form(const CoeffSet& c) {
    QuadForm4 f;
    f.a(0, 0) = c.alpha2;
    f.a(1, 1) = c.beta2;
    f.a(2, 2) = c.alpha2;
    f.a(3, 3) = c.beta2;
    const double g = 0.5 * c.Gamma;  // Gamma (P1 Q2 - P2 Q1)
    f.a(1, 2) = g;
    f.a(2, 1) = g;
    f.a(0, 3) = -g;
    f.a(3, 0) = -g;
    return f;
}

double coefficient_residual(const OscillatorSpec& osc, const NcAlgebra& alg) {
    const QuadForm4 exact = pullback_quadratic_form(build_nc_quadratic_form(osc), sw_map_matrix(alg));
    const QuadForm4 closed = coefficient_form(closed_form_coefficients(osc, alg));
    return max_abs(exact.a - closed.a);
}

double parts_commute_check(const CoeffSet& c) {
    const Mat4 full = coefficient_form(c).a;
    Mat4 a0;
    for (int i = 0; i < 4; ++i) a0(i, i) = full(i, i);
    const Mat4 av = full - a0;
    const Mat4 w = symplectic_form();
    const Mat4 f0 = w * a0;
    const Mat4 fv = w * av;
    return max_abs(f0 * fv - fv * f0);
}

QuadForm4 rescaled_form(const CoeffSet& c) {
    if (c.alpha2 <= 0.0 || c.beta2 <= 0.0) throw DomainError("rescaled form requires positive alpha^2, beta^2");
    const double ab = std::sqrt(c.alpha2) * std::sqrt(c.beta2);
    QuadForm4 f = rescaled_interaction_form(c.Gamma);
    for (int i = 0; i < 4; ++i) f.a(i, i) = ab;
    return f;
}

QuadForm4 rescaled_interaction_form(double Gamma) {
    QuadForm4 f;
    const double g = 0.5 * Gamma;  // Gamma (v1 u2 - v2 u1)
    f.a(1, 2) = g;
    f.a(2, 1) = g;
    f.a(0, 3) = -g;
    f.a(3, 0) = -g;
    return f;
}

}  // namespace ncheat
