#include "ncheat/nc_algebra.hpp"

#include <cmath>

#include "ncheat/errors.hpp"

namespace ncheat {

std::pair<double, double> solve_sw_scaling(double theta, double eta, double hbar) {
    if (hbar <= 0.0) throw DomainError("hbar must be positive");
    if (theta < 0.0 || eta < 0.0) throw DomainError("deformation parameters must be nonnegative");
    const double x = theta * eta / (hbar * hbar);
    if (x > 1.0) throw NoRealScaling("theta*eta exceeds hbar^2: no real scaling satisfies the constraint");
    const double s = 0.5 * (1.0 + std::sqrt(1.0 - x));
    const double root = std::sqrt(s);
    return {root, root};
}

NcAlgebra make_algebra(double theta, double eta, double hbar) {
    const auto [mu, nu] = solve_sw_scaling(theta, eta, hbar);
    return NcAlgebra{theta, eta, hbar, mu, nu};
}

Mat4 symplectic_form() {
    Mat4 w;
    w(0, 1) = 1.0;
    w(1, 0) = -1.0;
    w(2, 3) = 1.0;
    w(3, 2) = -1.0;
    return w;
}

LinearMap4 sw_map_matrix(const NcAlgebra& alg) {
    // det T = 1 - theta*eta/hbar^2 (the Pfaffian of the commutation matrix
    // over hbar^2), so the map degenerates continuously toward the
    // theta*eta = hbar^2 boundary. Keep the determinant bounded away from 0.
    if (1.0 - alg.theta * alg.eta / (alg.hbar * alg.hbar) < 1e-12)
        throw DomainError("scaling map degenerates as theta*eta approaches hbar^2");
    // eps_ij couples each variable of mode 1 to the opposite variable of
    // mode 2: q1 picks up -a P2, q2 picks up +a P1 with a = theta/(2 nu hbar),
    // and p_i picks up +/- b Q_j with b = eta/(2 mu hbar).
    const double a = alg.theta / (2.0 * alg.nu * alg.hbar);
    const double b = alg.eta / (2.0 * alg.mu * alg.hbar);
    Mat4 t;
    // row q1
    t(0, 0) = alg.nu;
    t(0, 3) = -a;
    // row p1
    t(1, 1) = alg.mu;
    t(1, 2) = b;
    // row q2
    t(2, 1) = a;
    t(2, 2) = alg.nu;
    // row p2
    t(3, 0) = -b;
    t(3, 3) = alg.mu;
    return t;
}

CommutationMatrix nc_commutation_matrix(const NcAlgebra& alg) {
    Mat4 m;
    // ordering (q1, p1, q2, p2)
    m(0, 1) = alg.hbar;   // [q1, p1]
    m(1, 0) = -alg.hbar;
    m(2, 3) = alg.hbar;   // [q2, p2]
    m(3, 2) = -alg.hbar;
    m(0, 2) = alg.theta;  // [q1, q2]
    m(2, 0) = -alg.theta;
    m(1, 3) = alg.eta;    // [p1, p2]
    m(3, 1) = -alg.eta;
    return m;
}

double algebra_residual(const LinearMap4& t, const NcAlgebra& alg) {
    const Mat4 lhs = t * (alg.hbar * symplectic_form()) * transpose(t);
    return max_abs(lhs - nc_commutation_matrix(alg));
}

}  // namespace ncheat
