#include "ncheat/gaussian_dynamics.hpp"

#include <cmath>
#include <limits>

#include "ncheat/errors.hpp"
#include "ncheat/nc_algebra.hpp"

namespace ncheat {

SymplecticPropagator symplectic_propagator(const QuadForm4& form, double t) {
    if (max_abs(form.a - transpose(form.a)) > 1e-12 * std::max(1.0, max_abs(form.a)))
        throw NonSymmetric("generator form must be symmetric");
    const Mat4 w = symplectic_form();
    const Mat4 s = expm((2.0 * t) * (w * form.a));
    // exp of a Hamiltonian matrix is symplectic; guard against expm drift.
    if (max_abs(s * w * transpose(s) - w) > 1e-10)
        throw DomainError("propagator lost symplecticity");
    return SymplecticPropagator{s, t, form};
}

CovState evolve_covariance(const CovState& state, const SymplecticPropagator& prop) {
    CovState out = state;
    out.cm = prop.s * state.cm * transpose(prop.s);
    out.first = mul(prop.s, state.first);
    return out;
}

CovState initial_pair_covariance(const FockPair& pair) {
    validate(pair);
    CovState st;
    const double a = 2.0 * pair.k + 1.0;
    const double b = 2.0 * pair.l + 1.0;
    st.cm(0, 0) = st.cm(1, 1) = a;
    st.cm(2, 2) = st.cm(3, 3) = b;
    return st;
}

double symplectic_eigenvalue(const Mat2& cm) {
    const double d = det(cm);
    if (d < 0.0) throw NonPositive("covariance block has negative determinant");
    return std::sqrt(d);
}

double min_symplectic_eigenvalue(const Mat4& cm) {
    const Mat2 a = block2(cm, 0, 0);
    const Mat2 b = block2(cm, 1, 1);
    const Mat2 c = block2(cm, 0, 1);
    const double delta = det(a) + det(b) + 2.0 * det(c);
    const double d4 = det(cm);
    double disc = delta * delta - 4.0 * d4;
    // delta^2 and 4 det cancel exactly when the two eigenvalues coincide;
    // below the round-off floor the square root would amplify noise by
    // sqrt(eps), so a coincident pair is resolved as exactly coincident
    const double floor =
        64.0 * std::numeric_limits<double>::epsilon() * (delta * delta + 4.0 * std::abs(d4));
    if (disc < floor) disc = 0.0;
    double lo = 0.5 * (delta - std::sqrt(disc));
    if (lo < 0.0) lo = 0.0;
    return std::sqrt(lo);
}

PhysicalityReport physicality_check(const CovState& state) {
    const Mat4& cm = state.cm;
    if (max_abs(cm - transpose(cm)) > 1e-10 * std::max(1.0, max_abs(cm)))
        throw NonSymmetric("covariance must be symmetric");
    for (int i = 0; i < 4; ++i)
        if (cm(i, i) <= 0.0) throw NonPositive("covariance must have positive diagonal");
    if (det(cm) <= 0.0) throw NonPositive("covariance must be positive definite");
    PhysicalityReport rep;
    rep.min_symplectic_eigenvalue = min_symplectic_eigenvalue(cm);
    rep.pass = rep.min_symplectic_eigenvalue >= 1.0 - 1e-10;
    return rep;
}

Mat2 local_block(const Mat4& cm, int mode) {
    if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
    return block2(cm, mode - 1, mode - 1);
}

}  // namespace ncheat
