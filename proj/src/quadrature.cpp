#include "ncheat/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "ncheat/errors.hpp"

namespace ncheat {

namespace {

constexpr double kPi = std::numbers::pi;

// Dimensionless Wigner density of the rotated (k, l) state with the
// Gaussian envelope stripped: the full density is g * exp(-u1^2-v1^2-u2^2-v2^2),
// which the quadrature weight absorbs.
inline double envelope_stripped_density(int k, int l, double c, double s, double u1, double v1,
                                        double u2, double v2) {
    const double a1 = c * u1 - s * u2;
    const double b1 = c * v1 - s * v2;
    const double a2 = s * u1 + c * u2;
    const double b2 = s * v1 + c * v2;
    const double r1 = a1 * a1 + b1 * b1;
    const double r2 = a2 * a2 + b2 * b2;
    const double g = laguerre(k, 2.0 * r1) * laguerre(l, 2.0 * r2) / (kPi * kPi);
    return ((k + l) % 2 != 0) ? -g : g;
}

}  // namespace

GaussHermiteRule gauss_hermite(int order) {
    if (order < 1) throw DomainError("quadrature order must be at least 1");
    const int n = order;
    const double pim4 = 0.7511255444649425;  // pi^(-1/4)

    // Orthonormal recurrence value and derivative at z.
    const auto eval = [n, pim4](double z) {
        double p1 = pim4, p2 = 0.0;
        for (int j = 0; j < n; ++j) {
            const double p3 = p2;
            p2 = p1;
            p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
        }
        return std::pair<double, double>{p1, std::sqrt(2.0 * n) * p2};
    };

    // Positive roots, largest first, by Newton iteration from the classic
    // asymptotic guesses.
    const int m = (n + 1) / 2;
    std::vector<double> pos(static_cast<std::size_t>(m)), pw(static_cast<std::size_t>(m));
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        if (i == 0)
            z = std::sqrt(2.0 * n + 1.0) - 1.85575 * std::pow(2.0 * n + 1.0, -1.0 / 6.0);
        else if (i == 1)
            z -= 1.14 * std::pow(static_cast<double>(n), 0.426) / z;
        else if (i == 2)
            z = 1.86 * z - 0.86 * pos[0];
        else if (i == 3)
            z = 1.91 * z - 0.91 * pos[1];
        else
            z = 2.0 * z - pos[static_cast<std::size_t>(i) - 2];
        for (int it = 0; it < 200; ++it) {
            const auto [p, dp] = eval(z);
            const double dz = p / dp;
            z -= dz;
            if (std::abs(dz) <= 1e-14 * std::max(1.0, std::abs(z))) break;
        }
        const auto [p, dp] = eval(z);
        (void)p;
        pos[static_cast<std::size_t>(i)] = z;
        pw[static_cast<std::size_t>(i)] = 2.0 / (dp * dp);
    }

    GaussHermiteRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) {
        rule.nodes[static_cast<std::size_t>(i)] = -pos[static_cast<std::size_t>(i)];
        rule.weights[static_cast<std::size_t>(i)] = pw[static_cast<std::size_t>(i)];
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = pos[static_cast<std::size_t>(i)];
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = pw[static_cast<std::size_t>(i)];
    }
    if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(m) - 1] = 0.0;  // center root is exact
    return rule;
}

MomentSums rotated_fock_moment_sums(const FockPair& pair, double angle, const GaussHermiteRule& rule) {
    validate(pair);
    const int n = static_cast<int>(rule.nodes.size());
    const double c = std::cos(angle), s = std::sin(angle);
    const double* x = rule.nodes.data();
    const double* w = rule.weights.data();
    const int k = pair.k, l = pair.l;

    double norm = 0.0;
    double su1 = 0.0, sv1 = 0.0, su2 = 0.0, sv2 = 0.0;
    double su1u1 = 0.0, sv1v1 = 0.0, su1v1 = 0.0;
    double su2u2 = 0.0, sv2v2 = 0.0, su2v2 = 0.0;

    // Fixed iteration shape (static schedule over the outer pair) keeps the
    // per-thread partial sums deterministic for a given thread count.
#pragma omp parallel for collapse(2) schedule(static) \
    reduction(+ : norm, su1, sv1, su2, sv2, su1u1, sv1v1, su1v1, su2u2, sv2v2, su2v2)
    for (int ia = 0; ia < n; ++ia) {
        for (int ib = 0; ib < n; ++ib) {
            const double u1 = x[ia], v1 = x[ib];
            const double wab = w[ia] * w[ib];
            for (int ic = 0; ic < n; ++ic) {
                const double u2 = x[ic];
                const double wc = wab * w[ic];
                for (int id = 0; id < n; ++id) {
                    const double v2 = x[id];
                    const double g = wc * w[id] *
                                     envelope_stripped_density(k, l, c, s, u1, v1, u2, v2);
                    norm += g;
                    su1 += g * u1;
                    sv1 += g * v1;
                    su2 += g * u2;
                    sv2 += g * v2;
                    su1u1 += g * u1 * u1;
                    sv1v1 += g * v1 * v1;
                    su1v1 += g * u1 * v1;
                    su2u2 += g * u2 * u2;
                    sv2v2 += g * v2 * v2;
                    su2v2 += g * u2 * v2;
                }
            }
        }
    }
    return MomentSums{norm, su1, sv1, su2, sv2, su1u1, sv1v1, su1v1, su2u2, sv2v2, su2v2};
}

MomentSums rotated_fock_moment_sums_reference(const FockPair& pair, double angle,
                                              const GaussHermiteRule& rule) {
    validate(pair);
    const int n = static_cast<int>(rule.nodes.size());
    const double c = std::cos(angle), s = std::sin(angle);
    const double* x = rule.nodes.data();
    const double* w = rule.weights.data();
    MomentSums ms;
    for (int ia = 0; ia < n; ++ia) {
        for (int ib = 0; ib < n; ++ib) {
            const double u1 = x[ia], v1 = x[ib];
            const double wab = w[ia] * w[ib];
            for (int ic = 0; ic < n; ++ic) {
                const double u2 = x[ic];
                const double wc = wab * w[ic];
                for (int id = 0; id < n; ++id) {
                    const double v2 = x[id];
                    const double g = wc * w[id] *
                                     envelope_stripped_density(pair.k, pair.l, c, s, u1, v1, u2, v2);
                    ms.norm += g;
                    ms.u1 += g * u1;
                    ms.v1 += g * v1;
                    ms.u2 += g * u2;
                    ms.v2 += g * v2;
                    ms.u1u1 += g * u1 * u1;
                    ms.v1v1 += g * v1 * v1;
                    ms.u1v1 += g * u1 * v1;
                    ms.u2u2 += g * u2 * u2;
                    ms.v2v2 += g * v2 * v2;
                    ms.u2v2 += g * u2 * v2;
                }
            }
        }
    }
    return ms;
}

std::pair<LocalMoments, LocalMoments> quadrature_local_moments(const FockPair& pair, double t,
                                                               const CoeffSet& c, double hbar,
                                                               int order) {
    validate(pair);
    if (hbar <= 0.0) throw DomainError("hbar must be positive");
    if (c.alpha2 <= 0.0 || c.beta2 <= 0.0) throw DomainError("local moments require positive alpha^2, beta^2");
    if (order < pair.k + pair.l + 2)
        throw OrderTooLow("quadrature order must be at least k + l + 2");

    const GaussHermiteRule rule = gauss_hermite(order);
    const MomentSums ms = rotated_fock_moment_sums(pair, c.Gamma * t, rule);

    const double alpha = std::sqrt(c.alpha2);
    const double beta = std::sqrt(c.beta2);
    const double q_scale = std::sqrt(beta * hbar / alpha);
    const double p_scale = std::sqrt(alpha * hbar / beta);

    const auto local = [&](double su, double sv, double suu, double svv, double suv) {
        LocalMoments lm;
        const double eu = su / ms.norm;
        const double ev = sv / ms.norm;
        lm.first = {eu, ev};
        // symmetrized covariance <ab + ba> - 2<a><b>; vacuum -> identity
        lm.second(0, 0) = 2.0 * (suu / ms.norm - eu * eu);
        lm.second(1, 1) = 2.0 * (svv / ms.norm - ev * ev);
        lm.second(0, 1) = 2.0 * (suv / ms.norm - eu * ev);
        lm.second(1, 0) = lm.second(0, 1);
        lm.t = t;
        lm.q_scale = q_scale;
        lm.p_scale = p_scale;
        return lm;
    };
    return {local(ms.u1, ms.v1, ms.u1u1, ms.v1v1, ms.u1v1),
            local(ms.u2, ms.v2, ms.u2u2, ms.v2v2, ms.u2v2)};
}

}  // namespace ncheat
