#include "ncheat/wigner.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

#include "ncheat/errors.hpp"
#include "ncheat/format.hpp"
#include "ncheat/quadrature.hpp"

namespace ncheat {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_grid(const GridSpec& spec) {
    if (spec.nx < 2 || spec.ny < 2) throw DomainError("grid needs at least 2 samples per axis");
    if (!(spec.x_max > spec.x_min) || !(spec.y_max > spec.y_min))
        throw DomainError("grid window must have positive extent");
}

Mat4 outer(const Vec4& g) {
    Mat4 m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            m(i, j) = g[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(j)];
    return m;
}

struct RescaledFrame {
    double c, s;          // cos/sin of the mixing angle Gamma t
    double q_scale, p_scale;
};

RescaledFrame frame_of(const CoeffSet& c, double hbar, double t) {
    if (hbar <= 0.0) throw DomainError("hbar must be positive");
    if (c.alpha2 <= 0.0 || c.beta2 <= 0.0) throw DomainError("positive alpha^2, beta^2 required");
    const double alpha = std::sqrt(c.alpha2);
    const double beta = std::sqrt(c.beta2);
    RescaledFrame f;
    f.c = std::cos(c.Gamma * t);
    f.s = std::sin(c.Gamma * t);
    f.q_scale = std::sqrt(beta * hbar / alpha);
    f.p_scale = std::sqrt(alpha * hbar / beta);
    return f;
}

// One marginal sample: the other mode integrated out with an order^2
// Gauss-Hermite product rule. u, v are the kept mode's rescaled
// quadratures; keep_first selects which slot of the rotation they occupy.
double marginal_point(int k, int l, const RescaledFrame& f, const GaussHermiteRule& rule,
                      double hbar, bool keep_first, double u, double v) {
    const int n = static_cast<int>(rule.nodes.size());
    double sum = 0.0;
    for (int ia = 0; ia < n; ++ia) {
        for (int ib = 0; ib < n; ++ib) {
            const double a = rule.nodes[static_cast<std::size_t>(ia)];
            const double b = rule.nodes[static_cast<std::size_t>(ib)];
            const double u1 = keep_first ? u : a;
            const double v1 = keep_first ? v : b;
            const double u2 = keep_first ? a : u;
            const double v2 = keep_first ? b : v;
            const double r1u = f.c * u1 - f.s * u2;
            const double r1v = f.c * v1 - f.s * v2;
            const double r2u = f.s * u1 + f.c * u2;
            const double r2v = f.s * v1 + f.c * v2;
            sum += rule.weights[static_cast<std::size_t>(ia)] *
                   rule.weights[static_cast<std::size_t>(ib)] *
                   laguerre(k, 2.0 * (r1u * r1u + r1v * r1v)) *
                   laguerre(l, 2.0 * (r2u * r2u + r2v * r2v));
        }
    }
    double w = std::exp(-(u * u + v * v)) * sum / (kPi * kPi * hbar);
    return ((k + l) % 2 != 0) ? -w : w;
}

WignerGrid marginal_grid_impl(const FockPair& pair, int mode, double t, const CoeffSet& c,
                              double hbar, const GridSpec& spec, int order, bool parallel) {
    validate(pair);
    validate_grid(spec);
    if (mode != 1 && mode != 2) throw DomainError("mode must be 1 or 2");
    if (order < pair.k + pair.l + 2) throw OrderTooLow("quadrature order must be at least k + l + 2");

    const RescaledFrame f = frame_of(c, hbar, t);
    const GaussHermiteRule rule = gauss_hermite(order);
    const bool keep_first = (mode == 1);

    WignerGrid grid{spec, t, std::vector<double>(static_cast<std::size_t>(spec.nx) *
                                                 static_cast<std::size_t>(spec.ny))};
    const double dx = (spec.x_max - spec.x_min) / (spec.nx - 1);
    const double dy = (spec.y_max - spec.y_min) / (spec.ny - 1);

#pragma omp parallel for schedule(static) if (parallel)
    for (int j = 0; j < spec.ny; ++j) {
        const double v = (spec.y_min + j * dy) / f.p_scale;
        for (int i = 0; i < spec.nx; ++i) {
            const double u = (spec.x_min + i * dx) / f.q_scale;
            grid.values[static_cast<std::size_t>(j) * static_cast<std::size_t>(spec.nx) +
                        static_cast<std::size_t>(i)] =
                marginal_point(pair.k, pair.l, f, rule, hbar, keep_first, u, v);
        }
    }
    return grid;
}

}  // namespace

void validate(const FockPair& pair) {
    if (pair.k < 0 || pair.l < 0) throw DomainError("number-state labels must be nonnegative");
    if (pair.k + pair.l > 32) throw DomainError("number-state labels limited to k + l <= 32");
}

double laguerre(int n, double x) {
    if (n < 0 || n > 64) throw DomainError("laguerre degree must be in [0, 64]");
    if (n == 0) return 1.0;
    double lm1 = 1.0;
    double l = 1.0 - x;
    for (int j = 1; j < n; ++j) {
        const double next = ((2.0 * j + 1.0 - x) * l - j * lm1) / (j + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

XiForms xi_forms(const CoeffSet& c, double hbar, double t) {
    const RescaledFrame f = frame_of(c, hbar, t);
    const double cu = f.c / f.q_scale, su = f.s / f.q_scale;
    const double cv = f.c / f.p_scale, sv = f.s / f.p_scale;
    XiForms forms;
    // xi1^2 = hbar[(c u1 - s u2)^2 + (c v1 - s v2)^2] expressed in (Q1, P1, Q2, P2)
    forms.xi1.a = hbar * (outer({cu, 0.0, -su, 0.0}) + outer({0.0, cv, 0.0, -sv}));
    forms.xi2.a = hbar * (outer({su, 0.0, cu, 0.0}) + outer({0.0, sv, 0.0, cv}));
    return forms;
}

double wigner_value(const FockPair& pair, const Vec4& r, double t, const CoeffSet& c, double hbar) {
    validate(pair);
    const XiForms f = xi_forms(c, hbar, t);
    const double x1 = f.xi1.value(r) / hbar;
    const double x2 = f.xi2.value(r) / hbar;
    const double w = std::exp(-(x1 + x2)) * laguerre(pair.k, 2.0 * x1) * laguerre(pair.l, 2.0 * x2) /
                     (kPi * kPi * hbar * hbar);
    return ((pair.k + pair.l) % 2 != 0) ? -w : w;
}

WignerGrid gaussian_grid(const Mat2& cm, const Vec2& d, const GridSpec& spec, double t) {
    validate_grid(spec);
    if (std::abs(cm(0, 1) - cm(1, 0)) > 1e-12 * std::max(1.0, max_abs(cm)))
        throw NonSymmetric("covariance must be symmetric");
    const double dt = det(cm);
    if (cm(0, 0) <= 0.0 || dt <= 0.0) throw NonPositive("covariance must be positive definite");

    const Mat2 inv = inverse(cm);
    const double amp = 1.0 / (2.0 * kPi * std::sqrt(dt));
    WignerGrid grid{spec, t, std::vector<double>(static_cast<std::size_t>(spec.nx) *
                                                 static_cast<std::size_t>(spec.ny))};
    const double dx = (spec.x_max - spec.x_min) / (spec.nx - 1);
    const double dy = (spec.y_max - spec.y_min) / (spec.ny - 1);
#pragma omp parallel for schedule(static)
    for (int j = 0; j < spec.ny; ++j) {
        const double ry = spec.y_min + j * dy - d[1];
        for (int i = 0; i < spec.nx; ++i) {
            const double rx = spec.x_min + i * dx - d[0];
            const double q = inv(0, 0) * rx * rx + 2.0 * inv(0, 1) * rx * ry + inv(1, 1) * ry * ry;
            grid.values[static_cast<std::size_t>(j) * static_cast<std::size_t>(spec.nx) +
                        static_cast<std::size_t>(i)] = amp * std::exp(-0.5 * q);
        }
    }
    return grid;
}

WignerGrid laguerre_marginal_grid(const FockPair& pair, int mode, double t, const CoeffSet& c,
                                  double hbar, const GridSpec& spec, int order) {
    return marginal_grid_impl(pair, mode, t, c, hbar, spec, order, true);
}

WignerGrid laguerre_marginal_grid_reference(const FockPair& pair, int mode, double t,
                                            const CoeffSet& c, double hbar, const GridSpec& spec,
                                            int order) {
    return marginal_grid_impl(pair, mode, t, c, hbar, spec, order, false);
}

std::string format_grid(const WignerGrid& grid) {
    std::ostringstream out;
    write_grid(out, grid);
    return out.str();
}

void write_grid(std::ostream& out, const WignerGrid& grid) {
    out << "# " << g15(grid.spec.x_min) << ' ' << g15(grid.spec.x_max) << ' '
        << g15(grid.spec.y_min) << ' ' << g15(grid.spec.y_max) << ' ' << grid.spec.nx << ' '
        << grid.spec.ny << ' ' << g15(grid.t) << '\n';
    for (int j = 0; j < grid.spec.ny; ++j) {
        for (int i = 0; i < grid.spec.nx; ++i) {
            if (i) out << ' ';
            out << g15(grid.values[static_cast<std::size_t>(j) * static_cast<std::size_t>(grid.spec.nx) +
                                   static_cast<std::size_t>(i)]);
        }
        out << '\n';
    }
}

}  // namespace ncheat
