#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ncheat/hamiltonian.hpp"
#include "ncheat/linalg.hpp"

namespace ncheat {

/// Number-state labels of the two modes. k, l >= 0 and k + l <= 32.
struct FockPair {
    int k = 0;
    int l = 0;
};

/// Throws DomainError unless the pair satisfies its bounds.
void validate(const FockPair& pair);

/// Laguerre polynomial L_n(x) by the three-term recurrence
/// L_{n+1} = ((2n + 1 - x) L_n - n L_{n-1}) / (n + 1). Requires 0 <= n <= 64.
double laguerre(int n, double x);

/// The pair of positive quadratic forms xi1^2, xi2^2 in (Q1, P1, Q2, P2)
/// whose values feed the Laguerre factors of the two-mode states at time t.
/// In rescaled quadratures w_i = (u_i, v_i):
///
///   xi1^2 / hbar = |c w1 - s w2|^2,   xi2^2 / hbar = |s w1 + c w2|^2,
///
/// with c = cos(Gamma t), s = sin(Gamma t). The mode-2 form mirrors the
/// mode-1 form with the roles of the modes swapped; the sum xi1^2 + xi2^2
/// is time independent.
struct XiForms {
    QuadForm4 xi1;
    QuadForm4 xi2;
};

XiForms xi_forms(const CoeffSet& c, double hbar, double t);

/// Wigner function of the evolved two-mode number state (k, l) at phase
/// point r = (Q1, P1, Q2, P2):
///
///   W = ((-1)^(k+l) / (pi^2 hbar^2)) exp(-(xi1^2 + xi2^2)/hbar)
///       L_k(2 xi1^2 / hbar) L_l(2 xi2^2 / hbar).
double wigner_value(const FockPair& pair, const Vec4& r, double t, const CoeffSet& c, double hbar);

/// Rectangular evaluation window. nx, ny >= 2.
struct GridSpec {
    double x_min = -1.0;
    double x_max = 1.0;
    double y_min = -1.0;
    double y_max = 1.0;
    int nx = 2;
    int ny = 2;
};

/// Sampled single-mode Wigner function. values is row-major with ny rows of
/// nx samples; row j holds y = y_min + j dy, column i holds
/// x = x_min + i dx.
struct WignerGrid {
    GridSpec spec;
    double t = 0.0;
    std::vector<double> values;
};

/// Gaussian branch: density exp(-(r-d)^T cm^{-1} (r-d) / 2) / (2 pi sqrt(det cm))
/// sampled over the window. cm is interpreted as a classical covariance;
/// it must be symmetric positive definite (NonSymmetric / NonPositive).
WignerGrid gaussian_grid(const Mat2& cm, const Vec2& d, const GridSpec& spec, double t);

/// Laguerre branch: the marginal of wigner_value over the other mode,
/// integrated by an order^2 Gauss-Hermite product rule per grid point.
/// mode is 1 or 2; order must satisfy the same bound as the moment
/// quadrature (order >= k + l + 2).
WignerGrid laguerre_marginal_grid(const FockPair& pair, int mode, double t, const CoeffSet& c,
                                  double hbar, const GridSpec& spec, int order);

/// Serial reference for laguerre_marginal_grid.
WignerGrid laguerre_marginal_grid_reference(const FockPair& pair, int mode, double t,
                                            const CoeffSet& c, double hbar, const GridSpec& spec,
                                            int order);

/// Plain-text rendering: one header line
/// "# x_min x_max y_min y_max nx ny t", then ny rows of nx samples,
/// 15 significant digits.
std::string format_grid(const WignerGrid& grid);
void write_grid(std::ostream& out, const WignerGrid& grid);

}  // namespace ncheat
