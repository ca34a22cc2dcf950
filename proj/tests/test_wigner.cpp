#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "ncheat/errors.hpp"
#include "ncheat/quadrature.hpp"
#include "ncheat/wigner.hpp"

using namespace ncheat;

namespace {

const CoeffSet kCoeffs{4.0, 1.0, 0.5, 1.0};  // alpha = 2, beta = 1

// integral of wigner_value over all of phase space, by a tensor-product
// Gauss-Hermite rule in the rescaled quadratures (Jacobian hbar^2)
double wigner_norm(const FockPair& pair, double t, const CoeffSet& c, double hbar, int order) {
    const GaussHermiteRule rule = gauss_hermite(order);
    const double qs = std::sqrt(std::sqrt(c.beta2 / c.alpha2) * hbar);
    const double ps = std::sqrt(std::sqrt(c.alpha2 / c.beta2) * hbar);
    double total = 0.0;
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b)
            for (int i = 0; i < order; ++i)
                for (int j = 0; j < order; ++j) {
                    const double xa = rule.nodes[a], xb = rule.nodes[b];
                    const double xi = rule.nodes[i], xj = rule.nodes[j];
                    const Vec4 r{qs * xa, ps * xb, qs * xi, ps * xj};
                    const double w = wigner_value(pair, r, t, c, hbar);
                    const double envelope = std::exp(xa * xa + xb * xb + xi * xi + xj * xj);
                    total += rule.weights[a] * rule.weights[b] * rule.weights[i] *
                             rule.weights[j] * w * envelope;
                }
    return total * hbar * hbar;
}

}  // namespace

TEST_CASE("laguerre recurrence hits known values") {
    CHECK(laguerre(0, 3.7) == 1.0);
    CHECK(laguerre(1, 2.0) == -1.0);
    CHECK(std::abs(laguerre(2, 3.0) - (-0.5)) < 1e-15);
    CHECK(std::abs(laguerre(3, 1.0) - (-2.0 / 3.0)) < 1e-15);
    CHECK(std::abs(laguerre(3, 2.0) - (-1.0 / 3.0)) < 1e-15);
    for (int n = 0; n <= 10; ++n) CHECK(laguerre(n, 0.0) == 1.0);
    CHECK_THROWS(laguerre(-1, 1.0));
    CHECK_THROWS(laguerre(65, 1.0));
    CHECK_NOTHROW(laguerre(64, 1.0));
}

TEST_CASE("pair labels are bounded") {
    CHECK_NOTHROW(validate(FockPair{0, 0}));
    CHECK_NOTHROW(validate(FockPair{16, 16}));
    CHECK_THROWS(validate(FockPair{-1, 0}));
    CHECK_THROWS(validate(FockPair{0, -2}));
    CHECK_THROWS(validate(FockPair{16, 17}));
}

TEST_CASE("xi forms at t = 0 are the two mode energies") {
    const XiForms f = xi_forms(kCoeffs, 1.0, 0.0);
    CHECK(std::abs(f.xi1.a(0, 0) - 2.0) < 1e-15);  // alpha / beta
    CHECK(std::abs(f.xi1.a(1, 1) - 0.5) < 1e-15);  // beta / alpha
    CHECK(max_abs(block2(f.xi1.a, 2, 2)) < 1e-15);
    CHECK(std::abs(f.xi2.a(2, 2) - 2.0) < 1e-15);
    CHECK(std::abs(f.xi2.a(3, 3) - 0.5) < 1e-15);
    CHECK(max_abs(block2(f.xi2.a, 0, 0)) < 1e-15);
}

TEST_CASE("xi forms swap after a quarter rotation") {
    const double t = M_PI / 2.0;  // Gamma = 1
    const XiForms f0 = xi_forms(kCoeffs, 1.0, 0.0);
    const XiForms f = xi_forms(kCoeffs, 1.0, t);
    CHECK(max_abs(f.xi1.a - f0.xi2.a) < 1e-12);
    CHECK(max_abs(f.xi2.a - f0.xi1.a) < 1e-12);
}

TEST_CASE("xi form sum is time independent") {
    const XiForms f0 = xi_forms(kCoeffs, 1.0, 0.0);
    const Mat4 sum0 = f0.xi1.a + f0.xi2.a;
    for (double t : {0.2, 0.75, 1.9, 3.3}) {
        const XiForms f = xi_forms(kCoeffs, 1.0, t);
        CHECK(max_abs((f.xi1.a + f.xi2.a) - sum0) < 1e-14);
        const Vec4 r{1.0, 1.0, 1.0, 1.0};
        CHECK(std::abs(f.xi1.value(r) + f.xi2.value(r) - 5.0) < 1e-13);
    }
}

TEST_CASE("wigner values at the origin") {
    const Vec4 origin{0.0, 0.0, 0.0, 0.0};
    CHECK(std::abs(wigner_value({0, 0}, origin, 0.0, kCoeffs, 1.0) - 0.10132118364233778) <
          1e-15);
    CHECK(std::abs(wigner_value({0, 0}, origin, 0.0, kCoeffs, 0.5) - 0.4052847345693511) < 1e-14);
    CHECK(std::abs(wigner_value({0, 1}, origin, 0.0, kCoeffs, 1.0) + 0.10132118364233778) <
          1e-15);
    CHECK(std::abs(wigner_value({1, 1}, origin, 0.0, kCoeffs, 1.0) - 0.10132118364233778) <
          1e-15);
    // origin value is stationary: the rotation fixes the origin
    CHECK(std::abs(wigner_value({0, 1}, origin, 0.8, kCoeffs, 1.0) + 0.10132118364233778) <
          1e-14);
}

TEST_CASE("wigner function integrates to one") {
    for (double t : {0.0, 0.7}) {
        CHECK(std::abs(wigner_norm({0, 0}, t, kCoeffs, 1.0, 10) - 1.0) < 1e-10);
        CHECK(std::abs(wigner_norm({0, 1}, t, kCoeffs, 1.0, 10) - 1.0) < 1e-10);
        CHECK(std::abs(wigner_norm({1, 1}, t, kCoeffs, 1.0, 10) - 1.0) < 1e-10);
    }
    CHECK(std::abs(wigner_norm({2, 1}, 0.4, kCoeffs, 0.5, 12) - 1.0) < 1e-10);
}

TEST_CASE("gaussian grid samples the normalized density") {
    const GridSpec spec{-6.0, 6.0, -6.0, 6.0, 201, 201};
    const WignerGrid grid = gaussian_grid(Mat2::identity(), Vec2{0.0, 0.0}, spec, 0.0);
    REQUIRE(grid.values.size() == 201u * 201u);
    CHECK(std::abs(grid.values[100 * 201 + 100] - 1.0 / (2.0 * M_PI)) < 1e-12);

    // plain sum times the cell area: tails are far below the window edge
    double sum = 0.0;
    for (double v : grid.values) sum += v;
    CHECK(std::abs(sum * 0.06 * 0.06 - 1.0) < 1e-6);

    // a shifted mean moves the samples accordingly
    const WignerGrid shifted = gaussian_grid(Mat2::identity(), Vec2{1.0, -1.0}, spec, 0.0);
    const double x = -6.0 + 117 * 0.06, y = -6.0 + 83 * 0.06;
    const double expect =
        std::exp(-0.5 * ((x - 1.0) * (x - 1.0) + (y + 1.0) * (y + 1.0))) / (2.0 * M_PI);
    CHECK(std::abs(shifted.values[83 * 201 + 117] - expect) < 1e-14);
}

TEST_CASE("gaussian grid validates its covariance") {
    const GridSpec spec{-2.0, 2.0, -2.0, 2.0, 11, 11};
    Mat2 asym = Mat2::identity();
    asym(0, 1) = 0.3;
    asym(1, 0) = 0.1;
    CHECK_THROWS_AS(gaussian_grid(asym, Vec2{0.0, 0.0}, spec, 0.0), NonSymmetric);

    Mat2 indef = Mat2::identity();
    indef(0, 1) = indef(1, 0) = 2.0;
    CHECK_THROWS_AS(gaussian_grid(indef, Vec2{0.0, 0.0}, spec, 0.0), NonPositive);

    Mat2 neg = Mat2::identity();
    neg(0, 0) = -1.0;
    CHECK_THROWS_AS(gaussian_grid(neg, Vec2{0.0, 0.0}, spec, 0.0), NonPositive);

    CHECK_THROWS(gaussian_grid(Mat2::identity(), Vec2{0.0, 0.0},
                               GridSpec{-1.0, 1.0, -1.0, 1.0, 1, 5}, 0.0));
}

TEST_CASE("vacuum marginal equals the matching gaussian grid") {
    const GridSpec spec{-4.0, 4.0, -4.0, 4.0, 41, 41};
    const WignerGrid marg = laguerre_marginal_grid({0, 0}, 1, 0.0, kCoeffs, 1.0, spec, 8);
    Mat2 cm;  // diag(beta hbar / 2 alpha, alpha hbar / 2 beta)
    cm(0, 0) = 0.25;
    cm(1, 1) = 1.0;
    const WignerGrid gauss = gaussian_grid(cm, Vec2{0.0, 0.0}, spec, 0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < marg.values.size(); ++i)
        worst = std::max(worst, std::abs(marg.values[i] - gauss.values[i]));
    CHECK(worst < 1e-12);
}

TEST_CASE("single-excitation marginals dip negative at the origin") {
    const GridSpec spec{-4.0, 4.0, -4.0, 4.0, 41, 41};
    const WignerGrid m1 = laguerre_marginal_grid({0, 1}, 1, 0.0, kCoeffs, 1.0, spec, 8);
    const WignerGrid m2 = laguerre_marginal_grid({0, 1}, 2, 0.0, kCoeffs, 1.0, spec, 8);
    const std::size_t center = 20u * 41u + 20u;
    CHECK(std::abs(m1.values[center] - 1.0 / M_PI) < 1e-10);
    CHECK(std::abs(m2.values[center] + 1.0 / M_PI) < 1e-10);

    // a quarter rotation moves the excitation into mode 1
    const WignerGrid swapped =
        laguerre_marginal_grid({0, 1}, 1, M_PI / 2.0, kCoeffs, 1.0, spec, 8);
    CHECK(std::abs(swapped.values[center] + 1.0 / M_PI) < 1e-10);
}

TEST_CASE("marginal normalizes on a wide grid") {
    // the window must cover the wide momentum direction: p_scale = sqrt(2)
    const GridSpec spec{-8.0, 8.0, -8.0, 8.0, 161, 161};
    const WignerGrid grid = laguerre_marginal_grid({0, 1}, 2, 0.0, kCoeffs, 1.0, spec, 8);
    double sum = 0.0;
    for (double v : grid.values) sum += v;
    CHECK(std::abs(sum * 0.1 * 0.1 - 1.0) < 1e-8);
}

TEST_CASE("marginal parallel and reference grids agree") {
    const GridSpec spec{-3.0, 3.0, -3.0, 3.0, 41, 41};
    const WignerGrid par = laguerre_marginal_grid({0, 1}, 2, 0.6, kCoeffs, 1.0, spec, 8);
    const WignerGrid ref = laguerre_marginal_grid_reference({0, 1}, 2, 0.6, kCoeffs, 1.0, spec, 8);
    double worst = 0.0;
    for (std::size_t i = 0; i < par.values.size(); ++i)
        worst = std::max(worst, std::abs(par.values[i] - ref.values[i]));
    CHECK(worst <= 1e-15);
}

TEST_CASE("marginal enforces the quadrature order bound") {
    const GridSpec spec{-2.0, 2.0, -2.0, 2.0, 5, 5};
    CHECK_THROWS_AS(laguerre_marginal_grid({2, 3}, 1, 0.0, kCoeffs, 1.0, spec, 6), OrderTooLow);
    CHECK_THROWS(laguerre_marginal_grid({0, 1}, 3, 0.0, kCoeffs, 1.0, spec, 8));  // bad mode
}

TEST_CASE("grid rendering carries the window and the samples") {
    GridSpec spec{-1.0, 1.0, 0.0, 2.0, 3, 2};
    WignerGrid grid{spec, 0.5, {1.0, 2.5, -0.125, 0.0, 1e-3, 4.0}};
    const std::string text = format_grid(grid);
    std::istringstream in(text);
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "# -1 1 0 2 3 2 0.5");
    int rows = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double v;
        int fields = 0;
        while (row >> v) ++fields;
        CHECK(fields == 3);
        ++rows;
    }
    CHECK(rows == 2);

    std::ostringstream out;
    write_grid(out, grid);
    CHECK(out.str() == text);
}
