// Timing comparison of the OpenMP kernels against their serial references:
// the moment quadrature over all order^4 nodes and the marginal grid render.

#include <chrono>
#include <cmath>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ncheat/hamiltonian.hpp"
#include "ncheat/nc_algebra.hpp"
#include "ncheat/quadrature.hpp"
#include "ncheat/wigner.hpp"

using namespace ncheat;

namespace {

template <typename F>
double time_ms(F&& f, int repeats) {
    const auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < repeats; ++i) f();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / repeats;
}

double max_diff(const MomentSums& a, const MomentSums& b) {
    double d = 0.0;
    d = std::max(d, std::abs(a.norm - b.norm));
    d = std::max(d, std::abs(a.u1 - b.u1));
    d = std::max(d, std::abs(a.v1 - b.v1));
    d = std::max(d, std::abs(a.u2 - b.u2));
    d = std::max(d, std::abs(a.v2 - b.v2));
    d = std::max(d, std::abs(a.u1u1 - b.u1u1));
    d = std::max(d, std::abs(a.v1v1 - b.v1v1));
    d = std::max(d, std::abs(a.u1v1 - b.u1v1));
    d = std::max(d, std::abs(a.u2u2 - b.u2u2));
    d = std::max(d, std::abs(a.v2v2 - b.v2v2));
    d = std::max(d, std::abs(a.u2v2 - b.u2v2));
    return d;
}

double max_diff(const WignerGrid& a, const WignerGrid& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        d = std::max(d, std::abs(a.values[i] - b.values[i]));
    return d;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both variants run serially\n");
#endif

    {
        const FockPair pair{2, 3};
        const double angle = 0.7;
        const GaussHermiteRule rule = gauss_hermite(32);
        const int repeats = 3;
        MomentSums par, ser;
        // untimed warm-up so the first timed call does not pay runtime start-up
        par = rotated_fock_moment_sums(pair, angle, rule);
        ser = rotated_fock_moment_sums_reference(pair, angle, rule);
        const double t_par = time_ms([&] { par = rotated_fock_moment_sums(pair, angle, rule); }, repeats);
        const double t_ser =
            time_ms([&] { ser = rotated_fock_moment_sums_reference(pair, angle, rule); }, repeats);
        std::printf("moment sums, order 32 (1048576 nodes), state (2,3):\n");
        std::printf("  parallel %8.2f ms   serial %8.2f ms   speedup %.2fx   max diff %.3e\n",
                    t_par, t_ser, t_ser / t_par, max_diff(par, ser));
    }

    {
        const FockPair pair{0, 1};
        const CoeffSet coeffs =
            closed_form_coefficients(OscillatorSpec{1.0, 4.0, 1.0}, make_algebra(0.25, 0.25, 1.0));
        const GridSpec spec{-8.0, 8.0, -8.0, 8.0, 201, 201};
        const int repeats = 3;
        WignerGrid par, ser;
        par = laguerre_marginal_grid(pair, 1, 0.9, coeffs, 1.0, spec, 16);
        ser = laguerre_marginal_grid_reference(pair, 1, 0.9, coeffs, 1.0, spec, 16);
        const double t_par =
            time_ms([&] { par = laguerre_marginal_grid(pair, 1, 0.9, coeffs, 1.0, spec, 16); }, repeats);
        const double t_ser = time_ms(
            [&] { ser = laguerre_marginal_grid_reference(pair, 1, 0.9, coeffs, 1.0, spec, 16); },
            repeats);
        std::printf("marginal grid, 201x201 cells, order 16 rule per cell:\n");
        std::printf("  parallel %8.2f ms   serial %8.2f ms   speedup %.2fx   max diff %.3e\n",
                    t_par, t_ser, t_ser / t_par, max_diff(par, ser));
    }
    return 0;
}
