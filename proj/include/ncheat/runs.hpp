#pragma once

#include <string>
#include <vector>

#include "ncheat/config.hpp"
#include "ncheat/wigner.hpp"

namespace ncheat {

/// CSV with columns t, E1, E2, Q1, Q2, P over steps points spanning
/// [0, min(t_max, tau)] (or [0, t_max] when no equilibrium exists),
/// followed by '#' metadata lines for gamma, Gamma and tau. 15 significant
/// digits; deterministic byte-for-byte for a given config.
std::string run_simulate(const RunConfig& cfg);

/// CSV with columns gamma, Gamma, tau, P_tau, second_law, no_equilibrium;
/// one row per sweep point (a gammas list or a thetas x etas grid), sorted
/// by gamma. Rows without an energy crossing carry nan and flag 1.
std::string run_sweep(const RunConfig& cfg);

/// Single-mode covariance of the requested mode at time t rendered as a
/// Gaussian density over a square window (half-width from the config, or
/// six standard deviations of the wider mode when unset).
WignerGrid run_wigner(const RunConfig& cfg);

/// One verification check: the measured extremum against its threshold.
struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
    std::string note;
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

/// Cross-checks of the closed forms against the two independent oracles
/// plus the structural identities, on the configured model point and on
/// fixed-seed random parameter draws.
VerifyReport run_verify(const RunConfig& cfg);

/// One line per check plus a summary line.
std::string format_verify(const VerifyReport& report);

}  // namespace ncheat
