#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "ncheat/errors.hpp"
#include "ncheat/runs.hpp"
#include "ncheat/wigner.hpp"

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_path;
    std::vector<std::pair<std::string, std::string>> overrides;
};

const char* const kKeys[] = {"hbar", "m",     "k_B",   "omega", "omega_B", "theta", "eta",
                             "gamma", "n_bar", "m_bar", "T1",    "T2",      "k",     "l",
                             "t_max", "steps", "order", "gammas", "thetas", "etas",  "mode",
                             "t",     "window", "nx",    "ny"};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--config", args.config_path, "flat key = value file, applied before flag overrides");
    cmd->add_option("--out", args.out_path, "write output to this file instead of stdout");
    for (const char* key : kKeys) {
        cmd->add_option_function<std::string>(
            std::string("--") + key,
            [key, &args](const std::string& v) { args.overrides.emplace_back(key, v); },
            std::string("override config key ") + key);
    }
}

ncheat::RunConfig build_config(const CommonArgs& args) {
    ncheat::RunConfig cfg;
    if (!args.config_path.empty()) ncheat::apply_config_file(cfg, args.config_path);
    for (const auto& [key, value] : args.overrides) ncheat::set_config_key(cfg, key, value);
    return cfg;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << out_path << '\n';
        return 2;
    }
    out << text;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"heat flow between coupled oscillators with deformed phase-space commutators"};
    app.require_subcommand(1);

    CommonArgs sim_args, sweep_args, wigner_args, verify_args;
    CLI::App* sim = app.add_subcommand("simulate", "local energies, heats and power over time (CSV)");
    add_common(sim, sim_args);
    CLI::App* sweep = app.add_subcommand("sweep", "equilibrium summary per coupling correction (CSV)");
    add_common(sweep, sweep_args);
    CLI::App* wigner = app.add_subcommand("wigner", "single-mode covariance rendered on a grid");
    add_common(wigner, wigner_args);
    CLI::App* verify = app.add_subcommand("verify", "run the oracle cross-check suite");
    add_common(verify, verify_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sim->parsed()) return emit(ncheat::run_simulate(build_config(sim_args)), sim_args.out_path);
        if (sweep->parsed())
            return emit(ncheat::run_sweep(build_config(sweep_args)), sweep_args.out_path);
        if (wigner->parsed())
            return emit(ncheat::format_grid(ncheat::run_wigner(build_config(wigner_args))),
                        wigner_args.out_path);
        if (verify->parsed()) {
            const ncheat::VerifyReport report = ncheat::run_verify(build_config(verify_args));
            const int rc = emit(ncheat::format_verify(report), verify_args.out_path);
            if (rc != 0) return rc;
            return report.all_pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
