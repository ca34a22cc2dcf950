#include "ncheat/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ncheat/errors.hpp"

namespace ncheat {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    const std::string v = trim(value);
    if (v.empty()) throw ConfigError("empty value for " + key);
    char* end = nullptr;
    const double d = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size()) throw ConfigError("malformed number for " + key + ": " + value);
    return d;
}

int parse_int(const std::string& key, const std::string& value) {
    const double d = parse_double(key, value);
    const int i = static_cast<int>(d);
    if (static_cast<double>(i) != d) throw ConfigError(key + " must be an integer");
    return i;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::string item;
    std::istringstream in(value);
    while (std::getline(in, item, ',')) out.push_back(parse_double(key, item));
    if (out.empty()) throw ConfigError("empty list for " + key);
    return out;
}

}  // namespace

void set_config_key(RunConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "hbar") cfg.hbar = parse_double(key, value);
    else if (key == "m") cfg.m = parse_double(key, value);
    else if (key == "k_B") cfg.k_B = parse_double(key, value);
    else if (key == "omega") cfg.omega = parse_double(key, value);
    else if (key == "omega_B") cfg.omega_B = parse_double(key, value);
    else if (key == "theta") cfg.theta = parse_double(key, value);
    else if (key == "eta") cfg.eta = parse_double(key, value);
    else if (key == "gamma") cfg.gamma = parse_double(key, value);
    else if (key == "n_bar") cfg.n_bar = parse_double(key, value);
    else if (key == "m_bar") cfg.m_bar = parse_double(key, value);
    else if (key == "T1") cfg.T1 = parse_double(key, value);
    else if (key == "T2") cfg.T2 = parse_double(key, value);
    else if (key == "k") cfg.k = parse_int(key, value);
    else if (key == "l") cfg.l = parse_int(key, value);
    else if (key == "t_max") cfg.t_max = parse_double(key, value);
    else if (key == "steps") cfg.steps = parse_int(key, value);
    else if (key == "order") cfg.order = parse_int(key, value);
    else if (key == "gammas") cfg.gammas = parse_list(key, value);
    else if (key == "thetas") cfg.thetas = parse_list(key, value);
    else if (key == "etas") cfg.etas = parse_list(key, value);
    else if (key == "mode") cfg.mode = parse_int(key, value);
    else if (key == "t") cfg.t = parse_double(key, value);
    else if (key == "window") cfg.window = parse_double(key, value);
    else if (key == "nx") cfg.nx = parse_int(key, value);
    else if (key == "ny") cfg.ny = parse_int(key, value);
    else throw ConfigError("unknown config key: " + key);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) throw ConfigError(path + ":" + std::to_string(lineno) + ": empty key");
        set_config_key(cfg, key, value);
    }
}

ResolvedRun resolve(const RunConfig& cfg) {
    if (cfg.hbar <= 0.0) throw ConfigError("hbar must be positive");
    if (cfg.m <= 0.0) throw ConfigError("m must be positive");
    if (cfg.k_B <= 0.0) throw ConfigError("k_B must be positive");
    if (cfg.omega <= 0.0) throw ConfigError("omega must be positive");
    if (cfg.omega_B < 0.0) throw ConfigError("omega_B must be nonnegative");
    if (cfg.t_max <= 0.0) throw ConfigError("t_max must be positive");
    if (cfg.steps < 2) throw ConfigError("steps must be at least 2");
    if (cfg.order < 2) throw ConfigError("order must be at least 2");
    if (cfg.t < 0.0) throw ConfigError("t must be nonnegative");
    if (cfg.window < 0.0) throw ConfigError("window must be nonnegative");
    if (cfg.nx < 2 || cfg.ny < 2) throw ConfigError("nx and ny must be at least 2");
    if (cfg.mode != 1 && cfg.mode != 2) throw ConfigError("mode must be 1 or 2");

    ResolvedRun run;
    run.osc = OscillatorSpec{cfg.m, cfg.omega, cfg.omega_B};

    const bool has_te = cfg.theta.has_value() || cfg.eta.has_value();
    if (cfg.gamma.has_value() && has_te)
        throw ConfigError("give either gamma or the pair (theta, eta), not both");
    if (cfg.gamma.has_value()) {
        if (*cfg.gamma < 0.0) throw ConfigError("gamma must be nonnegative");
        run.gamma = *cfg.gamma;
    } else if (has_te) {
        if (!cfg.theta.has_value() || !cfg.eta.has_value())
            throw ConfigError("theta and eta must be given together");
        run.algebra = make_algebra(*cfg.theta, *cfg.eta, cfg.hbar);
        run.coeffs = closed_form_coefficients(run.osc, *run.algebra);
        run.gamma = run.coeffs->gamma;
    } else {
        throw ConfigError("deformation missing: give gamma or the pair (theta, eta)");
    }
    run.Gamma = run.gamma + 0.5 * cfg.omega_B;

    const bool has_occ = cfg.n_bar.has_value() || cfg.m_bar.has_value();
    const bool has_temp = cfg.T1.has_value() || cfg.T2.has_value();
    if (has_occ && has_temp)
        throw ConfigError("give either occupations (n_bar, m_bar) or temperatures (T1, T2), not both");
    run.pair.omega = cfg.omega;
    run.pair.hbar = cfg.hbar;
    run.pair.k_B = cfg.k_B;
    if (has_occ) {
        if (!cfg.n_bar.has_value() || !cfg.m_bar.has_value())
            throw ConfigError("n_bar and m_bar must be given together");
        if (*cfg.n_bar < 0.0 || *cfg.m_bar < 0.0) throw ConfigError("occupations must be nonnegative");
        run.pair.n_bar = *cfg.n_bar;
        run.pair.m_bar = *cfg.m_bar;
    } else if (has_temp) {
        if (!cfg.T1.has_value() || !cfg.T2.has_value())
            throw ConfigError("T1 and T2 must be given together");
        if (*cfg.T1 <= 0.0 || *cfg.T2 <= 0.0) throw ConfigError("temperatures must be positive");
        run.pair.n_bar = mean_occupation(*cfg.T1, cfg.omega, cfg.hbar, cfg.k_B);
        run.pair.m_bar = mean_occupation(*cfg.T2, cfg.omega, cfg.hbar, cfg.k_B);
    } else {
        throw ConfigError("bath state missing: give (n_bar, m_bar) or (T1, T2)");
    }

    run.fock = FockPair{cfg.k, cfg.l};
    try {
        validate(run.fock);
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
    return run;
}

}  // namespace ncheat
