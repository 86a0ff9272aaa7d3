#include "qb/config.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace qb {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_double(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: '" + key + "' expects a number, got '" + s + "'");
    }
}

int parse_int(const std::string& s, const std::string& key) {
    try {
        std::size_t pos = 0;
        const int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config: '" + key + "' expects an integer, got '" + s + "'");
    }
}

BasisPolicy parse_basis(const std::string& s) {
    if (s == "auto" || s == "dicke") return BasisPolicy::PreferDicke;
    if (s == "full") return BasisPolicy::ForceFull;
    throw ConfigError("config: basis must be auto, dicke or full, got '" + s + "'");
}

Method parse_method(const std::string& s) {
    if (s == "adaptive") return Method::AdaptiveRK;
    if (s == "rk4") return Method::FixedRK4;
    throw ConfigError("config: method must be adaptive or rk4, got '" + s + "'");
}

} // namespace

double kappa_to_natural(double value, const std::string& unit, double g) {
    if (unit == "rabi") return value * 2.0 * g;
    if (unit == "g") return value * g;
    throw ConfigError("kappa unit must be 'rabi' or 'g', got '" + unit + "'");
}

ResolvedRun resolve_run(const RunOptions& opt) {
    ResolvedRun r;
    r.kind = init_kind_from_string(opt.init);
    if (opt.n < 1) throw ConfigError("run: N must be a positive integer");
    r.n = opt.n;

    r.params.g = opt.g;
    r.params.n_th = opt.n_th;
    r.params.kappa = kappa_to_natural(opt.kappa, opt.kappa_unit, opt.g);
    r.params.validate();

    QubitRep rep = QubitRep::Dicke;
    if (opt.basis == "full") rep = QubitRep::Full;
    else if (opt.basis != "auto" && opt.basis != "dicke")
        throw ConfigError("run: basis must be auto, dicke or full");

    int cutoff;
    if (opt.cutoff == "auto") {
        cutoff = auto_cutoff(r.kind, r.n);
    } else {
        cutoff = parse_int(opt.cutoff, "cutoff");
        if (cutoff < 2) throw ConfigError("run: cutoff must be >= 2");
    }
    r.basis = BasisSpec(r.n, rep, cutoff);

    r.grid = TimeGrid{opt.t_max, opt.samples};
    r.grid.validate();
    r.integrator.rel_tol = opt.rel_tol;
    r.integrator.abs_tol = opt.abs_tol;
    r.integrator.method = parse_method(opt.method);
    r.integrator.validate();
    r.out = opt.out;
    return r;
}

SweepConfig parse_sweep_config(const std::string& text) {
    SweepConfig cfg;
    std::string kappa_unit = "rabi";
    std::vector<double> kappa_raw;
    bool have_kappa = false;

    std::set<std::string> seen;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
        if (!seen.insert(key).second)
            throw ConfigError("config: duplicate key '" + key + "'");

        if (key == "init") {
            cfg.grid.init_kinds.clear();
            for (const std::string& item : split_list(value))
                cfg.grid.init_kinds.push_back(init_kind_from_string(item));
        } else if (key == "n") {
            for (const std::string& item : split_list(value)) {
                const int n = parse_int(item, key);
                if (n < 1) throw ConfigError("config: n values must be positive");
                cfg.grid.n_values.push_back(n);
            }
        } else if (key == "kappa") {
            for (const std::string& item : split_list(value))
                kappa_raw.push_back(parse_double(item, key));
            have_kappa = true;
        } else if (key == "kappa_unit") {
            kappa_unit = value;
        } else if (key == "g") {
            cfg.experiment.params.g = parse_double(value, key);
        } else if (key == "n_th") {
            cfg.experiment.params.n_th = parse_double(value, key);
        } else if (key == "basis") {
            cfg.grid.basis_policy = parse_basis(value);
        } else if (key == "t_max") {
            cfg.experiment.grid.t_max = parse_double(value, key);
        } else if (key == "samples") {
            cfg.experiment.grid.samples = parse_int(value, key);
        } else if (key == "rel_tol") {
            cfg.experiment.integrator.rel_tol = parse_double(value, key);
        } else if (key == "abs_tol") {
            cfg.experiment.integrator.abs_tol = parse_double(value, key);
        } else if (key == "method") {
            cfg.experiment.integrator.method = parse_method(value);
        } else if (key == "out") {
            cfg.out = value;
        } else {
            throw ConfigError("config: unknown key '" + key + "'");
        }
    }

    if (have_kappa) {
        const double g = cfg.experiment.params.g;
        const double rabi = 2.0 * g;
        for (double v : kappa_raw)
            cfg.grid.kappa_values.push_back(kappa_to_natural(v, kappa_unit, g) / rabi);
    }

    cfg.experiment.params.validate();
    cfg.experiment.grid.validate();
    cfg.experiment.integrator.validate();
    cfg.experiment.basis_policy = cfg.grid.basis_policy;
    if (cfg.grid.init_kinds.empty())
        throw ConfigError("config: at least one init kind required");
    return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_sweep_config(buffer.str());
}

} // namespace qb
