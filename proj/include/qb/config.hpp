#pragma once

#include <string>
#include <vector>

#include "qb/experiment.hpp"

namespace qb {

/// Convert a rate given in "rabi" (Omega_R) or "g" units into natural units.
double kappa_to_natural(double value, const std::string& unit, double g);

/// Flags of the `run` subcommand, resolved into simulation inputs.
struct RunOptions {
    std::string init = "fock";
    int n = 0;
    double kappa = 0.0;
    std::string kappa_unit = "rabi";
    double g = 1e-3;
    double n_th = 0.0;
    std::string basis = "auto"; ///< auto | dicke | full
    std::string cutoff = "auto";
    double t_max = 3.0;
    int samples = 3001;
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    std::string method = "adaptive"; ///< adaptive | rk4
    std::string out = "trajectory.csv";
};

struct ResolvedRun {
    InitKind kind = InitKind::Fock;
    int n = 1;
    BatteryParams params;
    BasisSpec basis;
    TimeGrid grid;
    IntegratorConfig integrator;
    std::string out;
};

ResolvedRun resolve_run(const RunOptions& opt);

/// Sweep configuration document: one `key = value` pair per line, '#'
/// comments, comma-separated lists for the grid axes.  Recognized keys:
///   init, n, kappa, kappa_unit, g, n_th, basis, t_max, samples,
///   rel_tol, abs_tol, method, out
/// Missing n/kappa fall back to the standard ranges (N up to 10 Fock,
/// 4 coherent, 6 thermal; kappa = 0..2 Omega_R in 11 steps).
struct SweepConfig {
    SweepGrid grid;
    ExperimentConfig experiment;
    std::string out = "summary.csv";
};

SweepConfig parse_sweep_config(const std::string& text);
SweepConfig load_sweep_config(const std::string& path);

} // namespace qb
