#include "qb/cli.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qb/config.hpp"
#include "qb/csv.hpp"
#include "qb/validate.hpp"

namespace qb {

namespace {

int do_run(const RunOptions& opt) {
    const ResolvedRun run = resolve_run(opt);
    const Trajectory traj = integrate(initial_state(run.kind, run.n, run.basis), run.params,
                                      run.basis, run.grid, run.integrator);

    std::ostringstream csv;
    write_trajectory_csv(csv, traj);
    write_file(run.out, csv.str());

    if (traj.aborted) {
        std::cerr << "run aborted: " << traj.abort_reason << "\n";
        std::cerr << "partial trajectory written to " << run.out << "\n";
        return 3;
    }
    std::cout << "wrote " << traj.times.size() << " samples to " << run.out << "\n";
    return 0;
}

int do_sweep(const std::string& config_path, const std::string& out_override) {
    SweepConfig cfg = load_sweep_config(config_path);
    if (!out_override.empty()) cfg.out = out_override;

    const std::vector<SweepPoint> table = run_sweep(cfg.grid, cfg.experiment);

    std::ostringstream csv;
    write_summary_csv(csv, table);
    write_file(cfg.out, csv.str());

    std::size_t failed = 0;
    for (const SweepPoint& pt : table)
        if (pt.status != "ok") {
            ++failed;
            std::cerr << "point (" << to_string(pt.kind) << ", N=" << pt.n
                      << ", kappa=" << pt.kappa_over_rabi << " Omega_R) failed: " << pt.status
                      << " — " << pt.error << "\n";
        }
    std::cout << "wrote " << table.size() << " rows to " << cfg.out;
    if (failed > 0) std::cout << " (" << failed << " failed points)";
    std::cout << "\n";
    return 0;
}

int do_validate() {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();

    bool all_pass = true;
    for (const CheckResult& r : run_all_checks()) {
        all_pass = all_pass && r.pass;
        std::printf("%-28s %s  worst=%.3e  bound=%.3e  (%s)\n", r.name.c_str(),
                    r.pass ? "PASS" : "FAIL", r.worst, r.threshold, r.detail.c_str());
    }
    const double secs = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("validation %s in %.1f s\n", all_pass ? "passed" : "FAILED", secs);
    return all_pass ? 0 : 1;
}

} // namespace

int cli_main(const std::vector<std::string>& args) {
    CLI::App app{"Tavis-Cummings quantum battery simulator"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run = app.add_subcommand("run", "simulate one charging run, write trajectory CSV");
    run->add_option("--init", run_opt.init, "initial condition: fock|coherent|thermal")
        ->required();
    run->add_option("--n", run_opt.n, "number of qubits = mean charger photons")->required();
    run->add_option("--kappa", run_opt.kappa, "dissipator coefficient, in --kappa-unit");
    run->add_option("--kappa-unit", run_opt.kappa_unit, "rabi (Omega_R) or g [rabi]");
    run->add_option("--g", run_opt.g, "coupling in omega_c units [1e-3]");
    run->add_option("--n-th", run_opt.n_th, "environment thermal occupation [0]");
    run->add_option("--basis", run_opt.basis, "auto|dicke|full [auto]");
    run->add_option("--cutoff", run_opt.cutoff, "auto or photon levels to retain [auto]");
    run->add_option("--t-max", run_opt.t_max, "duration in pi/Omega_R units [3.0]");
    run->add_option("--samples", run_opt.samples, "recorded points [3001]");
    run->add_option("--rel-tol", run_opt.rel_tol, "integrator relative tolerance [1e-9]");
    run->add_option("--abs-tol", run_opt.abs_tol, "integrator absolute tolerance [1e-11]");
    run->add_option("--method", run_opt.method, "adaptive|rk4 [adaptive]");
    run->add_option("--out", run_opt.out, "output CSV path [trajectory.csv]");

    std::string sweep_config, sweep_out;
    CLI::App* sweep =
        app.add_subcommand("sweep", "run a (init, N, kappa) grid, write summary CSV");
    sweep->add_option("config", sweep_config, "sweep config file")->required();
    sweep->add_option("--out", sweep_out, "override the config's output path");

    CLI::App* validate = app.add_subcommand("validate", "run the verification suite");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) return do_run(run_opt);
        if (sweep->parsed()) return do_sweep(sweep_config, sweep_out);
        if (validate->parsed()) return do_validate();
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}

} // namespace qb
