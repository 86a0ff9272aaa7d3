#include "qb/validate.hpp"

#include <cmath>

#include "qb/experiment.hpp"
#include "qb/liouville.hpp"
#include "qb/merit.hpp"

namespace qb {

namespace {

ExperimentConfig desk_config() {
    ExperimentConfig cfg;
    cfg.grid = TimeGrid{3.0, 1501};
    return cfg;
}

} // namespace

CheckResult conservation_check(const Trajectory& traj, double tol_per_energy) {
    CheckResult r;
    r.name = "conservation";
    r.threshold = tol_per_energy * std::abs(traj.initial_energy);
    r.worst = traj.max_conservation_residual();
    r.pass = !traj.aborted && r.worst <= r.threshold;
    r.detail = "max |E_h + E_c + Q - E0| over samples";
    return r;
}

CheckResult analytic_jc_check() {
    CheckResult r;
    r.name = "analytic_jc";
    r.threshold = 2e-6;
    r.detail = "N=1 Fock kappa=0 versus sin^2(gt) and the closed-form ergotropy";

    const BatteryParams p{};
    const BasisSpec basis = BasisSpec::dicke(1, 2);
    const TimeGrid grid{3.0, 3001};
    const Trajectory traj =
        integrate(initial_state(InitKind::Fock, 1, basis), p, basis, grid, IntegratorConfig{});

    const double unit = p.time_unit();
    double worst = 0.0;
    for (std::size_t k = 0; k < traj.times.size(); k += 60) {
        const double t = traj.times[k] * unit;
        worst = std::max(worst, std::abs(traj.E_h[k] - std::pow(std::sin(p.g * t), 2)));
        worst = std::max(worst, std::abs(traj.ergotropy_h[k] - jc_ergotropy_analytic(p.g, t)));
    }
    const MeritValues mv = merit_from_trajectory(traj);
    worst = std::max(worst, std::abs(mv.tau_bar - 1.0));
    worst = std::max(worst, std::abs(mv.E_bar - 1.0));
    worst = std::max(worst, std::abs(mv.Ergo_bar - 1.0));

    r.worst = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CheckResult superoperator_check() {
    CheckResult r;
    r.name = "superoperator_exponential";
    r.threshold = 1e-8;
    r.detail = "trace distance of stepped versus exp(L t) states, N=1, one photon";

    double worst = 0.0;
    for (double kappa_over_rabi : {0.2, 1.0}) {
        BatteryParams p{};
        p.kappa = kappa_over_rabi * p.rabi();
        const BasisSpec basis = BasisSpec::dicke(1, 2);
        const DensityMatrix rho0 = initial_state(InitKind::Fock, 1, basis);
        for (int i = 1; i <= 10; ++i) {
            const double t_io = 0.3 * i;
            const TimeGrid grid{t_io, 101};
            const Trajectory traj = integrate(rho0, p, basis, grid, IntegratorConfig{});
            const DensityMatrix oracle =
                propagate_via_liouvillian(rho0, p, basis, t_io * p.time_unit());
            worst = std::max(worst, trace_distance(traj.final_state->m, oracle.m));
        }
    }
    r.worst = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CheckResult representation_check() {
    CheckResult r;
    r.name = "dicke_full_equivalence";
    r.threshold = 1e-8;
    r.detail = "holder energy and embedded reduced state, N=2, desk grid";

    ExperimentConfig cfg = desk_config();
    cfg.grid = TimeGrid{2.0, 401};
    cfg.integrator.rel_tol = 1e-10;
    cfg.integrator.abs_tol = 1e-12;

    double worst = 0.0;
    for (InitKind kind : {InitKind::Fock, InitKind::Coherent, InitKind::Thermal})
        for (double kappa : {0.0, 1.0}) {
            const EquivalenceReport rep = dicke_full_equivalence(2, kind, kappa, cfg);
            worst = std::max({worst, rep.max_energy_diff, rep.max_trace_distance});
        }
    r.worst = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CheckResult collective_rabi_check() {
    CheckResult r;
    r.name = "collective_rabi";
    r.threshold = 1e-6;
    r.detail = "single shared photon: E_h = sin^2(sqrt(N) g t), N in {4, 9}";

    const BatteryParams p{};
    double worst = 0.0;
    for (int n : {4, 9}) {
        const BasisSpec basis = BasisSpec::dicke(n, 2);
        Matrix rho0 = Matrix::Zero(basis.dim(), basis.dim());
        rho0(basis.holder_dim(), basis.holder_dim()) = 1.0; // |1> (x) all ground
        const TimeGrid grid{1.5, 1501};
        const Trajectory traj =
            integrate(DensityMatrix(std::move(rho0)), p, basis, grid, IntegratorConfig{});
        const double root_n = std::sqrt(double(n));
        for (std::size_t k = 0; k < traj.times.size(); k += 10) {
            const double expected =
                std::pow(std::sin(root_n * p.g * traj.times[k] * p.time_unit()), 2);
            worst = std::max(worst, std::abs(traj.E_h[k] - expected));
        }
    }
    r.worst = worst;
    r.pass = worst <= r.threshold;
    return r;
}

CheckResult dissipative_suite_check() {
    CheckResult r;
    r.name = "dissipative_suite";
    r.threshold = 1e-6;
    r.detail = "conservation, heat positivity, ergotropy bound on a small grid";

    ExperimentConfig cfg = desk_config();
    double worst = 0.0;
    for (InitKind kind : {InitKind::Fock, InitKind::Coherent})
        for (int n : {1, 2})
            for (double kappa : {0.0, 0.5, 2.0}) {
                BatteryParams p = cfg.params;
                p.kappa = kappa * p.rabi();
                const BasisSpec basis = auto_basis(kind, n, QubitRep::Dicke);
                const Trajectory traj =
                    integrate(initial_state(kind, n, basis), p, basis, cfg.grid, cfg.integrator);
                if (traj.aborted) {
                    r.pass = false;
                    r.detail = "run aborted: " + traj.abort_reason;
                    return r;
                }
                worst = std::max(worst, traj.max_conservation_residual() / traj.initial_energy);
                for (std::size_t k = 0; k < traj.times.size(); ++k) {
                    worst = std::max(worst, -traj.Q[k] / traj.initial_energy);
                    worst = std::max(worst, (traj.ergotropy_h[k] - traj.E_h[k]) / 1e-3);
                }
            }
    r.worst = worst;
    r.pass = worst <= r.threshold;
    return r;
}

std::vector<CheckResult> run_all_checks() {
    return {analytic_jc_check(), collective_rabi_check(), superoperator_check(),
            representation_check(), dissipative_suite_check()};
}

} // namespace qb
