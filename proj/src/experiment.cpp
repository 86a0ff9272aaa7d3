#include "qb/experiment.hpp"

#include <atomic>
#include <cstdlib>
#include <map>
#include <thread>

#include "qb/hilbert.hpp"
#include "qb/liouville.hpp"

namespace qb {

namespace {

BatteryParams params_at(const ExperimentConfig& cfg, double kappa_over_rabi) {
    BatteryParams p = cfg.params;
    p.kappa = kappa_over_rabi * p.rabi();
    p.validate();
    return p;
}

Trajectory charge(InitKind kind, int n, double kappa_over_rabi, const ExperimentConfig& cfg,
                  const SampleObserver& observer = nullptr) {
    const BatteryParams p = params_at(cfg, kappa_over_rabi);
    const BasisSpec basis = auto_basis(kind, n, cfg.rep());
    return integrate(initial_state(kind, n, basis), p, basis, cfg.grid, cfg.integrator,
                     observer);
}

/// Run tasks 0..count-1 on a small pool; results keep task order.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    unsigned workers = std::thread::hardware_concurrency();
    if (const char* env = std::getenv("QB_WORKERS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v >= 1) workers = unsigned(v);
    }
    workers = std::min<unsigned>(workers, unsigned(count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

} // namespace

MeritValues run_single(InitKind kind, int n, double kappa_over_rabi,
                       const ExperimentConfig& cfg) {
    return merit_from_trajectory(charge(kind, n, kappa_over_rabi, cfg));
}

ComparisonReport make_report(InitKind kind, int n, double kappa_over_rabi,
                             const MeritValues& collective, const MeritValues& unit_cell) {
    ComparisonReport r;
    r.kind = kind;
    r.n = n;
    r.kappa_over_rabi = kappa_over_rabi;
    r.collective = collective;
    r.unit_cell = unit_cell;

    r.parallel = unit_cell;
    r.parallel.E_bar *= n;
    r.parallel.P_bar *= n;
    r.parallel.Ergo_bar *= n;

    r.gamma_E = r.collective.E_bar / r.parallel.E_bar;
    r.gamma_rate = r.collective.Omega_bar / r.parallel.Omega_bar;
    r.gamma_P = r.collective.P_bar / r.parallel.P_bar;
    r.gamma_ergo_defined = std::abs(r.parallel.Ergo_bar) >= 1e-12;
    r.gamma_ergo = r.gamma_ergo_defined ? r.collective.Ergo_bar / r.parallel.Ergo_bar : 0.0;
    return r;
}

ComparisonReport run_point(InitKind kind, int n, double kappa_over_rabi,
                           const ExperimentConfig& cfg) {
    const MeritValues unit = run_single(kind, 1, kappa_over_rabi, cfg);
    const MeritValues coll = n == 1 ? unit : run_single(kind, n, kappa_over_rabi, cfg);
    return make_report(kind, n, kappa_over_rabi, coll, unit);
}

std::vector<int> SweepGrid::default_n_values(InitKind kind) {
    int n_max = 10;
    if (kind == InitKind::Coherent) n_max = 4;
    if (kind == InitKind::Thermal) n_max = 6;
    std::vector<int> out(n_max);
    for (int i = 0; i < n_max; ++i) out[i] = i + 1;
    return out;
}

std::vector<double> SweepGrid::default_kappa_values() {
    std::vector<double> out(11);
    for (int i = 0; i < 11; ++i) out[i] = 0.2 * i;
    return out;
}

std::vector<SweepPoint> run_sweep(const SweepGrid& grid, const ExperimentConfig& cfg) {
    ExperimentConfig point_cfg = cfg;
    point_cfg.basis_policy = grid.basis_policy;

    const std::vector<double> kappas =
        grid.kappa_values.empty() ? SweepGrid::default_kappa_values() : grid.kappa_values;

    std::vector<SweepPoint> table;
    for (InitKind kind : grid.init_kinds) {
        const std::vector<int> ns =
            grid.n_values.empty() ? SweepGrid::default_n_values(kind) : grid.n_values;
        for (int n : ns)
            for (double kappa : kappas) {
                SweepPoint pt;
                pt.kind = kind;
                pt.n = n;
                pt.kappa_over_rabi = kappa;
                table.push_back(pt);
            }
    }

    // Each (kind, kappa) shares one unit-cell run across all N.
    struct UnitKey {
        InitKind kind;
        double kappa;
        bool operator<(const UnitKey& o) const {
            return kind != o.kind ? kind < o.kind : kappa < o.kappa;
        }
    };
    std::map<UnitKey, std::size_t> unit_index;
    std::vector<UnitKey> unit_keys;
    for (const SweepPoint& pt : table) {
        const UnitKey key{pt.kind, pt.kappa_over_rabi};
        if (unit_index.emplace(key, unit_keys.size()).second) unit_keys.push_back(key);
    }

    struct UnitResult {
        std::optional<MeritValues> merit;
        std::string status, error;
    };
    std::vector<UnitResult> units(unit_keys.size());
    parallel_for(unit_keys.size(), [&](std::size_t i) {
        try {
            units[i].merit = run_single(unit_keys[i].kind, 1, unit_keys[i].kappa, point_cfg);
            units[i].status = "ok";
        } catch (const Error& e) {
            units[i].status = "unit_cell_failed";
            units[i].error = e.what();
        }
    });

    parallel_for(table.size(), [&](std::size_t i) {
        SweepPoint& pt = table[i];
        const UnitResult& unit = units[unit_index.at(UnitKey{pt.kind, pt.kappa_over_rabi})];
        if (!unit.merit) {
            pt.status = unit.status;
            pt.error = unit.error;
            return;
        }
        try {
            const MeritValues coll =
                pt.n == 1 ? *unit.merit
                          : run_single(pt.kind, pt.n, pt.kappa_over_rabi, point_cfg);
            pt.report = make_report(pt.kind, pt.n, pt.kappa_over_rabi, coll, *unit.merit);
            pt.status = "ok";
        } catch (const NoMaximumError& e) {
            pt.status = "no_maximum";
            pt.error = e.what();
        } catch (const TruncationError& e) {
            pt.status = "truncation";
            pt.error = e.what();
        } catch (const Error& e) {
            pt.status = "error";
            pt.error = e.what();
        }
    });
    return table;
}

namespace {

EnergyDistribution::Components components_at_first_max(const Trajectory& traj) {
    const FirstMax fm = first_maximum(traj.times, traj.E_h);
    if (!fm.found)
        throw NoMaximumError("energy_distribution: no first maximum of E_h in the window");
    const double dt = traj.times[1] - traj.times[0];
    const std::size_t k =
        std::min(std::size_t(std::lround(fm.tau_bar / dt)), traj.times.size() - 1);
    EnergyDistribution::Components c;
    c.E_h = traj.E_h[k];
    c.Ergo_h = traj.ergotropy_h[k];
    c.E_c = traj.E_c[k];
    c.Q = traj.Q[k];
    return c;
}

} // namespace

EnergyDistribution energy_distribution(InitKind kind, int n, double kappa_over_rabi,
                                       const ExperimentConfig& cfg) {
    EnergyDistribution out;

    const Trajectory coll = charge(kind, n, kappa_over_rabi, cfg);
    out.collective = components_at_first_max(coll);
    out.tau_bar_collective = first_maximum(coll.times, coll.E_h).tau_bar;

    const Trajectory unit = charge(kind, 1, kappa_over_rabi, cfg);
    EnergyDistribution::Components cell = components_at_first_max(unit);
    out.parallel = {n * cell.E_h, n * cell.Ergo_h, n * cell.E_c, n * cell.Q};
    out.tau_bar_unit = first_maximum(unit.times, unit.E_h).tau_bar;
    return out;
}

EquivalenceReport dicke_full_equivalence(int n, InitKind kind, double kappa_over_rabi,
                                         const ExperimentConfig& cfg) {
    if (n > 3)
        throw DimensionMismatch("dicke_full_equivalence: N <= 3 only");

    const BatteryParams p = params_at(cfg, kappa_over_rabi);
    const int cutoff = auto_cutoff(kind, n);

    std::vector<Matrix> dicke_reduced, full_reduced;
    dicke_reduced.reserve(std::size_t(cfg.grid.samples));
    full_reduced.reserve(std::size_t(cfg.grid.samples));

    const BasisSpec dicke = BasisSpec::dicke(n, cutoff);
    const Trajectory traj_d = integrate(
        initial_state(kind, n, dicke), p, dicke, cfg.grid, cfg.integrator,
        [&](int, double, const Matrix& rho_h) { dicke_reduced.push_back(rho_h); });

    const BasisSpec full = BasisSpec::full(n, cutoff);
    const Trajectory traj_f = integrate(
        initial_state(kind, n, full), p, full, cfg.grid, cfg.integrator,
        [&](int, double, const Matrix& rho_h) { full_reduced.push_back(rho_h); });

    if (traj_d.aborted || traj_f.aborted)
        throw PhysicalityError("dicke_full_equivalence: a run aborted");

    EquivalenceReport rep;
    const Matrix s = symmetrizer(n);
    for (std::size_t k = 0; k < dicke_reduced.size(); ++k) {
        rep.max_energy_diff =
            std::max(rep.max_energy_diff, std::abs(traj_d.E_h[k] - traj_f.E_h[k]));
        const Matrix embedded = s * dicke_reduced[k] * s.adjoint();
        rep.max_trace_distance =
            std::max(rep.max_trace_distance, trace_distance(embedded, full_reduced[k]));
    }
    return rep;
}

} // namespace qb
