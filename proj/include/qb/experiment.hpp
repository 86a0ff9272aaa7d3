#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qb/merit.hpp"
#include "qb/model.hpp"

namespace qb {

enum class BasisPolicy { PreferDicke, ForceFull };

/// Shared settings of a comparison or sweep run.  The kappa field of
/// `params` is ignored; each grid point supplies its own.
struct ExperimentConfig {
    BatteryParams params{};
    TimeGrid grid{};
    IntegratorConfig integrator{};
    BasisPolicy basis_policy = BasisPolicy::PreferDicke;

    QubitRep rep() const {
        return basis_policy == BasisPolicy::ForceFull ? QubitRep::Full : QubitRep::Dicke;
    }
};

/// Collective battery versus N copies of the down-scaled unit cell.
/// Parallel quantities are the unit cell's, scaled: energies, power and
/// ergotropy extensive in N, times and rates unchanged.
struct ComparisonReport {
    InitKind kind = InitKind::Fock;
    int n = 1;
    double kappa_over_rabi = 0.0;

    MeritValues collective, unit_cell, parallel;

    double gamma_E = 1.0;
    double gamma_rate = 1.0;
    double gamma_P = 1.0;
    double gamma_ergo = 0.0;
    bool gamma_ergo_defined = false;
};

/// One simulated battery: merit values of a single charging run.
MeritValues run_single(InitKind kind, int n, double kappa_over_rabi,
                       const ExperimentConfig& cfg);

/// Full collective-vs-parallel comparison at one grid point.
ComparisonReport run_point(InitKind kind, int n, double kappa_over_rabi,
                           const ExperimentConfig& cfg);

/// Assemble a report from precomputed merit values (shared unit cells).
ComparisonReport make_report(InitKind kind, int n, double kappa_over_rabi,
                             const MeritValues& collective, const MeritValues& unit_cell);

/// Sweep axes.  kappa values are in units of Omega_R.
struct SweepGrid {
    std::vector<InitKind> init_kinds{InitKind::Fock};
    std::vector<int> n_values{};        ///< empty = per-kind default range
    std::vector<double> kappa_values{}; ///< empty = 11 points on [0, 2]
    BasisPolicy basis_policy = BasisPolicy::PreferDicke;

    static std::vector<int> default_n_values(InitKind kind);
    static std::vector<double> default_kappa_values();
};

struct SweepPoint {
    InitKind kind = InitKind::Fock;
    int n = 1;
    double kappa_over_rabi = 0.0;
    std::string status = "ok"; ///< "ok" or the failure kind
    std::string error;
    std::optional<ComparisonReport> report;
};

/// Run every grid point; points execute concurrently (QB_WORKERS overrides
/// the worker count) and the table keeps (kind, N, kappa) order.  Failures
/// become status rows, never omissions.
std::vector<SweepPoint> run_sweep(const SweepGrid& grid, const ExperimentConfig& cfg);

/// Energy bookkeeping at the first maximum: holder energy, holder
/// ergotropy, charger energy and heat, for the collective battery and the
/// N-copy parallel reference.  Values are read at the recorded sample
/// nearest to each battery's own tau_bar.
struct EnergyDistribution {
    struct Components {
        double E_h = 0.0, Ergo_h = 0.0, E_c = 0.0, Q = 0.0;
        double total() const { return E_h + E_c + Q; }
    };
    Components collective, parallel;
    double tau_bar_collective = 0.0, tau_bar_unit = 0.0;
};

EnergyDistribution energy_distribution(InitKind kind, int n, double kappa_over_rabi,
                                       const ExperimentConfig& cfg);

/// Run the identical physics in the Dicke and full representations and
/// report the worst disagreement: holder-energy difference and holder
/// reduced-state trace distance (after symmetric embedding), both taken
/// over all samples.
struct EquivalenceReport {
    double max_energy_diff = 0.0;
    double max_trace_distance = 0.0;
};

EquivalenceReport dicke_full_equivalence(int n, InitKind kind, double kappa_over_rabi,
                                         const ExperimentConfig& cfg);

} // namespace qb
