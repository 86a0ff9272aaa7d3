#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qb/basis.hpp"
#include "qb/model.hpp"
#include "qb/ode.hpp"
#include "qb/types.hpp"

namespace qb {

/// Uniform recording grid.  t_max is measured in units of pi/Omega_R (one
/// half Rabi period of the N=1 Fock reference case); samples points are
/// recorded from 0 to t_max inclusive.
struct TimeGrid {
    double t_max = 3.0;
    int samples = 3001;

    void validate() const {
        if (t_max <= 0.0) throw ConfigError("TimeGrid: t_max must be positive");
        if (samples < 100) throw ConfigError("TimeGrid: at least 100 samples required");
    }

    std::vector<double> times() const {
        std::vector<double> t(samples);
        for (int k = 0; k < samples; ++k) t[k] = t_max * double(k) / double(samples - 1);
        return t;
    }
};

enum class Method { AdaptiveRK, FixedRK4 };

struct IntegratorConfig {
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double max_step = 0.0; ///< natural time units; 0 = automatic
    Method method = Method::AdaptiveRK;

    void validate() const {
        if (rel_tol <= 0.0 || abs_tol <= 0.0)
            throw ConfigError("IntegratorConfig: tolerances must be positive");
    }
};

/// Recorded observables of one evolution.  Energies are in units of
/// hbar omega_c, times in units of pi/Omega_R.
struct Trajectory {
    std::vector<double> times;
    std::vector<double> E_h, E_c, Q, ergotropy_h;
    std::vector<double> trace_error, hermiticity_error, min_eigenvalue;

    double initial_energy = 0.0; ///< E_h + E_c at t=0, the conserved total
    BatteryParams params;
    BasisSpec basis;

    bool aborted = false;
    std::string abort_reason;
    std::optional<DensityMatrix> final_state; ///< lab-frame state at the last sample

    double conservation_residual(std::size_t k) const {
        return E_h[k] + E_c[k] + Q[k] - initial_energy;
    }
    double max_conservation_residual() const {
        double worst = 0.0;
        for (std::size_t k = 0; k < times.size(); ++k)
            worst = std::max(worst, std::abs(conservation_residual(k)));
        return worst;
    }
};

/// Per-sample hook used by verification code; receives the holder reduced
/// state in the co-rotating frame (spectrum-equivalent to the lab frame).
using SampleObserver = std::function<void(int index, double t, const Matrix& holder_reduced)>;

/// Evolve rho0 under the master equation, integrating the heat
/// Q(t) = -int_0^t Tr{H D[rho]} dt' alongside the state.  Physicality
/// diagnostics are recorded at every sample; if any exceeds ten times its
/// allowed bound the run is aborted and the partial trajectory returned
/// with the error flag set.
Trajectory integrate(const DensityMatrix& rho0, const BatteryParams& params,
                     const BasisSpec& basis, const TimeGrid& grid, const IntegratorConfig& cfg,
                     const SampleObserver& observer = nullptr);

/// Normal-mode discharge stage: keep the holder state reached by `traj`,
/// reset the charger to vacuum, and evolve again.
Trajectory continue_discharge(const Trajectory& traj, const BatteryParams& params,
                              const BasisSpec& basis, const TimeGrid& grid,
                              const IntegratorConfig& cfg);

} // namespace qb
