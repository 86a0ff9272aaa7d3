#pragma once

#include <string>
#include <vector>

#include "qb/evolve.hpp"

namespace qb {

struct CheckResult {
    std::string name;
    bool pass = false;
    double worst = 0.0;     ///< worst observed deviation
    double threshold = 0.0; ///< allowed bound
    std::string detail;
};

/// Post-processing check: |E_h + E_c + Q - E(0)| at every sample against
/// tol_per_energy * initial energy.
CheckResult conservation_check(const Trajectory& traj, double tol_per_energy = 1e-6);

/// Closed-form holder energy and ergotropy of the resonant one-photon,
/// one-qubit lossless charge, plus its first maximum.
CheckResult analytic_jc_check();

/// Stepping integrator against the exponential of the vectorized generator.
CheckResult superoperator_check();

/// Dicke against full representation at desk scale.
CheckResult representation_check();

/// One shared photon split across N qubits: E_h = sin^2(sqrt(N) g t).
CheckResult collective_rabi_check();

/// Energy bookkeeping over a small dissipative grid, plus heat positivity
/// and the ergotropy <= E_h bound.
CheckResult dissipative_suite_check();

std::vector<CheckResult> run_all_checks();

} // namespace qb
