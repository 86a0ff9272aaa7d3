#pragma once

#include <string>

#include "qb/basis.hpp"
#include "qb/hilbert.hpp"
#include "qb/types.hpp"

namespace qb {

/// Physical parameters in natural units (hbar = 1, energies in omega_c).
///
/// kappa is the dissipator coefficient of the charger loss term; the
/// charger dissipation rate is kappa_c = 2 kappa.
struct BatteryParams {
    double omega_c = 1.0;
    double omega_h = 1.0;
    double g = 1e-3;   ///< coupling, units of omega_c
    double kappa = 0.0;
    double n_th = 0.0; ///< mean thermal photon number of the environment
    int lambda = 1;    ///< interaction switch, 0 (storage) or 1 (charging)

    void validate() const {
        if (omega_c <= 0.0 || omega_h < 0.0)
            throw ConfigError("BatteryParams: frequencies must be positive");
        if (g < 0.0 || kappa < 0.0 || n_th < 0.0)
            throw ConfigError("BatteryParams: rates must be nonnegative");
        if (lambda != 0 && lambda != 1)
            throw ConfigError("BatteryParams: lambda must be 0 or 1");
    }

    /// Vacuum Rabi frequency Omega_R = 2g, the reporting unit for rates.
    double rabi() const { return 2.0 * g; }
    /// One plot time unit pi/Omega_R, in natural time.
    double time_unit() const { return M_PI / rabi(); }
};

/// Charger initial-condition family; the mean photon number is N in all cases.
enum class InitKind { Fock, Coherent, Thermal };

std::string to_string(InitKind kind);
InitKind init_kind_from_string(const std::string& s);

/// H = omega_c a^dag a + omega_h sum sigma+ sigma- + lambda g sum (a sigma+ + a^dag sigma-)
/// on the composite space, in the representation chosen by the basis.
Operator hamiltonian(const BatteryParams& params, const BasisSpec& basis);

/// Free charger term omega_c a^dag a (x) 1, composite.
Operator charger_hamiltonian(const BatteryParams& params, const BasisSpec& basis);

/// Free holder term 1 (x) omega_h sum sigma+ sigma-, composite.
Operator holder_hamiltonian(const BatteryParams& params, const BasisSpec& basis);

/// Holder free Hamiltonian on the holder space only (for reduced-state work).
Operator holder_hamiltonian_local(const BatteryParams& params, const BasisSpec& basis);

/// Collective raising/lowering of the holder in the chosen representation,
/// embedded operators on the holder space.
Operator holder_lowering_local(const BasisSpec& basis);

/// Cavity dissipator D_c[rho] with a embedded as a (x) 1:
///   kappa (n_th+1) (2 a rho a+ - a+a rho - rho a+a)
/// + kappa  n_th    (2 a+ rho a - a a+ rho - rho a a+).
Matrix lindblad_apply(const Matrix& rho, const BatteryParams& params, const BasisSpec& basis);

/// Master-equation right-hand side -i [H, rho] + D_c[rho].
Matrix master_rhs(const Matrix& rho, const BatteryParams& params, const BasisSpec& basis);

/// Charger in the requested state with mean photon number N, holder in the
/// ground state.  The basis must carry the same N qubits.
DensityMatrix initial_state(InitKind kind, int n, const BasisSpec& basis);

/// Cutoff policy for initial_state, by kind.
int auto_cutoff(InitKind kind, int n);

/// Basis with the automatic cutoff for the given run.
BasisSpec auto_basis(InitKind kind, int n, QubitRep rep);

} // namespace qb
