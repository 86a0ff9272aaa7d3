#include "qb/model.hpp"

#include <cmath>

namespace qb {

std::string to_string(InitKind kind) {
    switch (kind) {
        case InitKind::Fock: return "fock";
        case InitKind::Coherent: return "coherent";
        case InitKind::Thermal: return "thermal";
    }
    return "?";
}

InitKind init_kind_from_string(const std::string& s) {
    if (s == "fock") return InitKind::Fock;
    if (s == "coherent") return InitKind::Coherent;
    if (s == "thermal") return InitKind::Thermal;
    throw ConfigError("unknown initial condition '" + s + "' (fock|coherent|thermal)");
}

Operator holder_lowering_local(const BasisSpec& basis) {
    if (basis.qubit_rep == QubitRep::Dicke) return collective_lowering(basis);
    Matrix j = Matrix::Zero(basis.holder_dim(), basis.holder_dim());
    for (int i = 1; i <= basis.n_qubits; ++i) j += qubit_lowering(i, basis).m;
    return Operator(std::move(j));
}

Operator charger_hamiltonian(const BatteryParams& params, const BasisSpec& basis) {
    const Operator a = annihilation(basis.cavity_cutoff);
    Matrix number = a.m.adjoint() * a.m;
    return Operator(params.omega_c *
                    tensor(Operator(std::move(number)), identity(basis.holder_dim())).m);
}

Operator holder_hamiltonian_local(const BatteryParams& params, const BasisSpec& basis) {
    return Operator(params.omega_h * holder_excitation_number(basis).m);
}

Operator holder_hamiltonian(const BatteryParams& params, const BasisSpec& basis) {
    return tensor(identity(basis.cavity_cutoff), holder_hamiltonian_local(params, basis));
}

Operator hamiltonian(const BatteryParams& params, const BasisSpec& basis) {
    params.validate();
    Matrix h = charger_hamiltonian(params, basis).m + holder_hamiltonian(params, basis).m;
    if (params.lambda != 0) {
        const Operator a = annihilation(basis.cavity_cutoff);
        const Operator jm = holder_lowering_local(basis);
        const Matrix a_jp = tensor(a, jm.adjoint()).m;
        h += params.lambda * params.g * (a_jp + a_jp.adjoint());
    }
    return Operator(std::move(h));
}

Matrix lindblad_apply(const Matrix& rho, const BatteryParams& params, const BasisSpec& basis) {
    if (rho.rows() != basis.dim())
        throw DimensionMismatch("lindblad_apply: state does not match basis");
    if (params.kappa == 0.0) return Matrix::Zero(rho.rows(), rho.cols());

    const Matrix a = tensor(annihilation(basis.cavity_cutoff), identity(basis.holder_dim())).m;
    const Matrix ad = a.adjoint();
    const Matrix n_op = ad * a;

    Matrix out = params.kappa * (params.n_th + 1.0) *
                 (2.0 * a * rho * ad - n_op * rho - rho * n_op);
    if (params.n_th > 0.0) {
        const Matrix aad = a * ad;
        out += params.kappa * params.n_th * (2.0 * ad * rho * a - aad * rho - rho * aad);
    }
    return out;
}

Matrix master_rhs(const Matrix& rho, const BatteryParams& params, const BasisSpec& basis) {
    const Matrix h = hamiltonian(params, basis).m;
    Matrix out = -kI * (h * rho - rho * h);
    if (params.kappa > 0.0) out += lindblad_apply(rho, params, basis);
    return out;
}

int auto_cutoff(InitKind kind, int n) {
    switch (kind) {
        case InitKind::Fock: return auto_cutoff_fock(n);
        case InitKind::Coherent: return auto_cutoff_coherent(double(n));
        case InitKind::Thermal: return auto_cutoff_thermal(double(n));
    }
    return 2;
}

BasisSpec auto_basis(InitKind kind, int n, QubitRep rep) {
    return BasisSpec(n, rep, auto_cutoff(kind, n));
}

DensityMatrix initial_state(InitKind kind, int n, const BasisSpec& basis) {
    if (basis.n_qubits != n)
        throw DimensionMismatch("initial_state: basis qubit count does not match N");
    const int dc = basis.cavity_cutoff;

    Matrix charger;
    switch (kind) {
        case InitKind::Fock: charger = fock_state(dc, n).projector(); break;
        case InitKind::Coherent: charger = coherent_state(dc, std::sqrt(double(n))).projector(); break;
        case InitKind::Thermal: charger = thermal_state(dc, double(n)).m; break;
    }

    const int dh = basis.holder_dim();
    Matrix ground = Matrix::Zero(dh, dh);
    ground(basis.ground_holder_index(), basis.ground_holder_index()) = 1.0;

    return DensityMatrix(tensor(Operator(std::move(charger)), Operator(std::move(ground))).m);
}

} // namespace qb
