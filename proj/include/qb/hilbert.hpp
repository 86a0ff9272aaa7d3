#pragma once

#include "qb/basis.hpp"
#include "qb/types.hpp"

namespace qb {

/// Truncated bosonic annihilation operator: a[n-1, n] = sqrt(n).
Operator annihilation(int cutoff);

/// Lowering operator of qubit i (1-based) on the 2^N holder space,
/// identity on every other qubit.  Full representation only.
Operator qubit_lowering(int i, const BasisSpec& basis);

/// Raising operator of qubit i, adjoint of qubit_lowering.
Operator qubit_raising(int i, const BasisSpec& basis);

/// Collective lowering J- on the (N+1)-dimensional symmetric sector:
/// J-|k> = sqrt(k (N - k + 1)) |k-1> with k the excitation count.
Operator collective_lowering(const BasisSpec& basis);

/// Sum of qubit excitation projectors on the holder space: counts excited
/// qubits in either representation.
Operator holder_excitation_number(const BasisSpec& basis);

/// Kronecker product A (x) B.
Operator tensor(const Operator& a, const Operator& b);

Operator identity(int dim);

/// Isometry from the Dicke sector into the full tensor space:
/// |k> -> binom(N,k)^{-1/2} sum of all k-excitation bitstrings.
/// Shape 2^N x (N+1).
Matrix symmetrizer(int n_qubits);

/// Fock basis state |n>.
StateVector fock_state(int cutoff, int n);

/// Truncated coherent state, renormalized over the retained levels.
/// Requires the analytic tail population sum_{n>=cutoff} |c_n|^2 < 1e-8.
StateVector coherent_state(int cutoff, Complex alpha);

/// Truncated thermal state, renormalized.  Requires the geometric tail
/// (nbar/(nbar+1))^cutoff < 1e-8.
DensityMatrix thermal_state(int cutoff, double nbar);

/// Reduced state of the holder: trace over the charger mode.
DensityMatrix partial_trace_charger(const DensityMatrix& rho, const BasisSpec& basis);

/// Same, on a raw matrix (no physicality validation of input or output).
Matrix partial_trace_charger_raw(const Matrix& rho, const BasisSpec& basis);

/// Re{Tr{op rho}} after checking that the imaginary residue is < 1e-8.
double expectation(const Operator& op, const DensityMatrix& rho);
double expectation_raw(const Matrix& op, const Matrix& rho);

/// Cavity cutoff policy for a charger carrying mean photon number N.
/// Fock: exactly N+1 levels (excitation never grows at n_th = 0).
/// Coherent: N + 6 sqrt(N) + 5 levels, at least 15.
/// Thermal: smallest cutoff with geometric tail <= 1e-9 and truncation
/// bias on the mean photon number <= 5e-8.
int auto_cutoff_fock(int n_photons);
int auto_cutoff_coherent(double mean_photons);
int auto_cutoff_thermal(double nbar);

} // namespace qb
