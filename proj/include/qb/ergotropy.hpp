#pragma once

#include "qb/types.hpp"

namespace qb {

/// Maximal unitarily extractable work of rho under Hamiltonian h:
/// Tr{rho h} minus the passive energy (populations sorted descending paired
/// with energies sorted ascending).  Safe under degenerate h.
double ergotropy(const Matrix& rho, const Matrix& h);
double ergotropy(const DensityMatrix& rho, const Operator& h);

/// Closed-form qubit ergotropy of the resonant one-photon Jaynes-Cummings
/// charging dynamics, in units of hbar omega_c:
/// max(0, 1 - 2 cos^2(g t)), nonzero on g t in [pi/4, 3pi/4] mod pi.
double jc_ergotropy_analytic(double g, double t);

} // namespace qb
