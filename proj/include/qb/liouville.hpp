#pragma once

#include "qb/basis.hpp"
#include "qb/model.hpp"
#include "qb/types.hpp"

namespace qb {

/// Dense column-stacking superoperator L with vec(master_rhs(rho)) = L vec(rho).
/// Verification tool only; refuses composite dimensions above 200.
Operator vectorized_liouvillian(const BatteryParams& params, const BasisSpec& basis);

/// Matrix exponential (scaling-and-squaring Pade).
Matrix expm(const Matrix& m);

/// Propagate rho0 to time t (natural units) through exp(L t); the
/// independent cross-check for the stepping integrator.
DensityMatrix propagate_via_liouvillian(const DensityMatrix& rho0, const BatteryParams& params,
                                        const BasisSpec& basis, double t);

/// Trace distance (1/2)||a - b||_1 of two Hermitian matrices.
double trace_distance(const Matrix& a, const Matrix& b);

} // namespace qb
