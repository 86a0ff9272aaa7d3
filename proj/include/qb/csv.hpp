#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qb/evolve.hpp"
#include "qb/experiment.hpp"

namespace qb {

/// Format with 12 significant digits, '.' decimal separator, no locale.
std::string format_number(double v);

/// Columns: t_pi_over_rabi, E_h, E_c, Q, ergotropy_h, conservation_residual,
/// trace_error, min_eig.  Energies in hbar omega_c, time in pi/Omega_R.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);

/// One row per sweep point, in table order.  tau in pi/Omega_R, Omega in
/// Omega_R, P in hbar omega_c per pi/Omega_R; failed points carry their
/// status and zeroed numeric fields.
void write_summary_csv(std::ostream& os, const std::vector<SweepPoint>& table);

void write_file(const std::string& path, const std::string& contents);

} // namespace qb
