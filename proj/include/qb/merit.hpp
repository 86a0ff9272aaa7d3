#pragma once

#include <span>

#include "qb/ergotropy.hpp"
#include "qb/evolve.hpp"

namespace qb {

/// First local maximum of a sampled curve, refined by parabolic
/// interpolation through the bracketing samples.
struct FirstMax {
    double tau_bar = 0.0;
    double value_bar = 0.0;
    bool found = false;
};

/// Locate the earliest k with values[k-1] < values[k] >= values[k+1]
/// (plateaus resolve to their first sample) and refine through the
/// neighboring points.  found = false when the curve never turns over
/// before the final sample.
FirstMax first_maximum(std::span<const double> times, std::span<const double> values);

/// Figures of merit at the first maximum of the holder energy.
///
/// tau_bar is in units of pi/Omega_R, energies in hbar omega_c, Omega_bar
/// in units of Omega_R and P_bar in hbar omega_c per pi/Omega_R, so that
/// the defining identities read Omega_bar = 2 / tau_bar and
/// P_bar = E_bar / tau_bar in stored units (Omega tau = 2 pi and
/// P tau = E in physical units).
struct MeritValues {
    double E_bar = 0.0;
    double tau_bar = 0.0;
    double Omega_bar = 0.0;
    double P_bar = 0.0;
    double Ergo_bar = 0.0;
};

/// Extract MeritValues from a charging trajectory.  The ergotropy is read
/// at the recorded sample nearest to the refined maximum time.  Throws
/// NoMaximumError when the holder energy has no interior first maximum.
MeritValues merit_from_trajectory(const Trajectory& traj);

} // namespace qb
