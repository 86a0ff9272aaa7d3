#include "qb/merit.hpp"

#include <cmath>

namespace qb {

FirstMax first_maximum(std::span<const double> times, std::span<const double> values) {
    FirstMax out;
    const std::size_t n = values.size();
    if (times.size() != n)
        throw DimensionMismatch("first_maximum: times and values lengths differ");
    if (n < 3) return out;

    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (!(values[k - 1] < values[k] && values[k] >= values[k + 1])) continue;

        const double vm = values[k - 1], v0 = values[k], vp = values[k + 1];
        const double denom = vm - 2.0 * v0 + vp;
        double shift = 0.0;
        if (denom < 0.0) shift = 0.5 * (vm - vp) / denom;
        shift = std::clamp(shift, -0.5, 1.0);

        const double dt_left = times[k] - times[k - 1];
        out.tau_bar = times[k] + shift * dt_left;
        out.value_bar = v0 - 0.25 * (vm - vp) * shift;
        out.found = true;
        return out;
    }
    return out;
}

MeritValues merit_from_trajectory(const Trajectory& traj) {
    if (traj.aborted)
        throw PhysicalityError("merit_from_trajectory: trajectory was aborted: " +
                               traj.abort_reason);
    const FirstMax fm = first_maximum(traj.times, traj.E_h);
    if (!fm.found)
        throw NoMaximumError("merit_from_trajectory: no first maximum of E_h before t_max=" +
                             std::to_string(traj.times.back()) + "; extend the time window");

    MeritValues mv;
    mv.tau_bar = fm.tau_bar;
    mv.E_bar = fm.value_bar;
    mv.Omega_bar = 2.0 / mv.tau_bar;          // Omega tau = 2 pi in physical units
    mv.P_bar = mv.E_bar / mv.tau_bar;         // energy per pi/Omega_R

    const double dt = traj.times[1] - traj.times[0];
    const auto nearest = std::size_t(std::lround(fm.tau_bar / dt));
    mv.Ergo_bar = traj.ergotropy_h[std::min(nearest, traj.ergotropy_h.size() - 1)];
    return mv;
}

} // namespace qb
