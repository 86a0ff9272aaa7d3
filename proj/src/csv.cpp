#include "qb/csv.hpp"

#include <cstdio>
#include <fstream>

namespace qb {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj) {
    os << "t_pi_over_rabi,E_h,E_c,Q,ergotropy_h,conservation_residual,trace_error,min_eig\n";
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
        os << format_number(traj.times[k]) << ',' << format_number(traj.E_h[k]) << ','
           << format_number(traj.E_c[k]) << ',' << format_number(traj.Q[k]) << ','
           << format_number(traj.ergotropy_h[k]) << ','
           << format_number(traj.conservation_residual(k)) << ','
           << format_number(traj.trace_error[k]) << ','
           << format_number(traj.min_eigenvalue[k]) << '\n';
    }
}

void write_summary_csv(std::ostream& os, const std::vector<SweepPoint>& table) {
    os << "status,init,N,kappa_over_rabi,tau_bar,E_bar,Omega_bar,P_bar,P_bar_per_cell,"
          "ergo_bar,tau_bar_par,E_bar_par,P_bar_par,ergo_bar_par,"
          "gamma_E,gamma_rate,gamma_P,gamma_ergo,gamma_ergo_defined\n";
    for (const SweepPoint& pt : table) {
        os << pt.status << ',' << to_string(pt.kind) << ',' << pt.n << ','
           << format_number(pt.kappa_over_rabi);
        if (pt.report) {
            const ComparisonReport& r = *pt.report;
            os << ',' << format_number(r.collective.tau_bar) << ','
               << format_number(r.collective.E_bar) << ','
               << format_number(r.collective.Omega_bar) << ','
               << format_number(r.collective.P_bar) << ','
               << format_number(r.collective.P_bar / r.n) << ','
               << format_number(r.collective.Ergo_bar) << ','
               << format_number(r.parallel.tau_bar) << ',' << format_number(r.parallel.E_bar)
               << ',' << format_number(r.parallel.P_bar) << ','
               << format_number(r.parallel.Ergo_bar) << ',' << format_number(r.gamma_E) << ','
               << format_number(r.gamma_rate) << ',' << format_number(r.gamma_P) << ','
               << format_number(r.gamma_ergo) << ',' << (r.gamma_ergo_defined ? 1 : 0) << '\n';
        } else {
            for (int i = 0; i < 14; ++i) os << ",0";
            os << ",0\n";
        }
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file '" + path + "'");
    out << contents;
    if (!out) throw ConfigError("failed writing output file '" + path + "'");
}

} // namespace qb
