#include "qb/ergotropy.hpp"

#include <algorithm>
#include <cmath>

#include "qb/errors.hpp"

namespace qb {

double ergotropy(const Matrix& rho, const Matrix& h) {
    if (rho.rows() != h.rows())
        throw DimensionMismatch("ergotropy: state and Hamiltonian dimensions differ");
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw PhysicalityError("ergotropy: state is not Hermitian");
    if ((h - h.adjoint()).cwiseAbs().maxCoeff() > 1e-8)
        throw PhysicalityError("ergotropy: Hamiltonian is not Hermitian");

    const double energy = (rho * h).trace().real();

    Eigen::SelfAdjointEigenSolver<Matrix> rho_es(0.5 * (rho + rho.adjoint()),
                                                 Eigen::EigenvaluesOnly);
    Eigen::SelfAdjointEigenSolver<Matrix> h_es(0.5 * (h + h.adjoint()), Eigen::EigenvaluesOnly);

    // Eigen sorts ascending: pair largest population with smallest energy.
    const auto& r = rho_es.eigenvalues();
    const auto& eps = h_es.eigenvalues();
    const Eigen::Index n = r.size();
    double passive = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) passive += r(n - 1 - i) * eps(i);

    const double out = energy - passive;
    if (out < -1e-10)
        throw PhysicalityError("ergotropy: negative result " + std::to_string(out));
    return std::max(out, 0.0);
}

double ergotropy(const DensityMatrix& rho, const Operator& h) { return ergotropy(rho.m, h.m); }

double jc_ergotropy_analytic(double g, double t) {
    const double phase = std::fmod(g * t, M_PI);
    const double x = phase < 0.0 ? phase + M_PI : phase;
    if (x < M_PI / 4.0 || x > 3.0 * M_PI / 4.0) return 0.0;
    return 1.0 - 2.0 * std::pow(std::cos(g * t), 2);
}

} // namespace qb
