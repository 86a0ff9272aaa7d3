#pragma once

#include <complex>
#include <utility>

#include <Eigen/Dense>

#include "qb/errors.hpp"

namespace qb {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

/// A square operator on some Hilbert space.  The dimension is carried by the
/// matrix itself; construction rejects non-square input.
struct Operator {
    Matrix m;

    Operator() = default;
    explicit Operator(Matrix mat) : m(std::move(mat)) {
        if (m.rows() != m.cols())
            throw DimensionMismatch("Operator: matrix must be square");
    }

    Eigen::Index dim() const { return m.rows(); }

    Operator adjoint() const { return Operator(m.adjoint()); }
    double hermiticity_error() const { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }
};

/// A normalized pure state, ||psi|| = 1 within 1e-12.
struct StateVector {
    Vector amp;

    StateVector() = default;
    explicit StateVector(Vector v) : amp(std::move(v)) {
        if (std::abs(amp.norm() - 1.0) > 1e-12)
            throw PhysicalityError("StateVector: not normalized");
    }

    Eigen::Index dim() const { return amp.size(); }

    /// Rank-one projector |psi><psi|.
    Matrix projector() const { return amp * amp.adjoint(); }
};

/// Physicality diagnostics of a candidate density matrix.
struct PhysicalityReport {
    double hermiticity_error = 0.0; ///< max |rho - rho^dag|
    double trace_error = 0.0;       ///< |Tr rho - 1|
    double min_eigenvalue = 0.0;

    bool ok(double herm_tol = 1e-10, double trace_tol = 1e-9, double eig_floor = -1e-8) const {
        return hermiticity_error <= herm_tol && trace_error <= trace_tol &&
               min_eigenvalue >= eig_floor;
    }
};

inline PhysicalityReport check_physicality(const Matrix& rho) {
    PhysicalityReport r;
    r.hermiticity_error = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    r.trace_error = std::abs(rho.trace() - Complex(1.0));
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                             Eigen::EigenvaluesOnly);
    r.min_eigenvalue = es.eigenvalues().minCoeff();
    return r;
}

/// A density matrix validated on construction: Hermitian within 1e-10,
/// unit trace within 1e-9, smallest eigenvalue >= -1e-8.
struct DensityMatrix {
    Matrix m;

    DensityMatrix() = default;
    explicit DensityMatrix(Matrix rho) : m(std::move(rho)) {
        if (m.rows() != m.cols())
            throw DimensionMismatch("DensityMatrix: matrix must be square");
        PhysicalityReport r = check_physicality(m);
        if (!r.ok())
            throw PhysicalityError("DensityMatrix: unphysical state (herm=" +
                                   std::to_string(r.hermiticity_error) +
                                   ", trace_err=" + std::to_string(r.trace_error) +
                                   ", min_eig=" + std::to_string(r.min_eigenvalue) + ")");
    }

    static DensityMatrix pure(const StateVector& psi) { return DensityMatrix(psi.projector()); }

    Eigen::Index dim() const { return m.rows(); }
};

} // namespace qb
