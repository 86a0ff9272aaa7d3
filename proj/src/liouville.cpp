#include "qb/liouville.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "qb/hilbert.hpp"

namespace qb {

namespace {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

} // namespace

Operator vectorized_liouvillian(const BatteryParams& params, const BasisSpec& basis) {
    params.validate();
    const int d = basis.dim();
    if (d > 200)
        throw DimensionGuard("vectorized_liouvillian: dimension " + std::to_string(d) +
                             " exceeds the d <= 200 guard");

    const Matrix id = Matrix::Identity(d, d);
    const Matrix h = hamiltonian(params, basis).m;

    // vec(A rho B) = (B^T (x) A) vec(rho), column stacking.
    Matrix l = -kI * (kron(id, h) - kron(h.transpose(), id));

    if (params.kappa > 0.0) {
        const Matrix a = tensor(annihilation(basis.cavity_cutoff), identity(basis.holder_dim())).m;
        const Matrix ad = a.adjoint();
        const Matrix n_op = ad * a;
        l += params.kappa * (params.n_th + 1.0) *
             (2.0 * kron(a.conjugate(), a) - kron(id, n_op) - kron(n_op.transpose(), id));
        if (params.n_th > 0.0) {
            const Matrix aad = a * ad;
            l += params.kappa * params.n_th *
                 (2.0 * kron(a.transpose(), ad) - kron(id, aad) - kron(aad.transpose(), id));
        }
    }
    return Operator(std::move(l));
}

Matrix expm(const Matrix& m) { return m.exp(); }

DensityMatrix propagate_via_liouvillian(const DensityMatrix& rho0, const BatteryParams& params,
                                        const BasisSpec& basis, double t) {
    const Operator l = vectorized_liouvillian(params, basis);
    const int d = basis.dim();
    Vector v = Eigen::Map<const Vector>(rho0.m.data(), Eigen::Index(d) * d);
    Vector out = expm(t * l.m) * v;
    return DensityMatrix(Eigen::Map<const Matrix>(out.data(), d, d));
}

double trace_distance(const Matrix& a, const Matrix& b) {
    Matrix diff = a - b;
    diff = 0.5 * (diff + diff.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(diff, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

} // namespace qb
