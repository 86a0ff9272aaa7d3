#include "qb/hilbert.hpp"

#include <cmath>
#include <vector>

namespace qb {

Operator annihilation(int cutoff) {
    if (cutoff < 2)
        throw DimensionMismatch("annihilation: cutoff must be >= 2");
    Matrix a = Matrix::Zero(cutoff, cutoff);
    for (int n = 1; n < cutoff; ++n)
        a(n - 1, n) = std::sqrt(double(n));
    return Operator(std::move(a));
}

Operator qubit_lowering(int i, const BasisSpec& basis) {
    if (basis.qubit_rep != QubitRep::Full)
        throw DimensionMismatch("qubit_lowering: full representation required");
    if (i < 1 || i > basis.n_qubits)
        throw DimensionMismatch("qubit_lowering: qubit index out of range");
    const int dim = basis.holder_dim();
    // |e> = bit 0, |g> = bit 1; sigma- maps e -> g on qubit i.
    // Qubit 1 is the most significant bit.
    const int bit = 1 << (basis.n_qubits - i);
    Matrix op = Matrix::Zero(dim, dim);
    for (int h = 0; h < dim; ++h)
        if (!(h & bit)) op(h | bit, h) = 1.0;
    return Operator(std::move(op));
}

Operator qubit_raising(int i, const BasisSpec& basis) { return qubit_lowering(i, basis).adjoint(); }

Operator collective_lowering(const BasisSpec& basis) {
    if (basis.qubit_rep != QubitRep::Dicke)
        throw DimensionMismatch("collective_lowering: Dicke representation required");
    const int n = basis.n_qubits;
    Matrix op = Matrix::Zero(n + 1, n + 1);
    // J-|j,m> = sqrt(j(j+1) - m(m-1)) |j,m-1>, with k = m + N/2 the
    // excitation count; the root simplifies to sqrt(k (N - k + 1)).
    for (int k = 1; k <= n; ++k)
        op(k - 1, k) = std::sqrt(double(k) * double(n - k + 1));
    return Operator(std::move(op));
}

Operator holder_excitation_number(const BasisSpec& basis) {
    const int dim = basis.holder_dim();
    Matrix op = Matrix::Zero(dim, dim);
    for (int h = 0; h < dim; ++h)
        op(h, h) = double(basis.excitation_of_holder(h));
    return Operator(std::move(op));
}

Operator tensor(const Operator& a, const Operator& b) {
    const Eigen::Index da = a.dim(), db = b.dim();
    Matrix out(da * db, da * db);
    for (Eigen::Index i = 0; i < da; ++i)
        for (Eigen::Index j = 0; j < da; ++j)
            out.block(i * db, j * db, db, db) = a.m(i, j) * b.m;
    return Operator(std::move(out));
}

Operator identity(int dim) { return Operator(Matrix::Identity(dim, dim)); }

Matrix symmetrizer(int n_qubits) {
    const int full = 1 << n_qubits;
    Matrix s = Matrix::Zero(full, n_qubits + 1);
    std::vector<double> count(n_qubits + 1, 0.0);
    for (int h = 0; h < full; ++h) {
        int ground = 0;
        for (int q = 0; q < n_qubits; ++q) ground += (h >> q) & 1;
        count[n_qubits - ground] += 1.0;
    }
    for (int h = 0; h < full; ++h) {
        int ground = 0;
        for (int q = 0; q < n_qubits; ++q) ground += (h >> q) & 1;
        const int k = n_qubits - ground;
        s(h, k) = 1.0 / std::sqrt(count[k]);
    }
    return s;
}

StateVector fock_state(int cutoff, int n) {
    if (n < 0 || n >= cutoff)
        throw DimensionMismatch("fock_state: photon number outside retained levels");
    Vector v = Vector::Zero(cutoff);
    v(n) = 1.0;
    return StateVector(std::move(v));
}

StateVector coherent_state(int cutoff, Complex alpha) {
    const double nbar = std::norm(alpha);
    // Tail of the Poisson photon distribution, summed analytically from the
    // retained part: sum_{n>=cutoff} |c_n|^2 = 1 - sum_{n<cutoff}.
    double retained = 0.0, p = std::exp(-nbar);
    for (int n = 0; n < cutoff; ++n) {
        retained += p;
        p *= nbar / double(n + 1);
    }
    if (1.0 - retained >= 1e-8)
        throw TruncationError("coherent_state: tail population " +
                              std::to_string(1.0 - retained) + " exceeds 1e-8; raise cutoff");
    Vector v(cutoff);
    Complex c = std::exp(-0.5 * nbar);
    for (int n = 0; n < cutoff; ++n) {
        v(n) = c;
        c *= alpha / std::sqrt(double(n + 1));
    }
    v /= v.norm();
    return StateVector(std::move(v));
}

DensityMatrix thermal_state(int cutoff, double nbar) {
    if (nbar < 0.0)
        throw PhysicalityError("thermal_state: nbar must be >= 0");
    Matrix rho = Matrix::Zero(cutoff, cutoff);
    if (nbar == 0.0) {
        rho(0, 0) = 1.0;
        return DensityMatrix(std::move(rho));
    }
    const double q = nbar / (nbar + 1.0);
    if (std::pow(q, double(cutoff)) >= 1e-8)
        throw TruncationError("thermal_state: geometric tail exceeds 1e-8; raise cutoff");
    double p = 1.0 / (nbar + 1.0), norm = 0.0;
    for (int n = 0; n < cutoff; ++n) {
        rho(n, n) = p;
        norm += p;
        p *= q;
    }
    rho /= norm;
    return DensityMatrix(std::move(rho));
}

Matrix partial_trace_charger_raw(const Matrix& rho, const BasisSpec& basis) {
    const int dh = basis.holder_dim(), dc = basis.cavity_cutoff;
    if (rho.rows() != basis.dim())
        throw DimensionMismatch("partial_trace_charger: state does not match basis");
    Matrix out = Matrix::Zero(dh, dh);
    for (int n = 0; n < dc; ++n)
        out += rho.block(n * dh, n * dh, dh, dh);
    return out;
}

DensityMatrix partial_trace_charger(const DensityMatrix& rho, const BasisSpec& basis) {
    return DensityMatrix(partial_trace_charger_raw(rho.m, basis));
}

double expectation_raw(const Matrix& op, const Matrix& rho) {
    if (op.rows() != rho.rows())
        throw DimensionMismatch("expectation: operator and state dimensions differ");
    const Complex tr = (op * rho).trace();
    if (std::abs(tr.imag()) > 1e-8)
        throw ImaginaryResidueError("expectation: imaginary residue " +
                                    std::to_string(tr.imag()));
    return tr.real();
}

double expectation(const Operator& op, const DensityMatrix& rho) {
    return expectation_raw(op.m, rho.m);
}

int auto_cutoff_fock(int n_photons) { return n_photons + 1; }

int auto_cutoff_coherent(double mean_photons) {
    const int dc = int(std::ceil(mean_photons + 6.0 * std::sqrt(mean_photons))) + 5;
    return std::max(dc, 15);
}

int auto_cutoff_thermal(double nbar) {
    if (nbar <= 0.0) return 2;
    const double q = nbar / (nbar + 1.0);
    int dc = std::max(2, int(std::ceil(std::log(1e-9) / std::log(q))));
    // Truncation also biases the renormalized mean; grow until it is tiny.
    for (;; ++dc) {
        double p = 1.0 / (nbar + 1.0), norm = 0.0, mean = 0.0;
        for (int n = 0; n < dc; ++n) {
            norm += p;
            mean += n * p;
            p *= q;
        }
        if (std::abs(mean / norm - nbar) <= 5e-8) return dc;
    }
}

} // namespace qb
