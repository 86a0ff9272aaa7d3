#include "qb/evolve.hpp"

#include <cmath>
#include <vector>

#include <Eigen/SparseCore>

#include "qb/ergotropy.hpp"
#include "qb/hilbert.hpp"

namespace qb {

namespace {

using Sparse = Eigen::SparseMatrix<Complex>;
using Triplet = Eigen::Triplet<Complex>;

// Exact eigenvalue extraction is affordable up to this dimension; above it
// a Lanczos estimate tracks the smallest eigenvalue, refreshed exactly on a
// stride.
constexpr int kExactEigMaxDim = 128;
constexpr int kExactEigStride = 25;

double min_eig_exact(const Matrix& rho) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho + rho.adjoint()),
                                             Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff();
}

// Smallest eigenvalue of a Hermitian near-density matrix via Lanczos on the
// shifted operator 1.5 I - rho (largest Ritz value maps back to the smallest
// eigenvalue).  Ritz values are Rayleigh quotients, so the estimate never
// undershoots the true minimum by more than the Hermiticity defect.
double min_eig_lanczos(const Matrix& rho, int iterations = 24) {
    const Eigen::Index d = rho.rows();
    const int m = int(std::min<Eigen::Index>(iterations, d));
    Matrix v(d, m + 1);
    Eigen::VectorXd alpha(m), beta(m);

    Vector q(d);
    for (Eigen::Index i = 0; i < d; ++i)
        q(i) = Complex(1.0 + 1e-3 * std::sin(double(i + 1)), 0.0);
    q /= q.norm();
    v.col(0) = q;

    Vector w(d);
    int used = m;
    for (int j = 0; j < m; ++j) {
        w.noalias() = rho * v.col(j);
        w = 1.5 * v.col(j) - w;
        if (j > 0) w -= beta(j - 1) * v.col(j - 1);
        alpha(j) = w.dot(v.col(j)).real();
        w -= alpha(j) * v.col(j);
        // full reorthogonalization; dimensions here keep this cheap
        for (int i = 0; i <= j; ++i) w -= v.col(i).dot(w) * v.col(i);
        beta(j) = w.norm();
        if (beta(j) < 1e-14) {
            used = j + 1;
            break;
        }
        v.col(j + 1) = w / beta(j);
    }

    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(used, used);
    for (int j = 0; j < used; ++j) {
        tri(j, j) = alpha(j);
        if (j + 1 < used) tri(j, j + 1) = tri(j + 1, j) = beta(j);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri, Eigen::EigenvaluesOnly);
    return 1.5 - es.eigenvalues().maxCoeff();
}

struct PhysicalityAbort {
    std::string reason;
};

// Master equation in the frame co-rotating at omega_c * (a^dag a + N_h).
// The rotating-wave Hamiltonian commutes with the total excitation number,
// so the transformed generator is time independent and free of optical-
// frequency oscillations; every recorded observable commutes with the
// rotation and is unchanged by it.
class MasterOde {
public:
    MasterOde(const BatteryParams& params, const BasisSpec& basis)
        : p_(params), basis_(basis), d_(basis.dim()) {
        const int dh = basis.holder_dim();
        const int dc = basis.cavity_cutoff;

        photon_.resize(d_);
        excitation_.resize(d_);
        for (int i = 0; i < d_; ++i) {
            photon_(i) = double(basis.photon_of(i));
            excitation_(i) = double(basis.excitation_of_holder(basis.holder_of(i)));
        }

        // a (x) 1 in sparse form: one entry per populated row.
        std::vector<Triplet> ta;
        ta.reserve(std::size_t(d_));
        for (int n = 1; n < dc; ++n)
            for (int h = 0; h < dh; ++h)
                ta.emplace_back((n - 1) * dh + h, n * dh + h, std::sqrt(double(n)));
        a_.resize(d_, d_);
        a_.setFromTriplets(ta.begin(), ta.end());
        ad_ = a_.adjoint();

        const Matrix h_lab_dense = hamiltonian(params, basis).m;
        h_lab_ = h_lab_dense.sparseView(1.0, 1e-300);

        Matrix h_eff_dense = h_lab_dense;
        for (int i = 0; i < d_; ++i)
            h_eff_dense(i, i) -= params.omega_c * (photon_(i) + excitation_(i));
        h_eff_ = h_eff_dense.sparseView(1.0, 1e-300);

        // Elementwise damping factors of the dissipator's anticommutator
        // parts: -kappa (n_th+1)(n_i + n_j) - kappa n_th (m_i + m_j) with
        // m the diagonal of the truncated a a^dag.
        if (p_.kappa > 0.0) {
            damp_.resize(d_, d_);
            for (int i = 0; i < d_; ++i) {
                const double mi = photon_(i) < dc - 1 ? photon_(i) + 1.0 : 0.0;
                for (int j = 0; j < d_; ++j) {
                    const double mj = photon_(j) < dc - 1 ? photon_(j) + 1.0 : 0.0;
                    damp_(i, j) = -p_.kappa * ((p_.n_th + 1.0) * (photon_(i) + photon_(j)) +
                                               p_.n_th * (mi + mj));
                }
            }
        }

        t1_.resize(d_, d_);
        t2_.resize(d_, d_);
        diss_.resize(d_, d_);
    }

    int dim() const { return d_; }
    Eigen::Index state_size() const { return Eigen::Index(d_) * d_ + 1; }

    void operator()(double /*t*/, const Vector& y, Vector& dy) const {
        Eigen::Map<const Matrix> rho(y.data(), d_, d_);
        Eigen::Map<Matrix> drho(dy.data(), d_, d_);

        t1_.noalias() = h_eff_ * rho;
        t2_.noalias() = rho * h_eff_;
        drho = Complex(0.0, -1.0) * (t1_ - t2_);

        double dq = 0.0;
        if (p_.kappa > 0.0) {
            t1_.noalias() = a_ * rho;
            diss_.noalias() = t1_ * ad_;
            diss_ *= 2.0 * p_.kappa * (p_.n_th + 1.0);
            if (p_.n_th > 0.0) {
                t1_.noalias() = ad_ * rho;
                t2_.noalias() = t1_ * a_;
                diss_ += (2.0 * p_.kappa * p_.n_th) * t2_;
            }
            diss_.array() += damp_.array() * rho.array();
            drho += diss_;

            // dQ/dt = -Tr{H D[rho]}; the lab Hamiltonian commutes with the
            // frame rotation, so the rotating-frame trace is identical.
            Complex tr(0.0, 0.0);
            for (int col = 0; col < h_lab_.outerSize(); ++col)
                for (Sparse::InnerIterator it(h_lab_, col); it; ++it)
                    tr += it.value() * diss_(col, it.row());
            dq = -tr.real();
        }
        dy(Eigen::Index(d_) * d_) = Complex(dq, 0.0);
    }

    const RealVector& photon() const { return photon_; }
    const RealVector& excitation() const { return excitation_; }

private:
    BatteryParams p_;
    BasisSpec basis_;
    int d_;
    Sparse h_eff_, h_lab_, a_, ad_;
    RealVector photon_, excitation_;
    Matrix damp_;
    mutable Matrix t1_, t2_, diss_;
};

} // namespace

Trajectory integrate(const DensityMatrix& rho0, const BatteryParams& params,
                     const BasisSpec& basis, const TimeGrid& grid, const IntegratorConfig& cfg,
                     const SampleObserver& observer) {
    params.validate();
    grid.validate();
    cfg.validate();
    if (rho0.dim() != basis.dim())
        throw DimensionMismatch("integrate: initial state does not match basis");

    const int d = basis.dim();
    const double unit = params.time_unit();
    const MasterOde ode(params, basis);
    const Matrix h_holder = holder_hamiltonian_local(params, basis).m;

    Trajectory traj;
    traj.params = params;
    traj.basis = basis;
    traj.times = grid.times();
    const int n_samples = grid.samples;
    traj.E_h.resize(n_samples);
    traj.E_c.resize(n_samples);
    traj.Q.resize(n_samples);
    traj.ergotropy_h.resize(n_samples);
    traj.trace_error.resize(n_samples);
    traj.hermiticity_error.resize(n_samples);
    traj.min_eigenvalue.resize(n_samples);

    std::vector<double> sample_times(n_samples);
    for (int k = 0; k < n_samples; ++k) sample_times[k] = traj.times[k] * unit;

    Vector y(ode.state_size());
    Eigen::Map<Matrix>(y.data(), d, d) = rho0.m;
    y(Eigen::Index(d) * d) = 0.0;

    int recorded = 0;
    Matrix rho_snapshot; // rotating-frame state at the last recorded sample

    auto record = [&](std::size_t idx, double /*t*/, const Vector& ys) {
        Eigen::Map<const Matrix> rho(ys.data(), d, d);
        const int k = int(idx);

        double e_c = 0.0, e_h = 0.0, tr = 0.0;
        for (int i = 0; i < d; ++i) {
            const double pii = rho(i, i).real();
            e_c += ode.photon()(i) * pii;
            e_h += ode.excitation()(i) * pii;
            tr += pii;
        }
        traj.E_c[k] = params.omega_c * e_c;
        traj.E_h[k] = params.omega_h * e_h;
        traj.Q[k] = ys(Eigen::Index(d) * d).real();
        traj.trace_error[k] = std::abs(tr - 1.0);
        traj.hermiticity_error[k] = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
        if (d <= kExactEigMaxDim || k % kExactEigStride == 0)
            traj.min_eigenvalue[k] = min_eig_exact(rho);
        else
            traj.min_eigenvalue[k] = min_eig_lanczos(rho);

        const Matrix rho_h = partial_trace_charger_raw(rho, basis);
        traj.ergotropy_h[k] = ergotropy(rho_h, h_holder);
        if (observer) observer(k, traj.times[k], rho_h);

        recorded = k + 1;
        if (k == n_samples - 1) rho_snapshot = rho;

        if (traj.trace_error[k] > 1e-8 || traj.hermiticity_error[k] > 1e-9 ||
            traj.min_eigenvalue[k] < -1e-7)
            throw PhysicalityAbort{"physicality bound exceeded at t=" +
                                   std::to_string(traj.times[k]) +
                                   " (trace_err=" + std::to_string(traj.trace_error[k]) +
                                   ", herm_err=" + std::to_string(traj.hermiticity_error[k]) +
                                   ", min_eig=" + std::to_string(traj.min_eigenvalue[k]) + ")"};
    };

    try {
        if (cfg.method == Method::AdaptiveRK) {
            ode::StepperOptions opt{cfg.rel_tol, cfg.abs_tol, cfg.max_step};
            integrate_dopri5(ode, y, 0.0, sample_times.back(), sample_times, record, opt);
        } else {
            const double spacing = sample_times[1] - sample_times[0];
            const int substeps =
                cfg.max_step > 0.0 ? std::max(1, int(std::ceil(spacing / cfg.max_step))) : 4;
            integrate_rk4(ode, y, 0.0, sample_times, record, substeps);
        }
    } catch (const PhysicalityAbort& abort) {
        traj.aborted = true;
        traj.abort_reason = abort.reason;
        traj.times.resize(recorded);
        traj.E_h.resize(recorded);
        traj.E_c.resize(recorded);
        traj.Q.resize(recorded);
        traj.ergotropy_h.resize(recorded);
        traj.trace_error.resize(recorded);
        traj.hermiticity_error.resize(recorded);
        traj.min_eigenvalue.resize(recorded);
    }

    traj.initial_energy = traj.E_h.empty() ? 0.0 : traj.E_h[0] + traj.E_c[0];

    if (!traj.aborted) {
        // Undo the frame rotation: rho_ij = e^{-i w t (nu_i - nu_j)} rho~_ij.
        const double t_final = sample_times.back();
        Vector phase(d);
        for (int i = 0; i < d; ++i) {
            const double theta =
                params.omega_c * t_final * (ode.photon()(i) + ode.excitation()(i));
            phase(i) = std::exp(Complex(0.0, -theta));
        }
        Matrix lab = phase.asDiagonal() * rho_snapshot * phase.conjugate().asDiagonal();
        traj.final_state = DensityMatrix(std::move(lab));
    }
    return traj;
}

Trajectory continue_discharge(const Trajectory& traj, const BatteryParams& params,
                              const BasisSpec& basis, const TimeGrid& grid,
                              const IntegratorConfig& cfg) {
    if (traj.aborted || !traj.final_state)
        throw PhysicalityError("continue_discharge: source trajectory is incomplete");
    if (basis.n_qubits != traj.basis.n_qubits || basis.qubit_rep != traj.basis.qubit_rep)
        throw DimensionMismatch("continue_discharge: holder layout must match the source run");

    const Matrix rho_h = partial_trace_charger_raw(traj.final_state->m, traj.basis);
    const int dh = basis.holder_dim();
    Matrix rho0 = Matrix::Zero(basis.dim(), basis.dim());
    rho0.block(0, 0, dh, dh) = rho_h; // vacuum charger block
    return integrate(DensityMatrix(std::move(rho0)), params, basis, grid, cfg);
}

} // namespace qb
