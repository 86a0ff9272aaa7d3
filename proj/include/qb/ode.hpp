#pragma once

#include <algorithm>
#include <cmath>
#include <span>

#include "qb/errors.hpp"
#include "qb/types.hpp"

namespace qb::ode {

struct StepperOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-11;
    double max_step = 0.0; ///< 0 = no cap beyond a tenth of the span

    void validate() const {
        if (rel_tol <= 0.0 || abs_tol <= 0.0)
            throw ConfigError("StepperOptions: tolerances must be positive");
        if (max_step < 0.0)
            throw ConfigError("StepperOptions: max_step must be nonnegative");
    }
};

namespace detail {

// Dormand-Prince 5(4) tableau.
inline constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
inline constexpr double a21 = 1.0 / 5;
inline constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
inline constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
inline constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                        a54 = -212.0 / 729;
inline constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                        a64 = 49.0 / 176, a65 = -5103.0 / 18656;
inline constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192,
                        b5 = -2187.0 / 6784, b6 = 11.0 / 84;
// b - bhat, the embedded error weights.
inline constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                        e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;
// Dense-output weights (Hairer's contd5).
inline constexpr double d1 = -12715105075.0 / 11282082432.0;
inline constexpr double d3 = 87487479700.0 / 32700410799.0;
inline constexpr double d4 = -10690763975.0 / 1880347072.0;
inline constexpr double d5 = 701980252875.0 / 199316789632.0;
inline constexpr double d6 = -1453857185.0 / 822651844.0;
inline constexpr double d7 = 69997945.0 / 29380423.0;

inline double error_norm(const Vector& err, const Vector& y0, const Vector& y1, double rtol,
                         double atol) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < err.size(); ++i) {
        const double scale = atol + rtol * std::max(std::abs(y0(i)), std::abs(y1(i)));
        const double w = std::abs(err(i)) / scale;
        acc += w * w;
    }
    return std::sqrt(acc / double(err.size()));
}

} // namespace detail

/// Integrate y' = f(t, y) from t0 to t1 with the adaptive Dormand-Prince 5(4)
/// pair, delivering interpolated states at the requested sample times
/// through record(sample_index, t, y).  sample_times must be nondecreasing
/// and lie in [t0, t1].  Throws StepFailure when the controller stalls.
template <class F, class Rec>
void integrate_dopri5(F&& f, Vector& y, double t0, double t1, std::span<const double> samples,
                      Rec&& record, const StepperOptions& opt) {
    opt.validate();
    const double span = t1 - t0;
    if (span <= 0.0) throw ConfigError("integrate_dopri5: empty time span");

    const Eigen::Index n = y.size();
    Vector k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n), yerr(n);
    Vector rcont3(n), rcont4(n), rcont5(n);

    std::size_t next_sample = 0;
    while (next_sample < samples.size() && samples[next_sample] <= t0) {
        record(next_sample, t0, y);
        ++next_sample;
    }

    double hmax = opt.max_step > 0.0 ? opt.max_step : span / 10.0;
    const double hmin = std::max(span * 1e-14, 1e-300);

    double t = t0;
    f(t, y, k1);
    // Crude but deterministic starting step; the controller corrects it.
    double h = std::min(hmax, span / 100.0);

    bool last_step_rejected = false;
    while (t1 - t > hmin) {
        if (h < hmin)
            throw StepFailure("integrate_dopri5: step size underflow at t=" + std::to_string(t));
        h = std::min(h, t1 - t);

        using namespace detail;
        ytmp = y + h * (a21 * k1);
        f(t + c2 * h, ytmp, k2);
        ytmp = y + h * (a31 * k1 + a32 * k2);
        f(t + c3 * h, ytmp, k3);
        ytmp = y + h * (a41 * k1 + a42 * k2 + a43 * k3);
        f(t + c4 * h, ytmp, k4);
        ytmp = y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4);
        f(t + c5 * h, ytmp, k5);
        ytmp = y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5);
        f(t + h, ytmp, k6);
        ynew = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        f(t + h, ynew, k7); // FSAL stage
        yerr = h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7);

        double err = error_norm(yerr, y, ynew, opt.rel_tol, opt.abs_tol);
        if (!std::isfinite(err)) err = 10.0;

        if (err > 1.0) {
            h *= std::max(0.2, 0.9 * std::pow(err, -0.2));
            last_step_rejected = true;
            continue;
        }

        // Deliver samples inside (t, t+h] via the quartic interpolant.
        if (next_sample < samples.size() && samples[next_sample] <= t + h) {
            rcont3 = h * k1 - (ynew - y);
            rcont4 = (ynew - y) - h * k7 - rcont3;
            rcont5 = h * (d1 * k1 + d3 * k3 + d4 * k4 + d5 * k5 + d6 * k6 + d7 * k7);
            while (next_sample < samples.size() && samples[next_sample] <= t + h) {
                const double ts = samples[next_sample];
                const double theta = (ts - t) / h;
                if (theta >= 1.0 - 1e-12) {
                    record(next_sample, ts, ynew);
                } else {
                    ytmp = y + theta * ((ynew - y) + (1.0 - theta) *
                                                         (rcont3 + theta * (rcont4 + (1.0 - theta) * rcont5)));
                    record(next_sample, ts, ytmp);
                }
                ++next_sample;
            }
        }

        t += h;
        y.swap(ynew);
        k1.swap(k7);

        double factor = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        if (last_step_rejected) factor = std::min(factor, 1.0);
        h = std::min(h * std::clamp(factor, 0.2, 5.0), hmax);
        last_step_rejected = false;
    }

    // Samples pinned to t1 that the last step left behind by round-off.
    for (; next_sample < samples.size() && samples[next_sample] <= t1 + hmin; ++next_sample)
        record(next_sample, samples[next_sample], y);
}

/// Classic fixed-step RK4 landing exactly on each sample time, with
/// substeps_per_sample subdivisions of every sample interval.
template <class F, class Rec>
void integrate_rk4(F&& f, Vector& y, double t0, std::span<const double> samples, Rec&& record,
                   int substeps_per_sample) {
    if (substeps_per_sample < 1) throw ConfigError("integrate_rk4: substeps must be >= 1");
    const Eigen::Index n = y.size();
    Vector k1(n), k2(n), k3(n), k4(n), ytmp(n);

    double t = t0;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        const double target = samples[s];
        if (target > t) {
            const double h = (target - t) / substeps_per_sample;
            for (int sub = 0; sub < substeps_per_sample; ++sub) {
                f(t, y, k1);
                ytmp = y + (0.5 * h) * k1;
                f(t + 0.5 * h, ytmp, k2);
                ytmp = y + (0.5 * h) * k2;
                f(t + 0.5 * h, ytmp, k3);
                ytmp = y + h * k3;
                f(t + h, ytmp, k4);
                y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
                t += h;
            }
            t = target;
        }
        record(s, target, y);
    }
}

} // namespace qb::ode
