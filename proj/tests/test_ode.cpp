#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "qb/ode.hpp"

using namespace qb;

namespace {

// y' = lambda y with a complex rate; exact solution y0 exp(lambda t).
struct LinearOde {
    Complex lambda;
    void operator()(double, const Vector& y, Vector& dy) const { dy = lambda * y; }
};

// Nonlinear scalar problem y' = y^2, y(0) = 1, exact 1/(1 - t).
struct RiccatiOde {
    void operator()(double, const Vector& y, Vector& dy) const { dy = y.array().square(); }
};

} // namespace

TEST_CASE("dopri5 reproduces a complex exponential at tolerance") {
    const Complex lambda(-0.2, 1.7);
    LinearOde ode{lambda};
    Vector y(1);
    y(0) = Complex(1.0, 0.5);
    const Complex y0 = y(0);

    std::vector<double> samples;
    for (int k = 0; k <= 100; ++k) samples.push_back(0.1 * k);

    double worst = 0.0;
    ode::StepperOptions opt{1e-10, 1e-12, 0.0};
    ode::integrate_dopri5(ode, y, 0.0, 10.0, samples,
                          [&](std::size_t, double t, const Vector& ys) {
                              const Complex exact = y0 * std::exp(lambda * t);
                              worst = std::max(worst, std::abs(ys(0) - exact));
                          },
                          opt);
    CHECK(worst < 1e-8);
}

TEST_CASE("dense output interpolant is fifth-order accurate") {
    // Integrate y' = y^2 over [0, 0.5] with forced fixed step h by
    // requesting max_step = h and loose tolerances, and inspect the
    // interpolated midpoint error as h halves: it must fall ~2^5.
    std::vector<double> errors;
    for (double h : {0.05, 0.025, 0.0125}) {
        Vector y(1);
        y(0) = 1.0;
        std::vector<double> samples;
        for (double t = h / 2; t < 0.5; t += h) samples.push_back(t);
        double worst = 0.0;
        ode::StepperOptions opt{1e-2, 1e-2, h};
        ode::integrate_dopri5(RiccatiOde{}, y, 0.0, 0.5, samples,
                              [&](std::size_t, double t, const Vector& ys) {
                                  worst = std::max(worst,
                                                   std::abs(ys(0) - Complex(1.0 / (1.0 - t))));
                              },
                              opt);
        errors.push_back(worst);
    }
    // fifth-order interpolation: ratio ~32, allow slack
    CHECK(errors[0] / errors[1] > 16.0);
    CHECK(errors[1] / errors[2] > 16.0);
    CHECK(errors[2] < 1e-8);
}

TEST_CASE("dopri5 rejects nonpositive tolerances") {
    LinearOde ode{Complex(0.0, 1.0)};
    Vector y(1);
    y(0) = 1.0;
    std::vector<double> samples{1.0};
    ode::StepperOptions opt{0.0, 1e-12, 0.0};
    CHECK_THROWS_AS(ode::integrate_dopri5(ode, y, 0.0, 1.0, samples,
                                          [](std::size_t, double, const Vector&) {}, opt),
                    ConfigError);
}

TEST_CASE("dopri5 reports step-size underflow as StepFailure") {
    // An unreachable tolerance forces the controller below the minimum step.
    LinearOde ode{Complex(0.0, 50.0)};
    Vector y(1);
    y(0) = 1.0;
    std::vector<double> samples{1.0};
    ode::StepperOptions opt{1e-30, 1e-30, 0.0};
    CHECK_THROWS_AS(ode::integrate_dopri5(ode, y, 0.0, 1.0, samples,
                                          [](std::size_t, double, const Vector&) {}, opt),
                    StepFailure);
}

TEST_CASE("fixed rk4 converges at fourth order") {
    std::vector<double> errors;
    for (int sub : {4, 8}) {
        Vector y(1);
        y(0) = 1.0;
        std::vector<double> samples;
        for (int k = 1; k <= 10; ++k) samples.push_back(0.05 * k);
        double final_err = 0.0;
        ode::integrate_rk4(RiccatiOde{}, y, 0.0, samples,
                           [&](std::size_t, double t, const Vector& ys) {
                               final_err = std::abs(ys(0) - Complex(1.0 / (1.0 - t)));
                           },
                           sub);
        errors.push_back(final_err);
    }
    CHECK(errors[0] / errors[1] > 12.0); // ~2^4
}
