#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fcx/dynamics.hpp"

using namespace fcx;

namespace {

constexpr double kPi = std::numbers::pi;

double distance(const SpinorState& a, const SpinorState& b)
{
    return std::sqrt(std::norm(a.u - b.u) + std::norm(a.v - b.v));
}

// exp(-i H t) (0, 1) for the time-independent H = a sz + d sx - w.
SpinorState static_oracle(double a, double d, double w, double t)
{
    const double e = std::hypot(a, d);
    const complex phase = std::polar(1.0, w * t);
    const complex c = std::cos(e * t);
    const complex s = complex(0.0, -1.0) * std::sin(e * t) / e;
    return {phase * s * d, phase * (c - s * a)};
}

}  // namespace

TEST_CASE("polar decomposition")
{
    const SpinorState s{std::polar(std::sin(0.3), 2.0), std::polar(std::cos(0.3), -2.0)};
    const auto p = polar_decompose(s);
    CHECK(p.theta == doctest::Approx(0.3));
    CHECK(p.beta == doctest::Approx(4.0 - 2.0 * kPi));
    CHECK(polar_decompose(SpinorState{}).beta == 0.0);
    CHECK_THROWS_AS(polar_decompose(SpinorState{1.0, 1.0}), std::domain_error);
}

TEST_CASE("drive phase")
{
    const DriveFrame f{0.5, 1.0, 2.0};
    CHECK(f.alpha(0.0) == 0.0);
    CHECK(f.alpha(0.7) == doctest::Approx(4.0 * 0.5 * 0.7 + 2.0 * std::sin(1.4)));
}

TEST_CASE("closed form starts in the pair vacuum and stays normalised")
{
    ModelParams p;
    p.L = 10;
    p.g0 = p.resonant_field() + 0.4 * p.J;
    const auto eff = effective_params(p);
    const auto frame = DriveFrame::from(p);
    for (const auto& m : eff.modes) {
        const auto s0 = evolve_analytic(m, eff, frame, 0.0);
        CHECK(std::abs(s0.u) == 0.0);
        CHECK(std::abs(s0.v - 1.0) < 1e-15);
        CHECK(evolve_analytic(m, eff, frame, 123.4).norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("RK4 reproduces the undriven evolution")
{
    ModelParams p;
    p.ell = 0;
    p.g1 = 0.0;
    p.g0 = 0.37;
    p.J = 0.2;
    p.L = 6;
    for (const auto& m : brillouin_momenta(p.L, p.J)) {
        const double t = 17.0;
        const auto exact = static_oracle(2.0 * p.g0 - m.omega_k, m.delta_k, m.omega_k, t);
        const auto num = evolve_ode(m, p, t, 1e-3);
        CHECK(std::abs(std::abs(num.u) - std::abs(exact.u)) < 1e-10);
        CHECK(std::abs(std::abs(num.v) - std::abs(exact.v)) < 1e-10);
        CHECK(std::abs(num.u * std::conj(num.v) - exact.u * std::conj(exact.v)) < 1e-10);
    }
}

TEST_CASE("RK4 converges at fourth order")
{
    ModelParams p;
    p.L = 4;
    const auto m = brillouin_momenta(p.L, p.J)[0];
    const double t = 3.0;
    const auto ref = evolve_ode(m, p, t, 1e-4);
    const double e1 = distance(evolve_ode(m, p, t, 0.02), ref);
    const double e2 = distance(evolve_ode(m, p, t, 0.01), ref);
    CHECK(e1 / e2 == doctest::Approx(16.0).epsilon(0.1));
}

TEST_CASE("default step keeps the norm")
{
    ModelParams p;
    p.L = 8;
    const double dt = default_ode_step(p);
    CHECK(dt <= p.period() / 200.0);
    for (const auto& m : brillouin_momenta(p.L, p.J)) {
        CHECK(std::abs(evolve_ode(m, p, 200.0 * p.period(), dt).norm_squared() - 1.0) < 1e-9);
    }
}

TEST_CASE("series hits every sample exactly")
{
    ModelParams p;
    p.L = 4;
    const auto m = brillouin_momenta(p.L, p.J)[1];
    const std::vector<double> times{0.0, 0.013, 1.0, 1.0, 2.5};
    const auto series = evolve_ode_series(m, p, times, 0.01);
    REQUIRE(series.size() == times.size());
    CHECK(distance(series[0], SpinorState{}) == 0.0);
    CHECK(distance(series[2], series[3]) == 0.0);
    CHECK(distance(series[4], evolve_ode(m, p, 2.5, 0.01)) < 1e-9);

    const std::vector<double> bad{1.0, 0.5};
    CHECK_THROWS_AS(evolve_ode_series(m, p, bad, 0.01), std::domain_error);
    CHECK_THROWS_AS(evolve_ode(m, p, 1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(evolve_ode(m, p, -1.0, 0.1), std::domain_error);
}

TEST_CASE("closed form approaches RK4 as omega grows")
{
    double previous = 1.0;
    for (double ratio : {50.0, 200.0}) {
        ModelParams p;
        p.J = 0.01;
        p.omega = ratio * p.J;
        p.g1 = p.omega;
        p.g0 = p.resonant_field() + p.J;
        p.L = 4;
        const auto eff = effective_params(p);
        const auto frame = DriveFrame::from(p);
        double worst = 0.0;
        const double t = 5.0 / p.J;
        for (const auto& m : eff.modes) {
            const double a = polar_decompose(evolve_analytic(m, eff, frame, t)).theta;
            const double b = polar_decompose(evolve_ode(m, p, t, default_ode_step(p))).theta;
            worst = std::max(worst, std::abs(a - b));
        }
        CHECK(worst < previous);
        previous = worst;
    }
    CHECK(previous < 0.02);
}

TEST_CASE("Floquet modes")
{
    ModelParams p;
    p.L = 6;
    p.g0 = p.resonant_field() - 2.0 * p.J;
    const auto eff = effective_params(p);
    const auto frame = DriveFrame::from(p);
    for (std::size_t i = 0; i < eff.modes.size(); ++i) {
        const auto& m = eff.modes[i];
        const auto plus = floquet_mode(m, eff, frame, 0.4, Branch::Plus);
        const auto minus = floquet_mode(m, eff, frame, 0.4, Branch::Minus);
        CHECK(std::abs(std::conj(plus.u) * minus.u + std::conj(plus.v) * minus.v) < 1e-15);
        const double sum = floquet_quasienergy(m, eff, Branch::Plus) + floquet_quasienergy(m, eff, Branch::Minus);
        CHECK(sum == doctest::Approx(eff.spectrum[i].eps_plus + eff.spectrum[i].eps_minus));
        // the mode amplitude repeats with the drive period
        const auto later = floquet_mode(m, eff, frame, 0.4 + p.period(), Branch::Minus);
        CHECK(std::abs(std::abs(later.u) - std::abs(minus.u)) < 1e-14);
    }
}
