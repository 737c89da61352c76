#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "fcx/complexity.hpp"
#include "fcx/specfun.hpp"

using namespace fcx;

namespace {

constexpr double kPi = std::numbers::pi;

ModelParams figure_params(double dg0_over_J, int L = 1000)
{
    ModelParams p;
    p.omega = kPi;
    p.J = 0.01 * p.omega;
    p.g1 = p.omega;
    p.L = L;
    p.g0 = p.resonant_field() + dg0_over_J * p.J;
    return p;
}

// dC/dr of the undriven ground-state complexity, r = g0 / J.
double ground_slope(double r)
{
    return -std::log(std::abs((1.0 + r) / (1.0 - r))) / (4.0 * kPi * r);
}

}  // namespace

TEST_CASE("kernel agrees with the defining sum")
{
    const auto p = figure_params(0.7, 40);
    const auto eff = effective_params(p);
    const ComplexityKernel kernel(eff);
    CHECK(kernel.mode_count() == 20);
    for (double t : {0.0, 1e-9, 3.0, 250.0, 4000.0}) {
        double sum = 0.0;
        for (std::size_t i = 0; i < eff.modes.size(); ++i) {
            const double eps = eff.spectrum[i].eps;
            sum += std::abs(std::asin(eff.modes[i].delta_k * eff.gamma * std::sin(eps * t) / eps));
        }
        CHECK(kernel(t) == doctest::Approx(sum).epsilon(1e-13));
        CHECK(complexity_t(p, t) == doctest::Approx(sum).epsilon(1e-13));
    }
}

TEST_CASE("early-time slope is independent of the detuning")
{
    for (double d : {0.0, 1.0, 2.0}) {
        const auto p = figure_params(d);
        const double h = 1e-6;
        const double slope = complexity_t(p, h) / h;
        CHECK(slope == doctest::Approx(early_slope(p)).epsilon(1e-6));
    }
    const auto p = figure_params(0.0);
    CHECK(early_slope(p) == doctest::Approx(2.0 * p.J * specfun::bessel_j(2, 4.0) / std::sin(kPi / p.L)));
}

TEST_CASE("equilibration time")
{
    const auto p = figure_params(2.0);
    CHECK(equilibration_time(p) == doctest::Approx(1.0 / (6.0 * p.J)));
}

TEST_CASE("series and time average")
{
    const auto p = figure_params(0.5, 200);
    const std::vector<double> times{0.0, 10.0, 20.0};
    const auto s = complexity_series(p, times);
    REQUIRE(s.values.size() == 3);
    CHECK(s.values[1] == doctest::Approx(complexity_t(p, 10.0)));

    const double one = time_average(p, 50, 16, 1);
    const double many = time_average(p, 50, 16, 3);
    CHECK(one == many);
    CHECK(one > 0.0);
    CHECK(one < p.L * kPi / 4.0);
    CHECK_THROWS_AS(time_average(p, 0, 16), std::domain_error);
    CHECK_THROWS_AS(time_average(p, 10, 2), std::domain_error);
}

TEST_CASE("Floquet-mode complexities")
{
    auto p = figure_params(3.0, 100);
    p.g1 = specfun::bessel_zero(2, 1) * p.omega / 4.0;
    CHECK(floquet_complexity(p, Branch::Minus) < 1e-12);
    CHECK(floquet_complexity(p, Branch::Plus) == doctest::Approx(p.L * kPi / 4.0));

    const auto q = figure_params(-0.5, 100);
    CHECK(floquet_complexity(q, Branch::Minus) > 0.0);
    CHECK(floquet_complexity(q, Branch::Minus) <= p.L * kPi / 8.0);
}

TEST_CASE("finite differences")
{
    std::vector<double> x, y;
    for (int i = 0; i <= 10; ++i) {
        x.push_back(0.1 * i);
        y.push_back(3.0 * x.back() * x.back() - x.back());
    }
    const auto d1 = finite_difference(x, y, 1);
    const auto d2 = finite_difference(x, y, 2);
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(d1[i] == doctest::Approx(6.0 * x[i] - 1.0).epsilon(1e-10));
        CHECK(d2[i] == doctest::Approx(6.0).epsilon(1e-8));
    }

    std::vector<AverageRecord> records;
    for (int i = 0; i < 5; ++i) {
        records.push_back({0.5 * i, 2.0 * i, 0.0, 10});
    }
    const auto pairs = sweep_derivatives(records, 1);
    REQUIRE(pairs.size() == 5);
    CHECK(pairs[2].first == 1.0);
    CHECK(pairs[2].second == doctest::Approx(4.0));

    x[3] += 0.01;
    CHECK_THROWS_AS(finite_difference(x, y, 1), std::domain_error);
    CHECK_THROWS_AS(finite_difference(x, y, 3), std::domain_error);
    const std::vector<double> two{0.0, 1.0};
    CHECK_THROWS_AS(finite_difference(two, two, 1), std::domain_error);
}

TEST_CASE("undriven ground-state complexity")
{
    CHECK(ising_ground_complexity(0.0, 1.0) == doctest::Approx(kPi / 8.0).epsilon(1e-14));
    for (double r : {0.2, 0.7, 0.99, 1.01, 1.5, 4.0}) {
        const double h = 1e-5 * r;
        const double slope = (ising_ground_complexity(r + h, 1.0) - ising_ground_complexity(r - h, 1.0)) / (2.0 * h);
        CAPTURE(r);
        CHECK(slope == doctest::Approx(ground_slope(r)).epsilon(1e-6));
    }
    CHECK(ising_ground_complexity(0.6, 2.0) == doctest::Approx(ising_ground_complexity(0.3, 1.0)).epsilon(1e-14));
    CHECK(ising_ground_complexity(1000.0, 1.0) == doctest::Approx(1.0 / (2000.0 * kPi)).epsilon(1e-5));
}
