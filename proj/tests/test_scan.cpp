#include <doctest.h>

#include <atomic>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "fcx/scan.hpp"
#include "fcx/specfun.hpp"

using namespace fcx;

namespace {

std::string render(const CsvTable& t)
{
    std::ostringstream os;
    write_csv(t, os);
    return os.str();
}

}  // namespace

TEST_CASE("config parsing")
{
    const auto cfg = config_from_json_text(R"({"J": 0.02, "L": 12, "sweep_axis": "g1", "omega_ratios": [10, 20]})");
    REQUIRE(cfg.J);
    CHECK(*cfg.J == 0.02);
    CHECK(*cfg.L == 12);
    CHECK_FALSE(cfg.g0);
    CHECK(cfg.sweep_axis == "g1");
    CHECK(cfg.omega_ratios.size() == 2);
    CHECK(cfg.periods == 1000);

    CHECK_THROWS_AS(config_from_json_text(R"({"Jx": 1})"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text(R"({"L": "ten"})"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text("[1, 2]"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json_text("{"), std::invalid_argument);
    CHECK_THROWS_AS(load_config("/nonexistent/run.json"), std::invalid_argument);
}

TEST_CASE("config validation")
{
    RunConfig cfg;
    CHECK_NOTHROW(validate_config(cfg));
    cfg.workers = 0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.sweep_axis = "g2";
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.sweep_min = 2.0;
    cfg.sweep_max = 1.0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
    cfg = {};
    cfg.dt = -1.0;
    CHECK_THROWS_AS(validate_config(cfg), std::invalid_argument);
}

TEST_CASE("model defaults scale with omega")
{
    RunConfig cfg;
    cfg.ell = 3;
    const auto p = resolve_model(cfg, 2.0, 100);
    CHECK(p.omega == 2.0);
    CHECK(p.J == doctest::Approx(0.02));
    CHECK(p.g1 == 2.0);
    CHECK(p.g0 == doctest::Approx(1.5));
    CHECK(p.L == 100);
    cfg.L = 7;
    CHECK_THROWS_AS(resolve_model(cfg, 1.0, 10), std::invalid_argument);
}

TEST_CASE("number formatting and CSV layout")
{
    CHECK(format_number(0.1) == "1.0000000000000001e-01");
    CHECK(format_number(-2.0) == "-2.0000000000000000e+00");
    CHECK(format_number(std::nan("")) == "nan");
    CHECK(std::stod(format_number(std::numbers::pi)) == std::numbers::pi);

    CsvTable t;
    t.meta = {{"command", "x"}};
    t.columns = {"a", "b"};
    t.rows = {{"1", "2"}, {"3", "4"}};
    CHECK(render(t) == "# command=x\na,b\n1,2\n3,4\n");
}

TEST_CASE("linspace")
{
    const auto xs = linspace(1.0, 2.0, 5);
    REQUIRE(xs.size() == 5);
    CHECK(xs[1] == 1.25);
    CHECK(xs.back() == 2.0);
    CHECK(linspace(3.0, 4.0, 1) == std::vector<double>{3.0});
    CHECK_THROWS_AS(linspace(0.0, 1.0, 0), std::invalid_argument);
}

TEST_CASE("parallel_for covers every index and forwards failures")
{
    std::vector<int> hits(37, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) {
        CHECK(h == 1);
    }
    CHECK_THROWS_AS(parallel_for(10, 3,
                                 [](std::size_t i) {
                                     if (i == 7) {
                                         throw std::runtime_error("boom");
                                     }
                                 }),
                    std::runtime_error);
}

TEST_CASE("sweeps are deterministic and independent of the worker count")
{
    ModelParams base;
    base.omega = std::numbers::pi;
    base.J = 0.01 * base.omega;
    base.g1 = base.omega;
    base.L = 40;
    const double g0c = base.resonant_field();
    const auto values = linspace(g0c - 2.0 * base.J, g0c + 2.0 * base.J, 7);
    const auto a = average_sweep(base, SweepAxis::G0, values, 20, 16, 1);
    const auto b = average_sweep(base, SweepAxis::G0, values, 20, 16, 3);
    REQUIRE(a.size() == 7);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].c_bar == b[i].c_bar);
        CHECK(a[i].d1 == b[i].d1);
    }
    CHECK(a.front().label == PhaseLabel::PM);
    CHECK(a[3].label == PhaseLabel::FMZ);
    CHECK(std::isfinite(a[3].d2));

    const auto single = average_sweep(base, SweepAxis::G0, {g0c}, 20, 16, 1);
    CHECK(std::isnan(single[0].d1));
    CHECK(parse_axis("g1") == SweepAxis::G1);
    CHECK_THROWS_AS(parse_axis("omega"), std::invalid_argument);
}

TEST_CASE("phase grid recovers the critical lines")
{
    ModelParams base;
    base.omega = 1.0;
    base.J = 0.01;
    base.L = 8;
    const double g0c = base.resonant_field();
    const auto g0s = linspace(g0c - 3.0 * base.J, g0c + 3.0 * base.J, 61);
    const auto g1s = linspace(0.0, 4.0, 201);
    const auto grid = phase_grid(base, g0s, g1s, 1e-9, 2);
    CHECK(grid.cells.size() == 61 * 201);
    CHECK(grid.at(3, 5).g0 == g0s[3]);
    CHECK(grid.at(3, 5).g1 == g1s[5]);

    const auto lines = detect_critical_lines(grid);
    REQUIRE(lines.g0.size() == 2);
    CHECK(std::abs(lines.g0[0] - (g0c - base.J)) <= 0.1 * base.J);
    CHECK(std::abs(lines.g0[1] - (g0c + base.J)) <= 0.1 * base.J);
    std::vector<double> zeros;
    for (int i = 1; specfun::bessel_zero(2, i) / 4.0 <= 4.0; ++i) {
        zeros.push_back(specfun::bessel_zero(2, i) / 4.0);
    }
    REQUIRE(lines.g1.size() == zeros.size());
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        CHECK(std::abs(lines.g1[i] - zeros[i]) <= 0.02);
    }
}

TEST_CASE("run tables")
{
    RunConfig cfg;
    cfg.L = 8;
    cfg.t_steps = 4;
    cfg.detunings = {0.0, 2.0};
    const auto ev = run_evolve(cfg);
    CHECK(ev.columns.size() == 5);
    CHECK(ev.rows.size() == 4);
    CHECK(render(ev) == render(run_evolve(cfg)));

    cfg.sweep_steps = 3;
    cfg.periods = 5;
    cfg.samples_per_period = 8;
    const auto av = run_average(cfg);
    CHECK(av.rows.size() == 3);
    CHECK(av.columns.front() == "g0");

    cfg.g0_steps = 5;
    cfg.g1_steps = 5;
    CHECK(run_phase_diagram(cfg).rows.size() == 25);

    cfg.omega_ratios = {50.0};
    cfg.t_max = 50.0;
    const auto oc = run_oracle(cfg);
    CHECK(oc.rows.size() == 4);
    cfg.L = 40;
    CHECK_THROWS_AS(run_oracle(cfg), std::invalid_argument);
}
