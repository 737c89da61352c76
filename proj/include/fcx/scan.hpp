#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcx/complexity.hpp"
#include "fcx/model.hpp"

namespace fcx {

/// Everything a CLI run can be configured with. Unset energies default to the
/// figure parameter set relative to omega: J = 0.01 omega, g1 = omega,
/// g0 = ell omega / 4.
struct RunConfig {
    std::optional<double> J;
    std::optional<double> g0;
    std::optional<double> g1;
    std::optional<double> omega;
    std::optional<int> L;
    int ell = 2;

    std::optional<double> t_max;
    int t_steps = 2000;
    std::vector<double> detunings;  ///< evolve: extra dg0 columns, in units of J

    std::string sweep_axis = "g0";
    std::optional<double> sweep_min;
    std::optional<double> sweep_max;
    int sweep_steps = 81;
    int periods = 1000;
    int samples_per_period = 64;

    std::optional<double> g0_min, g0_max, g1_min, g1_max;
    int g0_steps = 61;
    int g1_steps = 201;
    double tol = 1e-9;

    std::optional<double> dt;
    std::vector<double> omega_ratios{50.0, 100.0, 200.0, 400.0};
    bool allow_large_L = false;

    int workers = 1;
    std::string out = "-";
    std::uint64_t seed = 12345;
};

/// Reads the JSON manifest; keys match RunConfig member names.
/// Throws std::invalid_argument on unknown keys or wrong types.
RunConfig config_from_json_text(const std::string& text);
RunConfig load_config(const std::string& path);

/// Checks ranges and counts. Throws std::invalid_argument.
void validate_config(const RunConfig& cfg);

ModelParams resolve_model(const RunConfig& cfg, double default_omega, int default_L);

/// Calls fn(i) for i in [0, n) on up to `workers` threads.
void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn);

/// "%.16e" rendering used for every floating column.
std::string format_number(double x);

struct CsvTable {
    std::vector<std::pair<std::string, std::string>> meta;  ///< "# key=value" header lines
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const CsvTable& table, std::ostream& os);

/// One grid point of a C-bar sweep.
struct SweepRecord {
    double value = 0.0;
    double c_bar = 0.0;
    double c_minus = 0.0;
    double c_plus = 0.0;
    double d1 = 0.0;  ///< NaN when fewer than 3 points
    double d2 = 0.0;
    PhaseLabel label = PhaseLabel::PM;
    Validity validity;
    int n_periods = 0;
};

enum class SweepAxis { G0, G1 };

SweepAxis parse_axis(const std::string& name);

std::vector<SweepRecord> average_sweep(const ModelParams& base, SweepAxis axis, const std::vector<double>& values,
                                       int n_periods, int samples_per_period, int workers, double tol = 1e-9);

struct PhaseCell {
    double g0 = 0.0;
    double g1 = 0.0;
    double dg0 = 0.0;
    double gamma = 0.0;
    PhaseLabel label = PhaseLabel::PM;
    bool valid = false;
};

/// Row-major in (g0, g1): g0 outer, g1 inner.
struct PhaseGrid {
    std::vector<double> g0_values;
    std::vector<double> g1_values;
    std::vector<PhaseCell> cells;

    const PhaseCell& at(std::size_t i0, std::size_t i1) const { return cells[i0 * g1_values.size() + i1]; }
};

PhaseGrid phase_grid(const ModelParams& base, const std::vector<double>& g0_values,
                     const std::vector<double>& g1_values, double tol, int workers);

struct CriticalLines {
    std::vector<double> g1;  ///< anisotropic lines (sign changes of gamma), midpoints
    std::vector<double> g0;  ///< Ising lines (PM boundary), midpoints
};

/// Anisotropic lines are read off the g0 row closest to resonance, Ising lines
/// off the g1 column with the largest |gamma|.
CriticalLines detect_critical_lines(const PhaseGrid& grid);

struct OracleRun {
    double omega = 0.0;
    std::vector<double> times;
    std::vector<double> c_analytic;
    std::vector<double> c_ode;
    double max_deviation = 0.0;
    double max_norm_drift = 0.0;
};

/// Closed-form C(t) against sum_k arcsin|u_k| from the RK4 oracle.
OracleRun oracle_compare(const ModelParams& p, const std::vector<double>& times, double dt, int workers = 1);

std::vector<double> linspace(double lo, double hi, int steps);

CsvTable run_evolve(const RunConfig& cfg);
CsvTable run_average(const RunConfig& cfg);
CsvTable run_phase_diagram(const RunConfig& cfg);
CsvTable run_oracle(const RunConfig& cfg);

}  // namespace fcx
