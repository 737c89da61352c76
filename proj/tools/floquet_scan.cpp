// floquet-scan: time series, sweeps, phase grids and oracle runs as CSV.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcx/scan.hpp"
#include "fcx/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;
constexpr double kNormDriftLimit = 1e-8;

struct Overrides {
    std::string config;
    std::optional<std::string> out;
    std::optional<int> workers;
    std::optional<double> J, g0, g1, omega;
    std::optional<int> L, ell;
    std::optional<double> t_max;
    std::optional<int> t_steps;
    std::optional<std::vector<double>> detunings;
    std::optional<std::string> sweep_axis;
    std::optional<double> sweep_min, sweep_max;
    std::optional<int> sweep_steps, periods, samples_per_period;
    std::optional<double> g0_min, g0_max, g1_min, g1_max;
    std::optional<int> g0_steps, g1_steps;
    std::optional<double> tol, dt;
    std::optional<std::vector<double>> omega_ratios;
    bool allow_large_L = false;
    std::optional<std::uint64_t> seed;
    bool inject_fault = false;
};

template <typename T>
void take(const std::optional<T>& flag, T& slot)
{
    if (flag) {
        slot = *flag;
    }
}

template <typename T>
void take(const std::optional<T>& flag, std::optional<T>& slot)
{
    if (flag) {
        slot = flag;
    }
}

fcx::RunConfig merge(const Overrides& o)
{
    fcx::RunConfig cfg = o.config.empty() ? fcx::RunConfig{} : fcx::load_config(o.config);
    take(o.out, cfg.out);
    take(o.workers, cfg.workers);
    take(o.J, cfg.J);
    take(o.g0, cfg.g0);
    take(o.g1, cfg.g1);
    take(o.omega, cfg.omega);
    take(o.L, cfg.L);
    take(o.ell, cfg.ell);
    take(o.t_max, cfg.t_max);
    take(o.t_steps, cfg.t_steps);
    take(o.detunings, cfg.detunings);
    take(o.sweep_axis, cfg.sweep_axis);
    take(o.sweep_min, cfg.sweep_min);
    take(o.sweep_max, cfg.sweep_max);
    take(o.sweep_steps, cfg.sweep_steps);
    take(o.periods, cfg.periods);
    take(o.samples_per_period, cfg.samples_per_period);
    take(o.g0_min, cfg.g0_min);
    take(o.g0_max, cfg.g0_max);
    take(o.g1_min, cfg.g1_min);
    take(o.g1_max, cfg.g1_max);
    take(o.g0_steps, cfg.g0_steps);
    take(o.g1_steps, cfg.g1_steps);
    take(o.tol, cfg.tol);
    take(o.dt, cfg.dt);
    take(o.omega_ratios, cfg.omega_ratios);
    take(o.seed, cfg.seed);
    if (o.allow_large_L) {
        cfg.allow_large_L = true;
    }
    fcx::validate_config(cfg);
    return cfg;
}

void emit(const fcx::CsvTable& table, const std::string& out)
{
    if (out == "-") {
        fcx::write_csv(table, std::cout);
        return;
    }
    std::ofstream file(out);
    if (!file) {
        throw std::ios_base::failure("cannot open output file " + out);
    }
    fcx::write_csv(table, file);
    if (!file) {
        throw std::ios_base::failure("write failed for " + out);
    }
}

void add_common(CLI::App* cmd, Overrides& o)
{
    cmd->add_option("--config", o.config, "JSON run manifest")->check(CLI::ExistingFile);
    cmd->add_option("--out", o.out, "output CSV path, '-' for stdout");
    cmd->add_option("--workers", o.workers, "worker threads");
    cmd->add_option("--J", o.J, "exchange coupling");
    cmd->add_option("--g0", o.g0, "static field");
    cmd->add_option("--g1", o.g1, "drive amplitude");
    cmd->add_option("--omega", o.omega, "drive frequency");
    cmd->add_option("--L", o.L, "chain length (even)");
    cmd->add_option("--ell", o.ell, "resonance order");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Floquet transverse-field Ising chain: circuit complexity scans"};
    app.require_subcommand(1);
    Overrides o;

    auto* evolve = app.add_subcommand("evolve", "C(t) time series");
    add_common(evolve, o);
    evolve->add_option("--t-max", o.t_max, "final time");
    evolve->add_option("--t-steps", o.t_steps, "number of time samples");
    evolve->add_option("--detunings", o.detunings, "detunings g0 - ell omega/4 in units of J")->delimiter(',');

    auto* average = app.add_subcommand("average", "long-time average sweep");
    add_common(average, o);
    average->add_option("--sweep-axis", o.sweep_axis, "g0 or g1");
    average->add_option("--sweep-min", o.sweep_min, "sweep start");
    average->add_option("--sweep-max", o.sweep_max, "sweep end");
    average->add_option("--sweep-steps", o.sweep_steps, "number of sweep points");
    average->add_option("--periods", o.periods, "averaging window in drive periods");
    average->add_option("--samples-per-period", o.samples_per_period, "time samples per period");
    average->add_option("--tol", o.tol, "phase-label tolerance");

    auto* phase = app.add_subcommand("phase-diagram", "phase labels on a (g0, g1) grid");
    add_common(phase, o);
    phase->add_option("--g0-min", o.g0_min, "g0 grid start");
    phase->add_option("--g0-max", o.g0_max, "g0 grid end");
    phase->add_option("--g0-steps", o.g0_steps, "g0 grid points");
    phase->add_option("--g1-min", o.g1_min, "g1 grid start");
    phase->add_option("--g1-max", o.g1_max, "g1 grid end");
    phase->add_option("--g1-steps", o.g1_steps, "g1 grid points");
    phase->add_option("--tol", o.tol, "phase-label tolerance");

    auto* oracle = app.add_subcommand("oracle", "closed form against RK4 over an omega/J ladder");
    add_common(oracle, o);
    oracle->add_option("--t-max", o.t_max, "final time");
    oracle->add_option("--t-steps", o.t_steps, "number of comparison times");
    oracle->add_option("--dt", o.dt, "RK4 step");
    oracle->add_option("--omega-ratios", o.omega_ratios, "omega/J ladder")->delimiter(',');
    oracle->add_flag("--allow-large-L", o.allow_large_L, "permit L > 32");

    auto* selftest = app.add_subcommand("selftest", "randomised invariant checks");
    selftest->add_option("--seed", o.seed, "sampler seed");
    selftest->add_flag("--inject-fault", o.inject_fault, "break the gamma symmetry on purpose");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (selftest->parsed()) {
            fcx::SelftestOptions options;
            options.seed = o.seed.value_or(options.seed);
            options.inject_gamma_fault = o.inject_fault;
            const auto report = fcx::run_selftest(options);
            report.print(std::cout);
            return report.passed() ? kExitOk : kExitInvariant;
        }

        const auto cfg = merge(o);
        if (evolve->parsed()) {
            emit(fcx::run_evolve(cfg), cfg.out);
        } else if (average->parsed()) {
            emit(fcx::run_average(cfg), cfg.out);
        } else if (phase->parsed()) {
            emit(fcx::run_phase_diagram(cfg), cfg.out);
        } else if (oracle->parsed()) {
            const auto table = fcx::run_oracle(cfg);
            emit(table, cfg.out);
            for (const auto& [key, value] : table.meta) {
                if (key.find("max_norm_drift") != std::string::npos && std::strtod(value.c_str(), nullptr) > kNormDriftLimit) {
                    std::cerr << "oracle: norm drift " << value << " exceeds " << kNormDriftLimit << '\n';
                    return kExitInvariant;
                }
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}
