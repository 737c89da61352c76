#include "fcx/scan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fcx/specfun.hpp"

namespace fcx {

namespace {

using nlohmann::json;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

template <class T>
void read_optional(const json& j, const char* key, std::optional<T>& slot)
{
    if (auto it = j.find(key); it != j.end()) {
        slot = it->get<T>();
    }
}

template <class T>
void read_value(const json& j, const char* key, T& slot)
{
    if (auto it = j.find(key); it != j.end()) {
        slot = it->get<T>();
    }
}

std::string join_numbers(const std::vector<double>& xs)
{
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i != 0) {
            s += ';';
        }
        s += format_number(xs[i]);
    }
    return s;
}

void add_model_meta(CsvTable& table, const ModelParams& p)
{
    table.meta.emplace_back("J", format_number(p.J));
    table.meta.emplace_back("g0", format_number(p.g0));
    table.meta.emplace_back("g1", format_number(p.g1));
    table.meta.emplace_back("omega", format_number(p.omega));
    table.meta.emplace_back("L", std::to_string(p.L));
    table.meta.emplace_back("ell", std::to_string(p.ell));
}

void add_validity_meta(CsvTable& table, const std::string& prefix, const Validity& v)
{
    table.meta.emplace_back(prefix + "valid", v.valid ? "1" : "0");
    table.meta.emplace_back(prefix + "detuning_ratio", format_number(v.detuning_ratio));
    table.meta.emplace_back(prefix + "rabi_ratio", format_number(v.rabi_ratio));
}

EffectiveParams bare_effective(const ModelParams& p, double gamma)
{
    EffectiveParams eff;
    eff.ell = p.ell;
    eff.omega = p.omega;
    eff.J = p.J;
    eff.dg0 = p.detuning();
    eff.gamma = gamma;
    eff.omega_eff = p.J * std::abs(gamma);
    return eff;
}

PhaseLabel label_of(const ModelParams& p, double tol)
{
    return phase_classify(bare_effective(p, anisotropy(p.ell, p.g1, p.omega)), p.J, tol);
}

double first_zero_field(const ModelParams& p)
{
    return p.omega * specfun::bessel_zero(p.ell, 1) / 4.0;
}

}  // namespace

RunConfig config_from_json_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    if (!j.is_object()) {
        throw std::invalid_argument("config: top level must be an object");
    }
    static const std::vector<std::string> known = {
        "J",       "g0",      "g1",        "omega",       "L",        "ell",        "t_max",
        "t_steps", "detunings", "sweep_axis", "sweep_min", "sweep_max", "sweep_steps", "periods",
        "samples_per_period", "g0_min", "g0_max", "g1_min", "g1_max", "g0_steps", "g1_steps",
        "tol",     "dt",      "omega_ratios", "allow_large_L", "workers", "out", "seed"};
    for (const auto& [key, value] : j.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            throw std::invalid_argument("config: unknown key '" + key + "'");
        }
    }

    RunConfig cfg;
    try {
        read_optional(j, "J", cfg.J);
        read_optional(j, "g0", cfg.g0);
        read_optional(j, "g1", cfg.g1);
        read_optional(j, "omega", cfg.omega);
        read_optional(j, "L", cfg.L);
        read_value(j, "ell", cfg.ell);
        read_optional(j, "t_max", cfg.t_max);
        read_value(j, "t_steps", cfg.t_steps);
        read_value(j, "detunings", cfg.detunings);
        read_value(j, "sweep_axis", cfg.sweep_axis);
        read_optional(j, "sweep_min", cfg.sweep_min);
        read_optional(j, "sweep_max", cfg.sweep_max);
        read_value(j, "sweep_steps", cfg.sweep_steps);
        read_value(j, "periods", cfg.periods);
        read_value(j, "samples_per_period", cfg.samples_per_period);
        read_optional(j, "g0_min", cfg.g0_min);
        read_optional(j, "g0_max", cfg.g0_max);
        read_optional(j, "g1_min", cfg.g1_min);
        read_optional(j, "g1_max", cfg.g1_max);
        read_value(j, "g0_steps", cfg.g0_steps);
        read_value(j, "g1_steps", cfg.g1_steps);
        read_value(j, "tol", cfg.tol);
        read_optional(j, "dt", cfg.dt);
        read_value(j, "omega_ratios", cfg.omega_ratios);
        read_value(j, "allow_large_L", cfg.allow_large_L);
        read_value(j, "workers", cfg.workers);
        read_value(j, "out", cfg.out);
        read_value(j, "seed", cfg.seed);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    return cfg;
}

RunConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("config: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return config_from_json_text(buf.str());
}

void validate_config(const RunConfig& cfg)
{
    auto require = [](bool ok, const char* what) {
        if (!ok) {
            throw std::invalid_argument(what);
        }
    };
    require(cfg.t_steps >= 2, "t_steps must be >= 2");
    require(cfg.sweep_steps >= 1, "sweep_steps must be >= 1");
    require(cfg.periods >= 1, "periods must be >= 1");
    require(cfg.samples_per_period >= 4, "samples_per_period must be >= 4");
    require(cfg.g0_steps >= 1 && cfg.g1_steps >= 1, "grid steps must be >= 1");
    require(cfg.workers >= 1, "workers must be >= 1");
    require(cfg.tol > 0.0, "tol must be positive");
    require(!cfg.dt || *cfg.dt > 0.0, "dt must be positive");
    require(!cfg.t_max || *cfg.t_max > 0.0, "t_max must be positive");
    require(!cfg.omega_ratios.empty(), "omega_ratios must not be empty");
    for (double r : cfg.omega_ratios) {
        require(r > 0.0, "omega_ratios must be positive");
    }
    require(cfg.sweep_axis == "g0" || cfg.sweep_axis == "g1", "sweep_axis must be g0 or g1");
    require(!(cfg.sweep_min && cfg.sweep_max) || *cfg.sweep_min <= *cfg.sweep_max, "sweep range is empty");
    require(!(cfg.g0_min && cfg.g0_max) || *cfg.g0_min <= *cfg.g0_max, "g0 range is empty");
    require(!(cfg.g1_min && cfg.g1_max) || *cfg.g1_min <= *cfg.g1_max, "g1 range is empty");
}

ModelParams resolve_model(const RunConfig& cfg, double default_omega, int default_L)
{
    ModelParams p;
    p.omega = cfg.omega.value_or(default_omega);
    p.ell = cfg.ell;
    p.J = cfg.J.value_or(0.01 * p.omega);
    p.g1 = cfg.g1.value_or(p.omega);
    p.g0 = cfg.g0.value_or(p.ell * p.omega / 4.0);
    p.L = cfg.L.value_or(default_L);
    try {
        p.validate();
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(e.what());
    }
    return p;
}

void parallel_for(std::size_t n, int workers, const std::function<void(std::size_t)>& fn)
{
    const auto count = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(workers, 1)));
    if (count <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    {
        std::vector<std::jthread> pool;
        pool.reserve(count);
        for (std::size_t w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        fn(i);
                    } catch (...) {
                        std::lock_guard lock(failure_lock);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::string format_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

void write_csv(const CsvTable& table, std::ostream& os)
{
    for (const auto& [key, value] : table.meta) {
        os << "# " << key << '=' << value << '\n';
    }
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        os << (i ? "," : "") << table.columns[i];
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << (i ? "," : "") << row[i];
        }
        os << '\n';
    }
}

std::vector<double> linspace(double lo, double hi, int steps)
{
    if (steps < 1) {
        throw std::invalid_argument("linspace: steps must be >= 1");
    }
    if (steps == 1) {
        return {lo};
    }
    std::vector<double> xs(static_cast<std::size_t>(steps));
    const double h = (hi - lo) / (steps - 1);
    for (int i = 0; i < steps; ++i) {
        xs[static_cast<std::size_t>(i)] = lo + i * h;
    }
    xs.back() = hi;
    return xs;
}

SweepAxis parse_axis(const std::string& name)
{
    if (name == "g0") {
        return SweepAxis::G0;
    }
    if (name == "g1") {
        return SweepAxis::G1;
    }
    throw std::invalid_argument("sweep axis must be g0 or g1");
}

std::vector<SweepRecord> average_sweep(const ModelParams& base, SweepAxis axis, const std::vector<double>& values,
                                       int n_periods, int samples_per_period, int workers, double tol)
{
    std::vector<SweepRecord> records(values.size());
    parallel_for(values.size(), workers, [&](std::size_t i) {
        ModelParams p = base;
        (axis == SweepAxis::G0 ? p.g0 : p.g1) = values[i];
        const auto eff = effective_params(p);
        SweepRecord& r = records[i];
        r.value = values[i];
        r.c_bar = time_average(p, n_periods, samples_per_period);
        r.c_minus = floquet_complexity(p, Branch::Minus);
        r.c_plus = floquet_complexity(p, Branch::Plus);
        r.label = phase_classify(eff, p.J, tol);
        r.validity = validity_check(p);
        r.n_periods = n_periods;
        r.d1 = kNaN;
        r.d2 = kNaN;
    });
    std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
    if (records.size() >= 3) {
        std::vector<double> x, y;
        for (const auto& r : records) {
            x.push_back(r.value);
            y.push_back(r.c_bar);
        }
        const auto d1 = finite_difference(x, y, 1);
        const auto d2 = finite_difference(x, y, 2);
        for (std::size_t i = 0; i < records.size(); ++i) {
            records[i].d1 = d1[i];
            records[i].d2 = d2[i];
        }
    }
    return records;
}

PhaseGrid phase_grid(const ModelParams& base, const std::vector<double>& g0_values,
                     const std::vector<double>& g1_values, double tol, int workers)
{
    PhaseGrid grid;
    grid.g0_values = g0_values;
    grid.g1_values = g1_values;
    grid.cells.resize(g0_values.size() * g1_values.size());

    std::vector<double> gammas(g1_values.size());
    for (std::size_t j = 0; j < g1_values.size(); ++j) {
        gammas[j] = anisotropy(base.ell, g1_values[j], base.omega);
    }
    parallel_for(g0_values.size(), workers, [&](std::size_t i) {
        for (std::size_t j = 0; j < g1_values.size(); ++j) {
            ModelParams p = base;
            p.g0 = g0_values[i];
            p.g1 = g1_values[j];
            const auto eff = bare_effective(p, gammas[j]);
            PhaseCell& cell = grid.cells[i * g1_values.size() + j];
            cell.g0 = p.g0;
            cell.g1 = p.g1;
            cell.dg0 = eff.dg0;
            cell.gamma = eff.gamma;
            cell.label = phase_classify(eff, p.J, tol);
            cell.valid = validity_check(p).valid;
        }
    });
    return grid;
}

CriticalLines detect_critical_lines(const PhaseGrid& grid)
{
    CriticalLines lines;
    const std::size_t n0 = grid.g0_values.size();
    const std::size_t n1 = grid.g1_values.size();
    if (n0 == 0 || n1 == 0) {
        return lines;
    }

    std::size_t row = 0;
    for (std::size_t i = 1; i < n0; ++i) {
        if (std::abs(grid.at(i, 0).dg0) < std::abs(grid.at(row, 0).dg0)) {
            row = i;
        }
    }
    for (std::size_t j = 1; j < n1; ++j) {
        const double a = grid.at(row, j - 1).gamma;
        const double b = grid.at(row, j).gamma;
        if ((a > 0.0 && b <= 0.0) || (a < 0.0 && b >= 0.0)) {
            if (b == 0.0 && j + 1 < n1) {
                continue;  // the next pair reports it
            }
            const double lo = grid.g1_values[j - 1];
            const double hi = grid.g1_values[j];
            lines.g1.push_back(a == 0.0 ? lo : 0.5 * (lo + hi));
        }
    }

    std::size_t column = 0;
    for (std::size_t j = 1; j < n1; ++j) {
        if (std::abs(grid.at(0, j).gamma) > std::abs(grid.at(0, column).gamma)) {
            column = j;
        }
    }
    auto is_pm = [](PhaseLabel l) { return l == PhaseLabel::PM; };
    for (std::size_t i = 1; i < n0; ++i) {
        const auto a = grid.at(i - 1, column).label;
        const auto b = grid.at(i, column).label;
        if (is_pm(a) != is_pm(b)) {
            lines.g0.push_back(0.5 * (grid.g0_values[i - 1] + grid.g0_values[i]));
        }
    }
    return lines;
}

OracleRun oracle_compare(const ModelParams& p, const std::vector<double>& times, double dt, int workers)
{
    const auto modes = brillouin_momenta(p.L, p.J);
    std::vector<std::vector<SpinorState>> states(modes.size());
    parallel_for(modes.size(), workers,
                 [&](std::size_t m) { states[m] = evolve_ode_series(modes[m], p, times, dt); });

    const ComplexityKernel kernel(p);
    OracleRun run;
    run.omega = p.omega;
    run.times = times;
    for (std::size_t i = 0; i < times.size(); ++i) {
        double c = 0.0;
        for (std::size_t m = 0; m < modes.size(); ++m) {
            const auto& s = states[m][i];
            c += std::asin(std::clamp(std::abs(s.u), 0.0, 1.0));
            run.max_norm_drift = std::max(run.max_norm_drift, std::abs(s.norm_squared() - 1.0));
        }
        const double a = kernel(times[i]);
        run.c_analytic.push_back(a);
        run.c_ode.push_back(c);
        run.max_deviation = std::max(run.max_deviation, std::abs(a - c));
    }
    return run;
}

CsvTable run_evolve(const RunConfig& cfg)
{
    validate_config(cfg);
    const ModelParams base = resolve_model(cfg, 1.0, 1000);
    const double t_max = cfg.t_max.value_or(20.0 / base.J);
    const auto times = linspace(0.0, t_max, cfg.t_steps);

    std::vector<ModelParams> series;
    std::vector<std::string> names;
    if (cfg.detunings.empty()) {
        series.push_back(base);
        names.emplace_back("C");
    } else {
        for (double d : cfg.detunings) {
            ModelParams p = base;
            p.g0 = p.resonant_field() + d * p.J;
            series.push_back(p);
            names.push_back("C[dg0=" + format_number(d) + "J]");
        }
    }

    std::vector<std::vector<double>> values(series.size());
    parallel_for(series.size(), cfg.workers,
                 [&](std::size_t s) { values[s] = complexity_series(series[s], times).values; });

    CsvTable table;
    table.meta.emplace_back("command", "evolve");
    add_model_meta(table, base);
    table.meta.emplace_back("t_max", format_number(t_max));
    table.meta.emplace_back("t_steps", std::to_string(cfg.t_steps));
    const double slope = early_slope(base);
    table.meta.emplace_back("gamma", format_number(anisotropy(base.ell, base.g1, base.omega)));
    table.meta.emplace_back("early_slope", format_number(slope));

    bool all_valid = true;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const auto v = validity_check(series[s]);
        all_valid = all_valid && v.valid;
        const std::string prefix = "series" + std::to_string(s) + ".";
        table.meta.emplace_back(prefix + "dg0", format_number(series[s].detuning()));
        table.meta.emplace_back(prefix + "phase", std::string(to_string(label_of(series[s], cfg.tol))));
        table.meta.emplace_back(prefix + "t_star", format_number(equilibration_time(series[s])));
        add_validity_meta(table, prefix, v);
    }

    table.columns = {"t", "slope_ref"};
    table.columns.insert(table.columns.end(), names.begin(), names.end());
    table.columns.emplace_back("valid");
    for (std::size_t i = 0; i < times.size(); ++i) {
        std::vector<std::string> row{format_number(times[i]), format_number(slope * times[i])};
        for (const auto& v : values) {
            row.push_back(format_number(v[i]));
        }
        row.emplace_back(all_valid ? "1" : "0");
        table.rows.push_back(std::move(row));
    }
    return table;
}

CsvTable run_average(const RunConfig& cfg)
{
    validate_config(cfg);
    const ModelParams base = resolve_model(cfg, std::numbers::pi, 1000);
    const SweepAxis axis = parse_axis(cfg.sweep_axis);

    double lo = 0.0;
    double hi = 0.0;
    if (axis == SweepAxis::G0) {
        lo = base.resonant_field() - 2.0 * base.J;
        hi = base.resonant_field() + 2.0 * base.J;
    } else {
        const double g1c = first_zero_field(base);
        lo = g1c - 0.02 * base.omega;
        hi = g1c + 0.02 * base.omega;
    }
    lo = cfg.sweep_min.value_or(lo);
    hi = cfg.sweep_max.value_or(hi);
    if (lo > hi) {
        throw std::invalid_argument("sweep range is empty");
    }
    const auto values = linspace(lo, hi, cfg.sweep_steps);
    const auto records = average_sweep(base, axis, values, cfg.periods, cfg.samples_per_period, cfg.workers, cfg.tol);

    CsvTable table;
    table.meta.emplace_back("command", "average");
    add_model_meta(table, base);
    table.meta.emplace_back("sweep_axis", cfg.sweep_axis);
    table.meta.emplace_back("sweep_min", format_number(lo));
    table.meta.emplace_back("sweep_max", format_number(hi));
    table.meta.emplace_back("sweep_steps", std::to_string(cfg.sweep_steps));
    table.meta.emplace_back("periods", std::to_string(cfg.periods));
    table.meta.emplace_back("samples_per_period", std::to_string(cfg.samples_per_period));
    table.meta.emplace_back("tol", format_number(cfg.tol));

    table.columns = {cfg.sweep_axis, "c_bar", "c_minus", "c_plus", "d1", "d2", "phase",
                     "valid", "detuning_ratio", "rabi_ratio", "n_periods"};
    for (const auto& r : records) {
        table.rows.push_back({format_number(r.value), format_number(r.c_bar), format_number(r.c_minus),
                              format_number(r.c_plus), format_number(r.d1), format_number(r.d2),
                              std::string(to_string(r.label)), r.validity.valid ? "1" : "0",
                              format_number(r.validity.detuning_ratio), format_number(r.validity.rabi_ratio),
                              std::to_string(r.n_periods)});
    }
    return table;
}

CsvTable run_phase_diagram(const RunConfig& cfg)
{
    validate_config(cfg);
    const ModelParams base = resolve_model(cfg, 1.0, 1000);
    const double g0_lo = cfg.g0_min.value_or(base.resonant_field() - 3.0 * base.J);
    const double g0_hi = cfg.g0_max.value_or(base.resonant_field() + 3.0 * base.J);
    const double g1_lo = cfg.g1_min.value_or(0.0);
    const double g1_hi = cfg.g1_max.value_or(4.0 * base.omega);
    if (g0_lo > g0_hi || g1_lo > g1_hi) {
        throw std::invalid_argument("grid range is empty");
    }
    const auto grid = phase_grid(base, linspace(g0_lo, g0_hi, cfg.g0_steps), linspace(g1_lo, g1_hi, cfg.g1_steps),
                                 cfg.tol, cfg.workers);
    const auto lines = detect_critical_lines(grid);

    std::vector<double> expected_g1;
    for (int i = 1;; ++i) {
        const double g1 = base.omega * specfun::bessel_zero(base.ell, i) / 4.0;
        if (g1 > g1_hi) {
            break;
        }
        if (g1 >= g1_lo) {
            expected_g1.push_back(g1);
        }
    }
    std::vector<double> expected_g0;
    for (double g : {base.resonant_field() - base.J, base.resonant_field() + base.J}) {
        if (g >= g0_lo && g <= g0_hi) {
            expected_g0.push_back(g);
        }
    }

    CsvTable table;
    table.meta.emplace_back("command", "phase-diagram");
    add_model_meta(table, base);
    table.meta.emplace_back("g0_range", format_number(g0_lo) + ";" + format_number(g0_hi));
    table.meta.emplace_back("g0_steps", std::to_string(cfg.g0_steps));
    table.meta.emplace_back("g1_range", format_number(g1_lo) + ";" + format_number(g1_hi));
    table.meta.emplace_back("g1_steps", std::to_string(cfg.g1_steps));
    table.meta.emplace_back("tol", format_number(cfg.tol));
    table.meta.emplace_back("detected_g1_lines", join_numbers(lines.g1));
    table.meta.emplace_back("expected_g1_lines", join_numbers(expected_g1));
    table.meta.emplace_back("detected_g0_lines", join_numbers(lines.g0));
    table.meta.emplace_back("expected_g0_lines", join_numbers(expected_g0));

    table.columns = {"g0", "g1", "dg0", "gamma", "phase", "valid"};
    for (const auto& c : grid.cells) {
        table.rows.push_back({format_number(c.g0), format_number(c.g1), format_number(c.dg0), format_number(c.gamma),
                              std::string(to_string(c.label)), c.valid ? "1" : "0"});
    }
    return table;
}

CsvTable run_oracle(const RunConfig& cfg)
{
    validate_config(cfg);
    const ModelParams base = resolve_model(cfg, 1.0, 8);
    if (base.L > 32 && !cfg.allow_large_L) {
        throw std::invalid_argument("oracle: L > 32 needs allow_large_L");
    }
    const double detuning = base.detuning();
    const double drive_ratio = base.g1 / base.omega;
    const double t_max = cfg.t_max.value_or(20.0 / base.J);
    const auto times = linspace(0.0, t_max, cfg.t_steps);

    std::vector<ModelParams> ladder;
    for (double r : cfg.omega_ratios) {
        ModelParams p = base;
        p.omega = r * base.J;
        p.g1 = drive_ratio * p.omega;
        p.g0 = p.resonant_field() + detuning;
        ladder.push_back(p);
    }
    std::vector<OracleRun> runs(ladder.size());
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const double dt = cfg.dt.value_or(default_ode_step(ladder[i]));
        runs[i] = oracle_compare(ladder[i], times, dt, cfg.workers);
    }

    CsvTable table;
    table.meta.emplace_back("command", "oracle");
    add_model_meta(table, base);
    table.meta.emplace_back("dg0", format_number(detuning));
    table.meta.emplace_back("t_max", format_number(t_max));
    table.meta.emplace_back("t_steps", std::to_string(cfg.t_steps));
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const std::string prefix = "omega_over_J=" + format_number(cfg.omega_ratios[i]) + ".";
        table.meta.emplace_back(prefix + "dt", format_number(cfg.dt.value_or(default_ode_step(ladder[i]))));
        table.meta.emplace_back(prefix + "max_deviation", format_number(runs[i].max_deviation));
        table.meta.emplace_back(prefix + "max_norm_drift", format_number(runs[i].max_norm_drift));
        add_validity_meta(table, prefix, validity_check(ladder[i]));
    }

    table.columns = {"omega_over_J", "t", "c_analytic", "c_ode", "abs_diff", "valid"};
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        const std::string valid = validity_check(ladder[i]).valid ? "1" : "0";
        for (std::size_t k = 0; k < times.size(); ++k) {
            table.rows.push_back({format_number(cfg.omega_ratios[i]), format_number(times[k]),
                                  format_number(runs[i].c_analytic[k]), format_number(runs[i].c_ode[k]),
                                  format_number(std::abs(runs[i].c_analytic[k] - runs[i].c_ode[k])), valid});
        }
    }
    return table;
}

}  // namespace fcx
