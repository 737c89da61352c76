#include "fcx/complexity.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace fcx {

namespace {

constexpr double kSmallPhase = 1e-4;
constexpr std::size_t kChunk = 4096;

// sin(eps t) / eps, with the series branch covering the closing gap.
double sinc_time(double eps, double t)
{
    const double x = eps * t;
    if (x < kSmallPhase) {
        return t * (1.0 - x * x / 6.0);
    }
    return std::sin(x) / eps;
}

constexpr int kGaussOrder = 12;

struct GaussRule {
    std::array<double, kGaussOrder> nodes{};
    std::array<double, kGaussOrder> weights{};
};

// Newton iteration on P_n from the Chebyshev guesses.
GaussRule make_gauss_rule()
{
    GaussRule rule;
    constexpr int n = kGaussOrder;
    for (int i = 0; i < n; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        rule.nodes[i] = x;
        rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

const GaussRule& gauss_rule()
{
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

template <class F>
double integrate_panel(F&& f, double a, double b)
{
    const auto& rule = gauss_rule();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kGaussOrder; ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return half * sum;
}

}  // namespace

ComplexityKernel::ComplexityKernel(const EffectiveParams& eff)
{
    coupling_.reserve(eff.modes.size());
    eps_.reserve(eff.modes.size());
    for (std::size_t i = 0; i < eff.modes.size(); ++i) {
        coupling_.push_back(eff.modes[i].delta_k * eff.gamma);
        eps_.push_back(eff.spectrum[i].eps);
    }
}

ComplexityKernel::ComplexityKernel(const ModelParams& p) : ComplexityKernel(effective_params(p)) {}

double ComplexityKernel::operator()(double t) const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < coupling_.size(); ++i) {
        const double ratio = std::clamp(coupling_[i] * sinc_time(eps_[i], t), -1.0, 1.0);
        sum += std::abs(std::asin(ratio));
    }
    return sum;
}

double complexity_t(const ModelParams& p, double t)
{
    return ComplexityKernel(p)(t);
}

ComplexitySeries complexity_series(const ModelParams& p, std::span<const double> times)
{
    const ComplexityKernel kernel(p);
    ComplexitySeries series;
    series.params = p;
    series.times.assign(times.begin(), times.end());
    series.values.reserve(times.size());
    for (double t : times) {
        series.values.push_back(kernel(t));
    }
    return series;
}

double early_slope(const ModelParams& p)
{
    p.validate();
    const double gamma = anisotropy(p.ell, p.g1, p.omega);
    return 2.0 * p.J * std::abs(gamma) / std::sin(std::numbers::pi / p.L);
}

double equilibration_time(const ModelParams& p)
{
    return 1.0 / (2.0 * std::abs(p.detuning()) + 2.0 * p.J);
}

double time_average(const ModelParams& p, int n_periods, int samples_per_period, int workers)
{
    if (n_periods < 1) {
        throw std::domain_error("time_average: n_periods must be >= 1");
    }
    if (samples_per_period < 4) {
        throw std::domain_error("time_average: samples_per_period must be >= 4");
    }
    const ComplexityKernel kernel(p);
    const std::size_t intervals = static_cast<std::size_t>(n_periods) * static_cast<std::size_t>(samples_per_period);
    const double h = p.period() / samples_per_period;
    const std::size_t samples = intervals + 1;
    const std::size_t chunks = (samples + kChunk - 1) / kChunk;

    std::vector<double> partial(chunks, 0.0);
    auto run_chunk = [&](std::size_t c) {
        const std::size_t begin = c * kChunk;
        const std::size_t end = std::min(samples, begin + kChunk);
        double sum = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            const double w = (i == 0 || i == intervals) ? 0.5 : 1.0;
            sum += w * kernel(static_cast<double>(i) * h);
        }
        partial[c] = sum;
    };

    const auto n_workers = static_cast<std::size_t>(std::clamp<int>(workers, 1, static_cast<int>(chunks)));
    if (n_workers == 1) {
        for (std::size_t c = 0; c < chunks; ++c) {
            run_chunk(c);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for (std::size_t w = 0; w < n_workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t c = next++; c < chunks; c = next++) {
                    run_chunk(c);
                }
            });
        }
    }

    double total = 0.0;
    for (double s : partial) {
        total += s;
    }
    return total / static_cast<double>(intervals);
}

double floquet_complexity(const ModelParams& p, Branch branch)
{
    const auto eff = effective_params(p);
    double sum = 0.0;
    for (const auto& s : eff.spectrum) {
        sum += (branch == Branch::Minus) ? std::abs(s.theta) : std::abs(s.theta - std::numbers::pi / 2.0);
    }
    return sum;
}

std::vector<double> finite_difference(std::span<const double> x, std::span<const double> y, int order)
{
    if (order != 1 && order != 2) {
        throw std::domain_error("finite_difference: order must be 1 or 2");
    }
    if (x.size() != y.size() || x.size() < 3) {
        throw std::domain_error("finite_difference: need >= 3 points with matching sizes");
    }
    const std::size_t n = x.size();
    const double h = (x[n - 1] - x[0]) / static_cast<double>(n - 1);
    if (!(std::abs(h) > 0.0)) {
        throw std::domain_error("finite_difference: degenerate grid");
    }
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs((x[i] - x[i - 1]) - h) > 1e-6 * std::abs(h)) {
            throw std::domain_error("finite_difference: grid is not uniform");
        }
    }

    std::vector<double> d(n);
    if (order == 1) {
        d[0] = (-3.0 * y[0] + 4.0 * y[1] - y[2]) / (2.0 * h);
        d[n - 1] = (3.0 * y[n - 1] - 4.0 * y[n - 2] + y[n - 3]) / (2.0 * h);
        for (std::size_t i = 1; i + 1 < n; ++i) {
            d[i] = (y[i + 1] - y[i - 1]) / (2.0 * h);
        }
        return d;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        d[i] = (y[i + 1] - 2.0 * y[i] + y[i - 1]) / (h * h);
    }
    if (n >= 4) {
        d[0] = (2.0 * y[0] - 5.0 * y[1] + 4.0 * y[2] - y[3]) / (h * h);
        d[n - 1] = (2.0 * y[n - 1] - 5.0 * y[n - 2] + 4.0 * y[n - 3] - y[n - 4]) / (h * h);
    } else {
        d[0] = d[1];
        d[n - 1] = d[1];
    }
    return d;
}

std::vector<std::pair<double, double>> sweep_derivatives(std::span<const AverageRecord> records, int order)
{
    std::vector<double> x;
    std::vector<double> y;
    x.reserve(records.size());
    y.reserve(records.size());
    for (const auto& r : records) {
        x.push_back(r.param_value);
        y.push_back(r.c_bar);
    }
    const auto d = finite_difference(x, y, order);
    std::vector<std::pair<double, double>> out;
    out.reserve(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        out.emplace_back(x[i], d[i]);
    }
    return out;
}

double ising_ground_complexity(double g0, double J, int n_quad)
{
    if (!(J > 0.0)) {
        throw std::domain_error("ising_ground_complexity: J must be positive");
    }
    if (n_quad < 64) {
        throw std::domain_error("ising_ground_complexity: n_quad must be >= 64");
    }
    const double ratio = g0 / J;
    auto eta = [ratio](double k) { return std::abs(0.5 * std::atan2(std::sin(k), ratio - std::cos(k))); };

    // Geometric panels from pi/2 down to pi/2 * 1e-14 on each half; the
    // gap closes at k = 0 (g0 = J) or k = pi (g0 = -J).
    const int per_half = n_quad / 2;
    const double half = std::numbers::pi / 2.0;
    const double ratio_step = std::pow(1e-14, 1.0 / (per_half - 1));
    double sum = 0.0;
    double outer = half;
    for (int i = 0; i < per_half; ++i) {
        const double inner = (i + 1 == per_half) ? 0.0 : outer * ratio_step;
        sum += integrate_panel(eta, inner, outer);
        sum += integrate_panel(eta, std::numbers::pi - outer, std::numbers::pi - inner);
        outer = inner;
    }
    return sum / (2.0 * std::numbers::pi);
}

}  // namespace fcx
