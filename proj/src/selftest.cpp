#include "fcx/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <random>

#include "fcx/complexity.hpp"
#include "fcx/dynamics.hpp"
#include "fcx/model.hpp"
#include "fcx/scan.hpp"
#include "fcx/specfun.hpp"

namespace fcx {

namespace {

constexpr double kPi = std::numbers::pi;

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

    ModelParams params(int max_L)
    {
        ModelParams p;
        p.omega = uniform(0.5, 5.0);
        p.J = uniform(0.002, 0.05) * p.omega;
        p.ell = integer(0, 4);
        p.g1 = uniform(0.0, 3.0) * p.omega;
        p.g0 = p.resonant_field() + uniform(-3.0, 3.0) * p.J;
        p.L = 2 * integer(1, max_L / 2);
        return p;
    }

private:
    std::mt19937_64 rng_;
};

// (1 / 2 pi) sum over M equispaced nodes of cos(n tau - z sin tau): exact up
// to aliasing terms J_{n +- M}, negligible once M > n + z + 40.
double bessel_by_quadrature(int n, double z)
{
    const int m = 2 * (static_cast<int>(std::abs(z)) + std::abs(n)) + 80;
    double sum = 0.0;
    for (int i = 0; i < m; ++i) {
        const double tau = 2.0 * kPi * i / m;
        sum += std::cos(n * tau - z * std::sin(tau));
    }
    return sum / m;
}

struct Collector {
    std::vector<CheckResult>& out;
    std::string suite;

    void upper_bound(const std::string& name, double observed, double threshold, std::size_t samples)
    {
        out.push_back({suite, name, observed <= threshold, observed, threshold, samples});
    }
};

void bessel_suite(std::vector<CheckResult>& out, Sampler& rng)
{
    Collector c{out, "bessel"};

    double residual = 0.0;
    std::size_t n = 0;
    for (int ell = 0; ell <= 10; ++ell) {
        for (int i = 1; i <= 20; ++i, ++n) {
            residual = std::max(residual, std::abs(specfun::bessel_j(ell, specfun::bessel_zero(ell, i))));
        }
    }
    c.upper_bound("zero residual |J_l(z_i)|", residual, 1e-11, n);

    double spacing = 0.0;
    for (int i = 10; i <= 20; ++i) {
        spacing = std::max(spacing, std::abs(specfun::bessel_zero(2, i + 1) - specfun::bessel_zero(2, i) - kPi));
    }
    c.upper_bound("zero spacing of J_2 -> pi (i = 10..20)", spacing, 0.01, 11);

    double violations = 0.0;
    n = 0;
    for (int ell = 0; ell < 10; ++ell) {
        for (int i = 1; i <= 15; ++i, ++n) {
            const double a = specfun::bessel_zero(ell, i);
            const double b = specfun::bessel_zero(ell + 1, i);
            const double next = specfun::bessel_zero(ell, i + 1);
            if (!(a < b && b < next)) {
                violations += 1.0;
            }
        }
    }
    c.upper_bound("zero interlacing violations", violations, 0.0, n);

    double parity = 0.0;
    double quadrature = 0.0;
    constexpr std::size_t kSamples = 400;
    for (std::size_t s = 0; s < kSamples; ++s) {
        const int ell = rng.integer(0, 50);
        const double z = rng.uniform(-200.0, 200.0);
        const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
        parity = std::max(parity, std::abs(specfun::bessel_j(-ell, z) - sign * specfun::bessel_j(ell, z)));
        quadrature = std::max(quadrature, std::abs(specfun::bessel_j(ell, z) - bessel_by_quadrature(ell, z)));
    }
    c.upper_bound("parity J_{-l} = (-1)^l J_l", parity, 1e-15, kSamples);
    c.upper_bound("agreement with trapezoid integral", quadrature, 1e-12, kSamples);
}

void model_suite(std::vector<CheckResult>& out, Sampler& rng)
{
    Collector c{out, "model"};

    double dispersion = 0.0;
    for (int L : {2, 4, 10, 64, 1000, 4096}) {
        const double J = 0.37;
        double sum = 0.0;
        for (const auto& m : brillouin_momenta(L, J)) {
            sum += m.delta_k * m.delta_k + m.omega_k * m.omega_k;
        }
        const double expected = 4.0 * J * J * (L / 2);
        dispersion = std::max(dispersion, std::abs(sum - expected) / expected);
    }
    c.upper_bound("sum_k (delta_k^2 + omega_k^2) = 2 J^2 L", dispersion, 1e-12, 6);

    double amplitudes = 0.0;
    double spectrum = 0.0;
    constexpr std::size_t kSamples = 200;
    for (std::size_t s = 0; s < kSamples; ++s) {
        const auto eff = effective_params(rng.params(200));
        for (std::size_t i = 0; i < eff.modes.size(); ++i) {
            const auto& sp = eff.spectrum[i];
            const auto& m = eff.modes[i];
            amplitudes = std::max(amplitudes, std::abs(sp.a_plus * sp.a_plus + sp.a_minus * sp.a_minus - 1.0));
            const double a = 2.0 * eff.dg0 - m.omega_k;
            const double b = m.delta_k * eff.gamma;
            const double scale = std::max(a * a + b * b, 1e-300);
            spectrum = std::max(spectrum, std::abs(sp.eps * sp.eps - a * a - b * b) / scale);
        }
    }
    c.upper_bound("A+^2 + A-^2 = 1", amplitudes, 1e-14, kSamples);
    c.upper_bound("eps^2 identity (relative)", spectrum, 1e-12, kSamples);
}

void dynamics_suite(std::vector<CheckResult>& out, Sampler& rng)
{
    Collector c{out, "dynamics"};

    double norm = 0.0;
    double envelope = 0.0;
    double frame = 0.0;
    double reconstruction = 0.0;
    constexpr std::size_t kSamples = 10000;
    for (std::size_t s = 0; s < kSamples; ++s) {
        const auto p = rng.params(64);
        const auto eff = effective_params(p);
        const auto drive = DriveFrame::from(p);
        const std::size_t i = static_cast<std::size_t>(rng.integer(0, static_cast<int>(eff.modes.size()) - 1));
        const auto& mode = eff.modes[i];
        const double t = rng.uniform(0.0, 50.0 / p.J);

        const auto psi = evolve_analytic(mode, eff, drive, t);
        norm = std::max(norm, std::abs(psi.norm_squared() - 1.0));

        const double eps = eff.spectrum[i].eps;
        if (eps > 0.0) {
            const double t0 = rng.uniform(0.0, 5.0 / eps);
            const double a = std::abs(evolve_analytic(mode, eff, drive, t0).u);
            const double b = std::abs(evolve_analytic(mode, eff, drive, t0 + kPi / eps).u);
            envelope = std::max(envelope, std::abs(a - b));
        }

        const DriveFrame still{0.0, 0.0, p.omega};
        frame = std::max(frame, std::abs(polar_decompose(psi).theta -
                                         polar_decompose(evolve_analytic(mode, eff, still, t)).theta));

        const auto plus = floquet_mode(mode, eff, drive, t, Branch::Plus);
        const auto minus = floquet_mode(mode, eff, drive, t, Branch::Minus);
        const complex ep = std::polar(1.0, -floquet_quasienergy(mode, eff, Branch::Plus) * t);
        const complex em = std::polar(1.0, -floquet_quasienergy(mode, eff, Branch::Minus) * t);
        const double ap = eff.spectrum[i].a_plus;
        const double am = eff.spectrum[i].a_minus;
        const complex ru = ap * ep * plus.u + am * em * minus.u;
        const complex rv = ap * ep * plus.v + am * em * minus.v;
        const complex overlap = std::conj(ru) * psi.u + std::conj(rv) * psi.v;
        const complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : complex{1.0, 0.0};
        reconstruction = std::max(reconstruction, std::hypot(std::abs(psi.u - phase * ru), std::abs(psi.v - phase * rv)));
    }
    c.upper_bound("|u|^2 + |v|^2 = 1", norm, 1e-12, kSamples);
    c.upper_bound("|u| periodic with period pi/eps", envelope, 1e-12, kSamples);
    c.upper_bound("Theta independent of rotating-frame phase", frame, 1e-12, kSamples);
    c.upper_bound("Floquet-mode reconstruction", reconstruction, 1e-10, kSamples);
}

void complexity_suite(std::vector<CheckResult>& out, Sampler& rng, bool inject_fault)
{
    Collector c{out, "complexity"};

    double symmetry = 0.0;
    double state = 0.0;
    double bounds = 0.0;
    constexpr std::size_t kSamples = 1000;
    for (std::size_t s = 0; s < kSamples; ++s) {
        const auto p = rng.params(200);
        const auto eff = effective_params(p);
        const double t = rng.uniform(0.0, 50.0 / p.J);
        const ComplexityKernel kernel(eff);
        const double value = kernel(t);

        const auto flipped = with_anisotropy(eff, -eff.gamma);
        double mirrored = ComplexityKernel(flipped)(t);
        if (inject_fault && flipped.gamma < 0.0) {
            mirrored = 0.0;
            for (std::size_t i = 0; i < flipped.modes.size(); ++i) {
                const double eps = flipped.spectrum[i].eps;
                const double ratio = flipped.modes[i].delta_k * flipped.gamma *
                                     (eps > 0.0 ? std::sin(eps * t) / eps : t);
                mirrored += std::asin(std::clamp(ratio, -1.0, 1.0));
            }
        }
        symmetry = std::max(symmetry, std::abs(value - mirrored) / std::max(1.0, value));

        const auto drive = DriveFrame::from(p);
        double from_states = 0.0;
        for (const auto& mode : eff.modes) {
            from_states += polar_decompose(evolve_analytic(mode, eff, drive, t)).theta;
        }
        state = std::max(state, std::abs(value - from_states) / std::max(1.0, value));

        const double cap = 0.5 * p.L * kPi / 2.0;
        if (value < 0.0 || value > cap) {
            bounds += 1.0;
        }
    }
    c.upper_bound("C(t) symmetric under gamma -> -gamma", symmetry, 1e-12, kSamples);
    c.upper_bound("C(t) = sum_k arcsin|u_k(t)|", state, 1e-12, kSamples);
    c.upper_bound("0 <= C(t) <= L pi / 4 violations", bounds, 0.0, kSamples);

    double sum_rule = 0.0;
    constexpr std::size_t kRuleSamples = 300;
    std::size_t used = 0;
    for (std::size_t s = 0; s < kRuleSamples; ++s) {
        const auto p = rng.params(200);
        const auto eff = effective_params(p);
        const bool in_range = std::all_of(eff.spectrum.begin(), eff.spectrum.end(), [](const ModeSpectrum& m) {
            return m.theta >= 0.0 && m.theta <= kPi / 2.0;
        });
        if (!in_range) {
            continue;
        }
        ++used;
        const double expected = p.L * kPi / 4.0;
        const double total = floquet_complexity(p, Branch::Plus) + floquet_complexity(p, Branch::Minus);
        sum_rule = std::max(sum_rule, std::abs(total - expected) / expected);
    }
    c.upper_bound("C+ + C- = L pi / 4 for theta in [0, pi/2]", sum_rule, 1e-12, used);
}

}  // namespace

bool SelftestReport::passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SelftestReport::print(std::ostream& os) const
{
    std::map<std::string, std::pair<int, int>> per_suite;
    for (const auto& c : checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.suite << ": " << c.name << "  observed=" << format_number(c.observed)
           << " limit=" << format_number(c.threshold) << " samples=" << c.samples << '\n';
        auto& [pass, total] = per_suite[c.suite];
        pass += c.passed ? 1 : 0;
        ++total;
    }
    for (const auto& [suite, counts] : per_suite) {
        os << "suite " << suite << ": " << counts.first << "/" << counts.second << " passed\n";
    }
    os << (passed() ? "selftest: all checks passed\n" : "selftest: FAILED\n");
}

SelftestReport run_selftest(const SelftestOptions& options)
{
    SelftestReport report;
    Sampler rng(options.seed);
    bessel_suite(report.checks, rng);
    model_suite(report.checks, rng);
    dynamics_suite(report.checks, rng);
    complexity_suite(report.checks, rng, options.inject_gamma_fault);
    return report;
}

}  // namespace fcx
