#include "fcx/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fcx {

namespace {

constexpr complex kI{0.0, 1.0};

// Right-hand side -i H_k(t) Psi.
struct BdgRhs {
    double g0;
    double g1;
    double omega;
    double omega_k;
    double delta_k;

    void operator()(double t, const complex& u, const complex& v, complex& du, complex& dv) const
    {
        const double z = 2.0 * (g0 + g1 * std::cos(omega * t)) - omega_k;
        const complex hu = (z - omega_k) * u + delta_k * v;
        const complex hv = delta_k * u + (-z - omega_k) * v;
        du = -kI * hu;
        dv = -kI * hv;
    }
};

void rk4_step(const BdgRhs& f, double t, double h, SpinorState& s)
{
    complex k1u, k1v, k2u, k2v, k3u, k3v, k4u, k4v;
    f(t, s.u, s.v, k1u, k1v);
    f(t + 0.5 * h, s.u + 0.5 * h * k1u, s.v + 0.5 * h * k1v, k2u, k2v);
    f(t + 0.5 * h, s.u + 0.5 * h * k2u, s.v + 0.5 * h * k2v, k3u, k3v);
    f(t + h, s.u + h * k3u, s.v + h * k3v, k4u, k4v);
    s.u += (h / 6.0) * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    s.v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
}

void advance(const BdgRhs& f, double t0, double t1, double dt, SpinorState& s)
{
    const double span = t1 - t0;
    if (span <= 0.0) {
        return;
    }
    const auto steps = static_cast<long long>(std::ceil(span / dt - 1e-9));
    const double h = span / static_cast<double>(std::max(steps, 1LL));
    for (long long i = 0; i < std::max(steps, 1LL); ++i) {
        rk4_step(f, t0 + static_cast<double>(i) * h, h, s);
    }
}

BdgRhs make_rhs(const MomentumMode& mode, const ModelParams& p)
{
    return {p.g0, p.g1, p.omega, mode.omega_k, mode.delta_k};
}

}  // namespace

PolarForm polar_decompose(const SpinorState& s)
{
    if (std::abs(s.norm_squared() - 1.0) > 1e-6) {
        throw std::domain_error("polar_decompose: spinor is not normalised");
    }
    const double magnitude = std::abs(s.u);
    PolarForm p;
    p.theta = std::asin(std::clamp(magnitude, 0.0, 1.0));
    if (magnitude >= 1e-14) {
        double beta = std::arg(s.u) - std::arg(s.v);
        if (beta > std::numbers::pi) {
            beta -= 2.0 * std::numbers::pi;
        } else if (beta <= -std::numbers::pi) {
            beta += 2.0 * std::numbers::pi;
        }
        p.beta = beta;
    }
    return p;
}

DriveFrame DriveFrame::from(const ModelParams& p)
{
    return {p.resonant_field(), p.g1, p.omega};
}

double DriveFrame::alpha(double t) const
{
    return 4.0 * g0_res * t + (4.0 * g1 / omega) * std::sin(omega * t);
}

SpinorState evolve_analytic(const MomentumMode& mode, const EffectiveParams& eff, const DriveFrame& frame, double t)
{
    const double theta = bogoliubov_angle(mode, eff);
    const auto spec = floquet_spectrum(mode, eff);
    const double signed_eps = (2.0 * eff.dg0 - mode.omega_k >= 0.0) ? spec.eps : -spec.eps;
    const double s = std::sin(theta);
    const double c = std::cos(theta);
    const complex osc = std::polar(1.0, -2.0 * signed_eps * t);
    const complex frame_phase = std::polar(1.0, -frame.alpha(t));
    return {frame_phase * (1.0 - osc) * s * c, c * c + osc * s * s};
}

SpinorState floquet_mode(const MomentumMode& mode, const EffectiveParams& eff, const DriveFrame& frame, double t,
                         Branch branch)
{
    const double theta = bogoliubov_angle(mode, eff);
    const complex frame_phase = std::polar(1.0, -frame.alpha(t));
    if (branch == Branch::Minus) {
        return {frame_phase * std::sin(theta), std::cos(theta)};
    }
    return {frame_phase * std::cos(theta), -std::sin(theta)};
}

double floquet_quasienergy(const MomentumMode& mode, const EffectiveParams& eff, Branch branch)
{
    const auto spec = floquet_spectrum(mode, eff);
    const bool aligned = 2.0 * eff.dg0 - mode.omega_k >= 0.0;
    const bool upper = (branch == Branch::Plus) == aligned;
    return upper ? spec.eps_plus : spec.eps_minus;
}

double default_ode_step(const ModelParams& p)
{
    const double field = 2.0 * (std::abs(p.g0) + std::abs(p.g1)) + 2.0 * p.J;
    const double bound = std::hypot(field, 2.0 * p.J) + 2.0 * p.J;
    return std::min(p.period() / 200.0, 0.005 / bound);
}

SpinorState evolve_ode(const MomentumMode& mode, const ModelParams& p, double t_final, double dt)
{
    if (!(dt > 0.0)) {
        throw std::domain_error("evolve_ode: dt must be positive");
    }
    if (t_final < 0.0) {
        throw std::domain_error("evolve_ode: t_final must be non-negative");
    }
    SpinorState s;
    advance(make_rhs(mode, p), 0.0, t_final, dt, s);
    return s;
}

std::vector<SpinorState> evolve_ode_series(const MomentumMode& mode, const ModelParams& p,
                                           std::span<const double> times, double dt)
{
    if (!(dt > 0.0)) {
        throw std::domain_error("evolve_ode_series: dt must be positive");
    }
    if (!std::is_sorted(times.begin(), times.end()) || (!times.empty() && times.front() < 0.0)) {
        throw std::domain_error("evolve_ode_series: times must be ascending and non-negative");
    }
    const auto rhs = make_rhs(mode, p);
    std::vector<SpinorState> out;
    out.reserve(times.size());
    SpinorState s;
    double t = 0.0;
    for (double target : times) {
        advance(rhs, t, target, dt, s);
        t = std::max(t, target);
        out.push_back(s);
    }
    return out;
}

}  // namespace fcx
