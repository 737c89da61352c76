#include "fcx/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fcx/specfun.hpp"

namespace fcx {

namespace {

constexpr double kValidityThreshold = 0.1;

double quarter_angle(double numerator, double denominator)
{
    if (denominator == 0.0) {
        if (numerator == 0.0) {
            return 0.0;
        }
        return std::copysign(std::numbers::pi / 4.0, numerator);
    }
    return 0.5 * std::atan(numerator / denominator);
}

}  // namespace

void ModelParams::validate() const
{
    if (!(J > 0.0) || !std::isfinite(J)) {
        throw std::domain_error("J must be positive and finite");
    }
    if (!(omega > 0.0) || !std::isfinite(omega)) {
        throw std::domain_error("omega must be positive and finite");
    }
    if (!(g1 >= 0.0) || !std::isfinite(g1)) {
        throw std::domain_error("g1 must be non-negative and finite");
    }
    if (!std::isfinite(g0)) {
        throw std::domain_error("g0 must be finite");
    }
    if (L < 2 || L % 2 != 0) {
        throw std::domain_error("L must be even and >= 2");
    }
    if (ell < 0) {
        throw std::domain_error("ell must be >= 0");
    }
}

double ModelParams::resonant_field() const { return ell * omega / 4.0; }

double ModelParams::detuning() const { return g0 - resonant_field(); }

double ModelParams::period() const { return 2.0 * std::numbers::pi / omega; }

std::vector<MomentumMode> brillouin_momenta(int L, double J)
{
    if (L < 2 || L % 2 != 0) {
        throw std::domain_error("brillouin_momenta: L must be even and >= 2");
    }
    std::vector<MomentumMode> modes;
    modes.reserve(static_cast<std::size_t>(L / 2));
    for (int j = 1; j <= L / 2; ++j) {
        const double k = (2.0 * j - 1.0) * std::numbers::pi / L;
        modes.push_back({k, 2.0 * J * std::cos(k), 2.0 * J * std::sin(k)});
    }
    return modes;
}

double anisotropy(int ell, double g1, double omega)
{
    const double sign = (ell % 2 == 0) ? 1.0 : -1.0;
    return sign * specfun::bessel_j(ell, 4.0 * g1 / omega);
}

double bogoliubov_angle(const MomentumMode& mode, const EffectiveParams& eff)
{
    return quarter_angle(mode.delta_k * eff.gamma, 2.0 * eff.dg0 - mode.omega_k);
}

FloquetSpectrum floquet_spectrum(const MomentumMode& mode, const EffectiveParams& eff)
{
    const double eps = std::hypot(2.0 * eff.dg0 - mode.omega_k, mode.delta_k * eff.gamma);
    const double shift = eff.ell * eff.omega / 2.0;
    return {eps, -mode.omega_k + eps + shift, -mode.omega_k - eps + shift};
}

EffectiveParams effective_params(const ModelParams& p)
{
    p.validate();
    EffectiveParams eff;
    eff.ell = p.ell;
    eff.omega = p.omega;
    eff.J = p.J;
    eff.dg0 = p.detuning();
    eff.modes = brillouin_momenta(p.L, p.J);
    return with_anisotropy(eff, anisotropy(p.ell, p.g1, p.omega));
}

EffectiveParams with_anisotropy(const EffectiveParams& source, double gamma)
{
    EffectiveParams eff = source;
    eff.gamma = gamma;
    eff.omega_eff = eff.J * std::abs(gamma);
    eff.j_plus = 0.5 * eff.J * (1.0 + gamma);
    eff.j_minus = 0.5 * eff.J * (1.0 - gamma);
    eff.spectrum.clear();
    eff.spectrum.reserve(eff.modes.size());
    for (const auto& mode : eff.modes) {
        ModeSpectrum s;
        s.theta = bogoliubov_angle(mode, eff);
        const auto fs = floquet_spectrum(mode, eff);
        s.eps = fs.eps;
        s.eps_plus = fs.eps_plus;
        s.eps_minus = fs.eps_minus;
        s.a_plus = -std::sin(s.theta);
        s.a_minus = std::cos(s.theta);
        s.orientation = (2.0 * eff.dg0 - mode.omega_k >= 0.0) ? 1 : -1;
        eff.spectrum.push_back(s);
    }
    return eff;
}

std::string_view to_string(PhaseLabel label)
{
    switch (label) {
    case PhaseLabel::PM:
        return "PM";
    case PhaseLabel::FMZ:
        return "FMZ";
    case PhaseLabel::FMY:
        return "FMY";
    case PhaseLabel::IsingCritical:
        return "ISING_CRITICAL";
    case PhaseLabel::AnisotropicCritical:
        return "ANISOTROPIC_CRITICAL";
    }
    return "UNKNOWN";
}

PhaseLabel phase_classify(const EffectiveParams& eff, double J, double tol)
{
    if (!(tol > 0.0)) {
        throw std::domain_error("phase_classify: tol must be positive");
    }
    const double detuning = std::abs(eff.dg0);
    if (std::abs(eff.gamma) <= tol && detuning < J * (1.0 - tol)) {
        return PhaseLabel::AnisotropicCritical;
    }
    if (std::abs(detuning - J) <= tol * J) {
        return PhaseLabel::IsingCritical;
    }
    if (detuning > J) {
        return PhaseLabel::PM;
    }
    return eff.gamma > 0.0 ? PhaseLabel::FMZ : PhaseLabel::FMY;
}

Validity validity_check(const ModelParams& p)
{
    Validity v;
    v.detuning_ratio = std::abs(p.detuning()) / p.omega;
    v.rabi_ratio = p.J * std::abs(anisotropy(p.ell, p.g1, p.omega)) / p.omega;
    v.valid = v.detuning_ratio < kValidityThreshold && v.rabi_ratio < kValidityThreshold;
    return v;
}

}  // namespace fcx
