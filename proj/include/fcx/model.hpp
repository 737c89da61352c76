#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fcx {

/// Driving and lattice parameters of the driven transverse-field Ising chain,
/// g(t) = g0 + g1 cos(omega t). Energies share one unit (hbar = 1).
struct ModelParams {
    double J = 0.01;
    double g0 = 0.5;
    double g1 = 1.0;
    double omega = 1.0;
    int L = 1000;
    int ell = 2;  ///< resonance index

    /// Throws std::domain_error unless J > 0, omega > 0, g1 >= 0, L even >= 2, ell >= 0.
    void validate() const;

    double resonant_field() const;  ///< ell * omega / 4
    double detuning() const;        ///< g0 - ell * omega / 4
    double period() const;          ///< 2 pi / omega
};

/// One momentum pair (k, -k) of the parity-even sector.
struct MomentumMode {
    double k = 0.0;
    double omega_k = 0.0;  ///< 2 J cos k
    double delta_k = 0.0;  ///< 2 J sin k
};

/// k_j = (2j - 1) pi / L for j = 1 .. L/2, ascending.
std::vector<MomentumMode> brillouin_momenta(int L, double J = 1.0);

/// Rotating-frame quantities attached to one momentum mode.
struct ModeSpectrum {
    double theta = 0.0;      ///< Bogoliubov angle, principal branch [-pi/4, pi/4]
    double eps = 0.0;        ///< quasiparticle energy, >= 0
    double eps_plus = 0.0;   ///< -omega_k + eps + ell omega / 2
    double eps_minus = 0.0;  ///< -omega_k - eps + ell omega / 2
    double a_plus = 0.0;     ///< -sin(theta)
    double a_minus = 0.0;    ///< cos(theta)
    /// +1 when 2 dg0 - omega_k >= 0. The mode built on theta with the + label
    /// then carries energy +eps; for -1 the two labels trade energies.
    int orientation = 1;
};

struct EffectiveParams {
    int ell = 0;
    double omega = 0.0;
    double J = 0.0;
    double dg0 = 0.0;        ///< g0 - ell omega / 4
    double gamma = 0.0;      ///< (-1)^ell J_ell(4 g1 / omega)
    double omega_eff = 0.0;  ///< J |gamma|
    double j_plus = 0.0;     ///< J (1 + gamma) / 2
    double j_minus = 0.0;    ///< J (1 - gamma) / 2
    std::vector<MomentumMode> modes;
    std::vector<ModeSpectrum> spectrum;  ///< aligned with modes
};

/// Anisotropy (-1)^ell J_ell(4 g1 / omega); depends on the ratio g1 / omega only.
double anisotropy(int ell, double g1, double omega);

EffectiveParams effective_params(const ModelParams& p);

/// Copy of eff with gamma replaced and every per-mode quantity recomputed.
EffectiveParams with_anisotropy(const EffectiveParams& eff, double gamma);

/// Half-angle of tan(2 theta) = delta_k gamma / (2 dg0 - omega_k) on the
/// principal branch. A vanishing denominator gives +-pi/4 by the sign of the
/// numerator; 0/0 gives 0.
double bogoliubov_angle(const MomentumMode& mode, const EffectiveParams& eff);

struct FloquetSpectrum {
    double eps = 0.0;
    double eps_plus = 0.0;
    double eps_minus = 0.0;
};

FloquetSpectrum floquet_spectrum(const MomentumMode& mode, const EffectiveParams& eff);

enum class PhaseLabel { PM, FMZ, FMY, IsingCritical, AnisotropicCritical };

std::string_view to_string(PhaseLabel label);

/// Criticality bands are checked first: |gamma| <= tol inside the ferromagnetic
/// strip, then ||dg0| - J| <= tol J.
PhaseLabel phase_classify(const EffectiveParams& eff, double J, double tol = 1e-9);

struct Validity {
    bool valid = false;
    double detuning_ratio = 0.0;  ///< |dg0| / omega
    double rabi_ratio = 0.0;      ///< omega_eff / omega
};

/// High-frequency regime check: both ratios below 0.1.
Validity validity_check(const ModelParams& p);

}  // namespace fcx
