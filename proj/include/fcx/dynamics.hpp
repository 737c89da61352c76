#pragma once

#include <complex>
#include <span>
#include <vector>

#include "fcx/model.hpp"

namespace fcx {

using complex = std::complex<double>;

/// Nambu spinor (u, v) of one momentum pair: u multiplies |1_{-k} 1_k>,
/// v the pair vacuum.
struct SpinorState {
    complex u{0.0, 0.0};
    complex v{1.0, 0.0};

    double norm_squared() const { return std::norm(u) + std::norm(v); }
};

struct PolarForm {
    double theta = 0.0;  ///< arcsin |u|, in [0, pi/2]
    double beta = 0.0;   ///< arg u - arg v in (-pi, pi]; 0 when |u| < 1e-14
};

/// Throws std::domain_error when |u|^2 + |v|^2 deviates from 1 by more than 1e-6.
PolarForm polar_decompose(const SpinorState& s);

/// Phase of the frame co-rotating with the drive.
struct DriveFrame {
    double g0_res = 0.0;
    double g1 = 0.0;
    double omega = 1.0;

    static DriveFrame from(const ModelParams& p);

    /// 4 g0_res t + (4 g1 / omega) sin(omega t)
    double alpha(double t) const;
};

enum class Branch { Plus, Minus };

/// High-frequency closed-form state at time t, starting from (0, 1),
/// with the global phase chosen so that the u component carries e^{-i alpha}.
SpinorState evolve_analytic(const MomentumMode& mode, const EffectiveParams& eff, const DriveFrame& frame,
                            double t);

/// Floquet modes built from the eigenvectors (cos, -sin) and (sin, cos) of the
/// effective two-level Hamiltonian, lifted to the lab frame.
SpinorState floquet_mode(const MomentumMode& mode, const EffectiveParams& eff, const DriveFrame& frame, double t,
                         Branch branch);

/// Quasienergy (m = 0 representative) carried by floquet_mode(.., branch).
/// Equal to eps_plus / eps_minus when 2 dg0 - omega_k >= 0, swapped otherwise.
double floquet_quasienergy(const MomentumMode& mode, const EffectiveParams& eff, Branch branch);

/// A step that keeps RK4 norm loss below ~1e-8 over 1e3 drive periods:
/// min(period / 200, 0.005 / spectral bound of H_k(t)).
double default_ode_step(const ModelParams& p);

/// Integrates i dPsi/dt = H_k(t) Psi with
/// H_k(t) = (2 g(t) - omega_k) sz + delta_k sx - omega_k, from (0, 1),
/// using classic fixed-step RK4. Throws std::domain_error if dt <= 0.
SpinorState evolve_ode(const MomentumMode& mode, const ModelParams& p, double t_final, double dt);

/// Same integration, reporting the state at each of the (ascending, >= 0)
/// sample times. Steps are shortened so that every sample is hit exactly.
std::vector<SpinorState> evolve_ode_series(const MomentumMode& mode, const ModelParams& p,
                                           std::span<const double> times, double dt);

}  // namespace fcx
