#pragma once

#include <span>
#include <utility>
#include <vector>

#include "fcx/dynamics.hpp"
#include "fcx/model.hpp"

namespace fcx {

struct ComplexitySeries {
    std::vector<double> times;
    std::vector<double> values;
    ModelParams params;
};

struct AverageRecord {
    double param_value = 0.0;
    double c_bar = 0.0;
    double c_minus = 0.0;
    int n_periods = 0;
};

/// Per-mode data needed to evaluate C(t) = sum_k |arcsin(delta_k gamma sin(eps_k t) / eps_k)|
/// repeatedly without recomputing the spectrum.
class ComplexityKernel {
public:
    explicit ComplexityKernel(const EffectiveParams& eff);
    explicit ComplexityKernel(const ModelParams& p);

    double operator()(double t) const;

    std::size_t mode_count() const { return coupling_.size(); }

private:
    std::vector<double> coupling_;  // delta_k * gamma
    std::vector<double> eps_;
};

double complexity_t(const ModelParams& p, double t);

ComplexitySeries complexity_series(const ModelParams& p, std::span<const double> times);

/// 2 J |gamma| / sin(pi / L)
double early_slope(const ModelParams& p);

/// 1 / (2 |g0 - ell omega / 4| + 2 J)
double equilibration_time(const ModelParams& p);

/// Trapezoidal mean of C(t) over n_periods drive periods. The sum is split
/// into fixed-size chunks, so the result does not depend on `workers`.
double time_average(const ModelParams& p, int n_periods, int samples_per_period, int workers = 1);

/// Minus: sum_k |theta_k|. Plus: sum_k |theta_k - pi/2|.
double floquet_complexity(const ModelParams& p, Branch branch);

/// Central differences (second order) on a uniform grid with second-order
/// one-sided stencils at the ends. order is 1 or 2; needs >= 3 points.
/// Throws std::domain_error for a non-uniform grid or bad sizes.
std::vector<double> finite_difference(std::span<const double> x, std::span<const double> y, int order);

std::vector<std::pair<double, double>> sweep_derivatives(std::span<const AverageRecord> records, int order);

/// Ground-state complexity of the undriven chain relative to eta = 0:
/// (1 / 2 pi) int_0^pi |eta_k| dk with eta_k = atan2(sin k, g0 / J - cos k) / 2.
/// n_quad is the number of Gauss-Legendre panels, graded toward both ends.
double ising_ground_complexity(double g0, double J, int n_quad = 128);

}  // namespace fcx
