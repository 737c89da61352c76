#pragma once

// Bessel functions of the first kind, integer order, real argument.

namespace fcx::specfun {

/// Non-negative order together with the sign picked up by the reduction
/// J_{-n}(z) = (-1)^n J_n(z).
struct BesselOrder {
    int ell = 0;
    int sign = 1;
};

BesselOrder reduce_order(int order);

/// J_order(z). Absolute error below 1e-12 for |z| <= 200, |order| <= 50.
/// Throws std::domain_error for non-finite z.
double bessel_j(int order, double z);

/// The index-th positive zero of J_order (index >= 1, order >= 0),
/// bracketed and bisected down to adjacent doubles.
/// Throws std::domain_error on bad arguments and std::runtime_error if no
/// sign change is found inside the search window.
double bessel_zero(int order, int index);

}  // namespace fcx::specfun
