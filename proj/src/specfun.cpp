#include "fcx/specfun.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fcx::specfun {

namespace {

// Below this argument the ascending series has no harmful cancellation
// (largest term stays around 1e2 for every order).
constexpr double kSeriesLimit = 8.0;

double ascending_series(int n, double z)
{
    const double half = 0.5 * z;
    double term = std::exp(n * std::log(half) - std::lgamma(n + 1.0));
    if (term == 0.0) {
        return 0.0;
    }
    const double q = half * half;
    double sum = term;
    for (int m = 0; m < 200; ++m) {
        term *= -q / ((m + 1.0) * (m + 1.0 + n));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return sum;
}

// Downward (Miller) recurrence normalised by J_0 + 2 sum_k J_2k = 1.
double miller(int n, double z)
{
    const double top = std::max<double>(n, z);
    int start = static_cast<int>(top + 30.0 + 12.0 * std::cbrt(top));
    start += start % 2;

    constexpr double kBig = 1e250;
    double next = 0.0;     // J_{m+1}
    double current = 1e-300;  // J_m
    double norm = 0.0;
    double wanted = 0.0;

    for (int m = start; m >= 1; --m) {
        const double prev = (2.0 * m / z) * current - next;  // J_{m-1}
        next = current;
        current = prev;
        if (std::abs(current) > kBig) {
            current /= kBig;
            next /= kBig;
            norm /= kBig;
            wanted /= kBig;
        }
        if (m - 1 == n) {
            wanted = current;
        }
        if ((m - 1) % 2 == 0 && m - 1 > 0) {
            norm += 2.0 * current;
        }
    }
    norm += current;  // J_0
    return wanted / norm;
}

}  // namespace

BesselOrder reduce_order(int order)
{
    if (order >= 0) {
        return {order, 1};
    }
    return {-order, (order % 2 == 0) ? 1 : -1};
}

double bessel_j(int order, double z)
{
    if (!std::isfinite(z)) {
        throw std::domain_error("bessel_j: argument must be finite");
    }
    auto [n, sign] = reduce_order(order);
    if (z < 0.0) {
        z = -z;
        if (n % 2 != 0) {
            sign = -sign;
        }
    }
    if (z == 0.0) {
        return n == 0 ? 1.0 : 0.0;
    }
    const double value = (z <= kSeriesLimit) ? ascending_series(n, z) : miller(n, z);
    return sign * value;
}

double bessel_zero(int order, int index)
{
    if (order < 0) {
        throw std::domain_error("bessel_zero: order must be non-negative");
    }
    if (index < 1) {
        throw std::domain_error("bessel_zero: index must be >= 1");
    }

    // No zero of J_n lies below n; consecutive zeros are more than
    // 3 apart, so a pi/4 scan cannot step over one.
    constexpr double kStep = std::numbers::pi / 4.0;
    const double lower = static_cast<double>(order);
    const double upper = order + std::numbers::pi * (index + 2) + 10.0 * std::cbrt(order + 1.0) + 10.0;

    double a = lower;
    double fa = bessel_j(order, a);
    int found = 0;
    while (a < upper) {
        const double b = a + kStep;
        const double fb = bessel_j(order, b);
        if (fb == 0.0) {
            if (++found == index) {
                return b;
            }
            a = b + 1e-9;
            fa = bessel_j(order, a);
            continue;
        }
        if ((fa > 0.0) != (fb > 0.0) && fa != 0.0) {
            if (++found == index) {
                double lo = a;
                double hi = b;
                double flo = fa;
                for (;;) {
                    const double mid = 0.5 * (lo + hi);
                    if (mid <= lo || mid >= hi) {
                        break;
                    }
                    const double fm = bessel_j(order, mid);
                    if (fm == 0.0) {
                        return mid;
                    }
                    if ((fm > 0.0) == (flo > 0.0)) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                return std::abs(bessel_j(order, lo)) <= std::abs(bessel_j(order, hi)) ? lo : hi;
            }
        }
        a = b;
        fa = fb;
    }
    std::ostringstream msg;
    msg << "bessel_zero: zero " << index << " of J_" << order << " not bracketed in [" << lower << ", "
        << upper << "]";
    throw std::runtime_error(msg.str());
}

}  // namespace fcx::specfun
