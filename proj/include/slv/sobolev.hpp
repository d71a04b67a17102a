#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "slv/fft.hpp"
#include "slv/grid.hpp"

namespace slv {

/// Discrete H^s norm of the periodic extension of f:
///
///   ||f||_s^2 = 2L * sum_k (1 + xi_k^2)^s |c_k|^2,   xi_k = pi k / L,
///
/// with c_k the DFT coefficients (1/N normalization) and k running over
/// -N/2 .. N/2-1. At s = 0 this reduces to the periodic-trapezoid L^2 norm,
/// and a pure mode sin(pi k x / L) has norm sqrt(L (1 + xi_k^2)^s).
inline double sobolev_norm(const Field& f, double s) {
    if (s < 0.0) throw ScenarioError("sobolev_norm: order must be >= 0");
    const int n = f.size();
    const double half_length = f.grid().half_length();

    std::vector<std::complex<double>> spec(f.values().begin(), f.values().end());
    detail::fft_inplace(spec);

    const double xi1 = M_PI / half_length;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const int k = (i <= n / 2 - 1) ? i : i - n; // wrap to -N/2 .. N/2-1
        const double xi = xi1 * k;
        const double w = (s == 0.0) ? 1.0 : std::pow(1.0 + xi * xi, s);
        acc += w * std::norm(spec[static_cast<size_t>(i)]);
    }
    const double nn = static_cast<double>(n);
    return std::sqrt(2.0 * half_length / (nn * nn) * acc);
}

} // namespace slv
