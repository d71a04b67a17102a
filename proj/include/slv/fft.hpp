#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

namespace slv::detail {

/// In-place iterative radix-2 Cooley-Tukey transform. Size must be a power
/// of two, which GridSpec guarantees. Self-contained so the library stays
/// header-only with no link dependencies; at the grid sizes used here the
/// cost is negligible next to the time stepping.
inline void fft_inplace(std::vector<std::complex<double>>& a) {
    const size_t n = a.size();
    if (n < 2) return;

    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }

    for (size_t len = 2; len <= n; len <<= 1) {
        const double ang = -2.0 * M_PI / static_cast<double>(len);
        const std::complex<double> wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace slv::detail
