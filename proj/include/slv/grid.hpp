#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "slv/errors.hpp"

namespace slv {

/// Uniform grid of N nodes standing in for the real line, truncated to
/// [-L, L). Nodes are x_j = (j - N/2) * dx with dx = 2L/N, so x = 0 and
/// x = -L are exact nodes and the node set is symmetric under negation.
/// The right endpoint +L is the periodic wrap of x_0 and is not stored.
class GridSpec {
public:
    static GridSpec make(double half_length, int n) {
        if (!(half_length > 0.0) || !std::isfinite(half_length))
            throw ScenarioError("grid half-length must be positive and finite");
        if (n < 16 || (n & (n - 1)) != 0)
            throw ScenarioError("grid size must be a power of two >= 16, got " +
                                std::to_string(n));
        return GridSpec(half_length, n);
    }

    double half_length() const { return half_length_; }
    int size() const { return n_; }
    double dx() const { return dx_; }
    double node(int j) const { return (j - n_ / 2) * dx_; }

    bool operator==(const GridSpec& other) const {
        return half_length_ == other.half_length_ && n_ == other.n_;
    }
    bool operator!=(const GridSpec& other) const { return !(*this == other); }

private:
    GridSpec(double half_length, int n)
        : half_length_(half_length), n_(n), dx_(2.0 * half_length / n) {}

    double half_length_;
    int n_;
    double dx_;
};

/// A real-valued function of x sampled on a GridSpec.
class Field {
public:
    explicit Field(GridSpec grid) : grid_(grid), v_(static_cast<size_t>(grid.size()), 0.0) {}

    Field(GridSpec grid, std::vector<double> values) : grid_(grid), v_(std::move(values)) {
        if (v_.size() != static_cast<size_t>(grid_.size()))
            throw ScenarioError("field sample count does not match grid size");
    }

    static Field zeros(GridSpec grid) { return Field(grid); }

    template <class Fn>
    static Field sample(GridSpec grid, Fn&& fn) {
        Field f(grid);
        for (int j = 0; j < grid.size(); ++j)
            f.v_[static_cast<size_t>(j)] = fn(grid.node(j));
        return f;
    }

    const GridSpec& grid() const { return grid_; }
    int size() const { return grid_.size(); }

    double operator[](int j) const { return v_[static_cast<size_t>(j)]; }
    double& operator[](int j) { return v_[static_cast<size_t>(j)]; }

    const std::vector<double>& values() const { return v_; }
    std::vector<double>& values() { return v_; }

    bool finite() const {
        return std::all_of(v_.begin(), v_.end(),
                           [](double x) { return std::isfinite(x); });
    }

private:
    GridSpec grid_;
    std::vector<double> v_;
};

inline void require_same_grid(const Field& a, const Field& b, const char* op) {
    if (a.grid() != b.grid())
        throw ScenarioError(std::string(op) + ": fields live on different grids");
}

inline Field operator+(const Field& a, const Field& b) {
    require_same_grid(a, b, "operator+");
    Field out = a;
    for (int j = 0; j < out.size(); ++j) out[j] += b[j];
    return out;
}

inline Field operator-(const Field& a, const Field& b) {
    require_same_grid(a, b, "operator-");
    Field out = a;
    for (int j = 0; j < out.size(); ++j) out[j] -= b[j];
    return out;
}

inline Field operator*(double c, const Field& f) {
    Field out = f;
    for (int j = 0; j < out.size(); ++j) out[j] *= c;
    return out;
}

inline double linf_norm(const Field& f) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
}

namespace detail {

/// Pairwise sum: deterministic reduction order, O(eps log n) error growth.
inline double pairwise_sum(const double* p, size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += p[i];
        return s;
    }
    const size_t h = n / 2;
    return pairwise_sum(p, h) + pairwise_sum(p + h, n - h);
}

/// Second-order first derivative: centered interior, one-sided at the ends.
inline std::vector<double> diff2(const std::vector<double>& f, double dx) {
    const size_t n = f.size();
    std::vector<double> d(n);
    for (size_t j = 1; j + 1 < n; ++j) d[j] = (f[j + 1] - f[j - 1]) / (2.0 * dx);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * dx);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * dx);
    return d;
}

/// Fourth-order first derivative, used only inside the endpoint-corrected
/// antiderivative so the correction does not dominate the error.
inline std::vector<double> diff4(const std::vector<double>& f, double dx) {
    const size_t n = f.size();
    std::vector<double> d(n);
    for (size_t j = 2; j + 2 < n; ++j)
        d[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) / (12.0 * dx);
    d[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) / (12.0 * dx);
    d[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * dx);
    d[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) / (12.0 * dx);
    d[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) / (12.0 * dx);
    return d;
}

} // namespace detail

/// D_x by second-order differences: centered in the interior, one-sided at
/// the two boundary nodes. Exact on affine fields at every node.
inline Field derivative(const Field& f) {
    return Field(f.grid(), detail::diff2(f.values(), f.grid().dx()));
}

/// Quadrature over the full period [-L, L]: trapezoidal rule on the periodic
/// extension, whose end weights merge into a uniform dx * sum. Integrates
/// pure Fourier modes exactly and loses nothing on decayed data.
inline double integral(const Field& f) {
    return f.grid().dx() * detail::pairwise_sum(f.values().data(), f.values().size());
}

/// Cumulative integral from x_0 = -L, vanishing there. Trapezoidal rule with
/// Euler-Maclaurin endpoint corrections (two terms), fourth-order accurate on
/// smooth data. Requires numerically mean-zero input so the result can decay
/// at the right end as well.
inline Field antiderivative(const Field& f, double mean_zero_rel_tol = 1e-10) {
    const double scale = linf_norm(f);
    const double mean = integral(f) / (2.0 * f.grid().half_length());
    if (std::abs(mean) > mean_zero_rel_tol * scale)
        throw MeanZeroViolation("antiderivative: field mean " + std::to_string(mean) +
                                " exceeds tolerance " +
                                std::to_string(mean_zero_rel_tol * scale));
    const auto& v = f.values();
    const size_t n = v.size();
    const double dx = f.grid().dx();

    std::vector<double> out(n, 0.0);
    double acc = 0.0;
    for (size_t j = 1; j < n; ++j) {
        acc += 0.5 * dx * (v[j - 1] + v[j]);
        out[j] = acc;
    }
    const auto d1 = detail::diff4(v, dx);
    const auto d2 = detail::diff2(d1, dx);
    const auto d3 = detail::diff2(d2, dx);
    const double c2 = dx * dx / 12.0;
    const double c4 = dx * dx * dx * dx / 720.0;
    for (size_t j = 1; j < n; ++j)
        out[j] += -c2 * (d1[j] - d1[0]) + c4 * (d3[j] - d3[0]);
    return Field(f.grid(), std::move(out));
}

} // namespace slv
