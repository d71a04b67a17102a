#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "slv/errors.hpp"
#include "slv/grid.hpp"

namespace slv {

/// Discrete realization of A phi = -nu (a phi_x)_x + phi on the grid.
///
/// The matrix is symmetric tridiagonal in flux form with midpoint-averaged
/// coefficients. Homogeneous Dirichlet data is imposed at both domain
/// endpoints x = -L and x = +L: the left endpoint is the stored node x_0,
/// which carries an identity row decoupled from its neighbor, while the
/// right endpoint is the unstored wrap node whose zero value truncates the
/// stencil of row N-1 (its coefficient midpoint uses the wrap value a_0).
/// With this layout sin(pi k (x+L) / 2L) are exact discrete eigenvectors.
class EllipticOperator {
public:
    static EllipticOperator assemble(const Field& a, double nu, double theta_floor) {
        if (!(nu > 0.0) || !std::isfinite(nu))
            throw ScenarioError("assemble: viscosity must be positive and finite");
        if (!a.finite())
            throw ScenarioError("assemble: coefficient field has non-finite entries");

        double amin = a[0];
        for (int j = 1; j < a.size(); ++j) amin = std::min(amin, a[j]);
        if (amin < theta_floor)
            throw EllipticityError("coefficient floor " + std::to_string(amin) +
                                   " below theta = " + std::to_string(theta_floor));

        return EllipticOperator(a, nu, amin);
    }

    const GridSpec& grid() const { return grid_; }
    double nu() const { return nu_; }

    /// Measured ellipticity floor min_j a_j.
    double theta() const { return theta_; }

    Field apply(const Field& phi) const {
        require_same_grid(phi, coefficient_, "EllipticOperator::apply");
        const int n = grid_.size();
        Field out(grid_);
        out[0] = diag_[0] * phi[0];
        for (int j = 1; j < n; ++j) {
            double v = diag_[j] * phi[j];
            if (j >= 2) v += sub_[j] * phi[j - 1];
            if (j + 1 < n) v += sup_[j] * phi[j + 1];
            out[j] = v;
        }
        return out;
    }

    /// Direct tridiagonal elimination of A x = rhs.
    Field solve(const Field& rhs) const {
        return solve_shifted(1.0, 0.0, rhs);
    }

    /// Solves (beta I + gamma A) x = rhs; used by the Crank-Nicolson step.
    Field solve_shifted(double beta, double gamma, const Field& rhs) const {
        require_same_grid(rhs, coefficient_, "EllipticOperator::solve");
        const int n = grid_.size();
        std::vector<double> c(static_cast<size_t>(n)), d(static_cast<size_t>(n));

        double piv = beta + gamma * diag_[0];
        if (std::abs(piv) < 1e-300) throw SingularSystem("zero pivot in row 0");
        c[0] = 0.0;
        d[0] = rhs[0] / piv;
        for (int j = 1; j < n; ++j) {
            const double lower = (j >= 2) ? gamma * sub_[j] : 0.0;
            const double upper = (j + 1 < n) ? gamma * sup_[j] : 0.0;
            piv = (beta + gamma * diag_[j]) - lower * c[j - 1];
            if (std::abs(piv) < 1e-300)
                throw SingularSystem("zero pivot in row " + std::to_string(j));
            c[j] = upper / piv;
            d[j] = (rhs[j] - lower * d[j - 1]) / piv;
        }
        Field x(grid_);
        x[n - 1] = d[n - 1];
        for (int j = n - 2; j >= 0; --j) x[j] = d[j] - c[j] * x[j + 1];
        return x;
    }

    double diag_entry(int j) const { return diag_[j]; }
    double sub_entry(int j) const { return sub_[j]; }
    double sup_entry(int j) const { return sup_[j]; }

private:
    EllipticOperator(const Field& a, double nu, double theta)
        : grid_(a.grid()), coefficient_(a), nu_(nu), theta_(theta) {
        const int n = grid_.size();
        const double r = nu / (grid_.dx() * grid_.dx());

        // half[j] = a_{j+1/2}; the last midpoint pairs a_{N-1} with the wrap value a_0.
        std::vector<double> half(static_cast<size_t>(n));
        for (int j = 0; j + 1 < n; ++j) half[j] = 0.5 * (a[j] + a[j + 1]);
        half[n - 1] = 0.5 * (a[n - 1] + a[0]);

        sub_.assign(static_cast<size_t>(n), 0.0);
        diag_.assign(static_cast<size_t>(n), 1.0);
        sup_.assign(static_cast<size_t>(n), 0.0);
        for (int j = 1; j < n; ++j) {
            diag_[j] = 1.0 + r * (half[j - 1] + half[j]);
            if (j >= 2) sub_[j] = -r * half[j - 1];
            if (j + 1 < n) sup_[j] = -r * half[j];
        }
    }

    GridSpec grid_;
    Field coefficient_;
    double nu_;
    double theta_;
    std::vector<double> sub_, diag_, sup_;
};

inline EllipticOperator assemble(const Field& a, double nu, double theta_floor) {
    return EllipticOperator::assemble(a, nu, theta_floor);
}

/// One Crank-Nicolson step of phi_t + A(t) phi = f(t):
///   (I + dt/2 A) phi_new = (I - dt/2 A) phi_old + dt/2 (f_old + f_new),
/// with the operator assembled at the half step by the caller. A-stable and
/// second order in dt.
inline Field step(const EllipticOperator& op_mid, const Field& phi,
                  const Field& f_old, const Field& f_new, double dt) {
    if (!(dt > 0.0)) throw ScenarioError("step: dt must be positive");
    Field rhs = phi - (0.5 * dt) * op_mid.apply(phi) + (0.5 * dt) * (f_old + f_new);
    return op_mid.solve_shifted(1.0, 0.5 * dt, rhs);
}

} // namespace slv
