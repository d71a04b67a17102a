#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <string_view>

#include "slv/errors.hpp"

namespace slv {

enum class ModelKind {
    RationalSquareRoot, // h(S) = S / sqrt(1 + S^2)
    Arctangent,         // h(S) = atan(S)
    Cubic,              // h(S) = (1 + S^2) S
    Linear,             // h(S) = S
};

/// A strictly increasing constitutive law h with h(0) = 0, its derivative,
/// and the inverse g = h^{-1} on the open interval (alpha_minus, alpha_plus)
/// of attainable strain-sum values. All evaluations are pure; a model is
/// immutable after construction and safe to share across threads.
class ConstitutiveModel {
public:
    static ConstitutiveModel make(ModelKind kind) { return ConstitutiveModel(kind); }

    static ConstitutiveModel from_name(std::string_view name) {
        if (name == "rational_sqrt") return make(ModelKind::RationalSquareRoot);
        if (name == "arctan") return make(ModelKind::Arctangent);
        if (name == "cubic") return make(ModelKind::Cubic);
        if (name == "linear") return make(ModelKind::Linear);
        throw ScenarioError("unknown constitutive model '" + std::string(name) +
                            "' (expected rational_sqrt | arctan | cubic | linear)");
    }

    ModelKind kind() const { return kind_; }

    std::string_view name() const {
        switch (kind_) {
            case ModelKind::RationalSquareRoot: return "rational_sqrt";
            case ModelKind::Arctangent: return "arctan";
            case ModelKind::Cubic: return "cubic";
            case ModelKind::Linear: return "linear";
        }
        return "?";
    }

    double alpha_minus() const { return -alpha_; }
    double alpha_plus() const { return alpha_; }

    /// min(|alpha-|, |alpha+|): the largest admissible strain bound delta.
    double admissible_delta() const { return alpha_; }

    /// Margin kept from a finite endpoint of (alpha-, alpha+); g blows up
    /// there and the analysis requires staying strictly inside.
    static constexpr double inversion_margin() { return 1e-9; }

    double h(double s) const {
        switch (kind_) {
            case ModelKind::RationalSquareRoot: return s / std::sqrt(1.0 + s * s);
            case ModelKind::Arctangent: return std::atan(s);
            case ModelKind::Cubic: return (1.0 + s * s) * s;
            case ModelKind::Linear: return s;
        }
        return 0.0;
    }

    double h_prime(double s) const {
        switch (kind_) {
            case ModelKind::RationalSquareRoot: {
                const double q = 1.0 + s * s;
                return 1.0 / (q * std::sqrt(q));
            }
            case ModelKind::Arctangent: return 1.0 / (1.0 + s * s);
            case ModelKind::Cubic: return 1.0 + 3.0 * s * s;
            case ModelKind::Linear: return 1.0;
        }
        return 0.0;
    }

    bool admissible(double omega) const {
        if (!std::isfinite(omega)) return false;
        if (std::isinf(alpha_)) return true;
        return std::abs(omega) <= alpha_ - inversion_margin();
    }

    /// Inverse law S = g(omega). Analytic where a closed form exists
    /// (followed by one Newton polish), safeguarded Newton for the cubic.
    /// Throws DomainError outside the admissible interval.
    double g(double omega) const {
        require_admissible(omega);
        switch (kind_) {
            case ModelKind::Linear: return omega;
            case ModelKind::RationalSquareRoot: {
                // 1 - w^2 as (1-w)(1+w): both factors exact near |w| = 1.
                const double s = omega / std::sqrt((1.0 - omega) * (1.0 + omega));
                return newton_polish(s, omega);
            }
            case ModelKind::Arctangent:
                return newton_polish(std::tan(omega), omega);
            case ModelKind::Cubic:
                return invert_cubic(omega);
        }
        return 0.0;
    }

    /// g'(omega) = 1 / h'(g(omega)); strictly positive on the admissible set.
    double g_prime(double omega) const {
        require_admissible(omega);
        switch (kind_) {
            case ModelKind::Linear: return 1.0;
            case ModelKind::RationalSquareRoot: {
                const double q = (1.0 - omega) * (1.0 + omega);
                return 1.0 / (q * std::sqrt(q));
            }
            case ModelKind::Arctangent: {
                const double t = std::tan(omega);
                return 1.0 + t * t;
            }
            case ModelKind::Cubic:
                return 1.0 / h_prime(invert_cubic(omega));
        }
        return 0.0;
    }

    /// sup of g' over [-delta, delta]. For every law here g' is even and
    /// monotone in |omega|, so the supremum sits at 0 or at the endpoints.
    double g_prime_sup_on(double delta) const {
        return std::max(g_prime(0.0), std::max(g_prime(delta), g_prime(-delta)));
    }

    /// inf of g' over [-delta, delta]; same monotone-in-|omega| argument.
    double g_prime_inf_on(double delta) const {
        return std::min(g_prime(0.0), std::min(g_prime(delta), g_prime(-delta)));
    }

private:
    explicit ConstitutiveModel(ModelKind kind) : kind_(kind) {
        switch (kind_) {
            case ModelKind::RationalSquareRoot: alpha_ = 1.0; break;
            case ModelKind::Arctangent: alpha_ = M_PI / 2.0; break;
            case ModelKind::Cubic:
            case ModelKind::Linear:
                alpha_ = std::numeric_limits<double>::infinity();
                break;
        }
    }

    void require_admissible(double omega) const {
        if (!admissible(omega))
            throw DomainError("strain-sum " + std::to_string(omega) +
                              " outside admissible interval (" + std::to_string(-alpha_) +
                              ", " + std::to_string(alpha_) + ") of model '" +
                              std::string(name()) + "'");
    }

    double newton_polish(double s, double omega) const {
        const double hp = h_prime(s);
        return hp > 0.0 ? s - (h(s) - omega) / hp : s;
    }

    /// Unique real root of S + S^3 = omega. Monotone map, so Newton with a
    /// bisection safeguard on [0, |omega|] converges unconditionally.
    static double invert_cubic(double omega) {
        if (omega == 0.0) return 0.0;
        const double w = std::abs(omega);
        double lo = 0.0, hi = w;
        const double cbrt_w = std::cbrt(w);
        double s = w / (1.0 + cbrt_w * cbrt_w);
        for (int it = 0; it < 60; ++it) {
            const double r = s + s * s * s - w;
            if (std::abs(r) <= 1e-14 * (1.0 + w)) break;
            if (r > 0.0) hi = s; else lo = s;
            const double step = r / (1.0 + 3.0 * s * s);
            double next = s - step;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            if (next == s) break;
            s = next;
        }
        return omega < 0.0 ? -s : s;
    }

    ModelKind kind_;
    double alpha_;
};

} // namespace slv
