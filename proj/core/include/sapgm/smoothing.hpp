#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>

#include "sapgm/vec.hpp"

namespace sapgm {

namespace detail {
inline void require_mu(double mu) {
    if (!(mu > 0.0)) throw std::domain_error("smoothing: mu must be positive");
}
} // namespace detail

/// C^1 convex smoother of max(z, 0). Piecewise cubic on [-mu, mu], exact
/// outside. Uniform error is at most mu/6 (attained at z = 0).
///
/// The branch on [0, mu] is z + (mu - z)^3 / (6 mu^2). The commonly printed
/// variant z + (z + mu)^3 / (6 mu^2) jumps at z = mu and is not a smoothing
/// function; the form used here is the continuous mirror of the branch on
/// [-mu, 0).
inline double smooth_plus(double z, double mu) {
    detail::require_mu(mu);
    if (z < -mu) return 0.0;
    if (z < 0.0) {
        const double t = z + mu;
        return t * t * t / (6.0 * mu * mu);
    }
    if (z <= mu) {
        const double t = mu - z;
        return z + t * t * t / (6.0 * mu * mu);
    }
    return z;
}

/// Derivative of smooth_plus in z; continuous and nondecreasing, 0 below
/// -mu and 1 above mu.
inline double smooth_plus_grad(double z, double mu) {
    detail::require_mu(mu);
    if (z < -mu) return 0.0;
    if (z < 0.0) {
        const double t = z + mu;
        return t * t / (2.0 * mu * mu);
    }
    if (z <= mu) {
        const double t = mu - z;
        return 1.0 - t * t / (2.0 * mu * mu);
    }
    return 1.0;
}

/// Huber-style smoother of |z|: quadratic on [-mu, mu], exact outside.
/// Uniform error is at most mu/2 (attained at z = 0).
inline double smooth_abs(double z, double mu) {
    detail::require_mu(mu);
    const double a = std::abs(z);
    if (a > mu) return a;
    return z * z / (2.0 * mu) + 0.5 * mu;
}

inline double smooth_abs_grad(double z, double mu) {
    detail::require_mu(mu);
    if (z > mu) return 1.0;
    if (z < -mu) return -1.0;
    return z / mu;
}

/// Componentwise smoothed l1 norm: sum_i smooth_abs(x_i, mu).
/// Error vs ||x||_1 is at most n * mu / 2.
double smooth_l1(const Vec& x, double mu);

/// Gradient of smooth_l1 (componentwise smooth_abs_grad).
void smooth_l1_grad(const Vec& x, double mu, Vec& grad_out);

/// Smoothed max of a list via the identity max(a, b) = a + max(b - a, 0),
/// folded left to right. The fold order is fixed: the smoothed value is
/// order-dependent, so determinism requires pinning it. Result is within
/// (count-1)/6 * mu of the exact max.
double smooth_max(std::span<const double> values, double mu);

/// smooth_max plus d(result)/d(values[i]) for chain-rule composition.
/// weights_out is resized to values.size(); the weights are nonnegative
/// and sum to 1.
double smooth_max_with_weights(std::span<const double> values, double mu, Vec& weights_out);

/// Stateless dispatch over the two smoothing primitives.
struct SmoothingPrimitive {
    enum class Kind { plus, abs };
    Kind kind;

    double value(double z, double mu) const {
        return kind == Kind::plus ? smooth_plus(z, mu) : smooth_abs(z, mu);
    }
    double grad(double z, double mu) const {
        return kind == Kind::plus ? smooth_plus_grad(z, mu) : smooth_abs_grad(z, mu);
    }
    /// Uniform-error constant: |value(z,mu) - f(z)| <= kappa() * mu.
    double kappa() const { return kind == Kind::plus ? 1.0 / 6.0 : 0.5; }
    /// Gradient Lipschitz factor: |grad(z1) - grad(z2)| <= lip()/mu * |z1 - z2|.
    double lip() const { return 1.0; }
};

/// One smoothed objective f~( . , mu): evaluation, gradient, the uniform
/// error constant kappa and the gradient-Lipschitz factor L (the gradient
/// of f~( . , mu) is (lip_factor/mu)-Lipschitz for mu in (0, mu0]).
struct SmoothedObjective {
    std::function<double(const Vec&, double)> eval;
    std::function<void(const Vec&, double, Vec&)> grad;
    double kappa = 0.0;
    double lip_factor = 1.0;
};

} // namespace sapgm
