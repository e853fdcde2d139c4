#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "sapgm/vec.hpp"

namespace sapgm {

/// Weights on the standard simplex: lambda_i >= 0, sum lambda_i = 1.
struct SimplexWeights {
    Vec lambda;

    static SimplexWeights uniform(std::size_t m) {
        return SimplexWeights{Vec(m, 1.0 / static_cast<double>(m))};
    }
    static SimplexWeights vertex(std::size_t m, std::size_t j) {
        Vec v(m, 0.0);
        v[j] = 1.0;
        return SimplexWeights{v};
    }
    bool valid(double tol = 1e-12) const;
};

/// The prox-friendly part g_i of each objective: a shared box plus an
/// optional per-objective l1 term c_i * ||z||_1. The prox of any simplex
/// combination is exact and componentwise: soft-threshold by the combined
/// l1 weight, then clamp to the box.
struct ProxFriendlyG {
    enum class Kind { box_indicator, weighted_l1_plus_box };
    Kind kind = Kind::box_indicator;
    Vec l1_coeff; // per objective, c_i >= 0; empty means all zero
    Vec lo, hi;   // box bounds, lo <= hi componentwise

    static ProxFriendlyG box(Vec lo, Vec hi) {
        return ProxFriendlyG{Kind::box_indicator, {}, std::move(lo), std::move(hi)};
    }
    static ProxFriendlyG l1_box(Vec coeff, Vec lo, Vec hi) {
        return ProxFriendlyG{Kind::weighted_l1_plus_box, std::move(coeff), std::move(lo),
                             std::move(hi)};
    }

    double coeff(std::size_t i) const {
        return (kind == Kind::weighted_l1_plus_box && i < l1_coeff.size()) ? l1_coeff[i] : 0.0;
    }
    /// Finite part of g_i at z (the box indicator is handled by callers).
    double value(std::size_t i, const Vec& z) const {
        const double c = coeff(i);
        if (c == 0.0) return 0.0;
        double s = 0.0;
        for (double v : z) s += std::abs(v);
        return c * s;
    }
    double combined_coeff(const SimplexWeights& w) const {
        double c = 0.0;
        for (std::size_t i = 0; i < w.lambda.size(); ++i) c += w.lambda[i] * coeff(i);
        return c;
    }
};

/// One per-iteration subproblem: minimize over z
///   max_i [ <grad_i, z - y> + g_i(z) + offset_i ] + (ell/2) ||z - y||^2
/// with offset_i = f~_i(y, mu) - F~_i(x, mu) and ell = 1/(gamma * mu).
struct SubproblemInstance {
    Vec x;                      // current iterate (offsets were formed against it)
    Vec y;                      // extrapolated point
    double mu = 0.0;            // smoothing level
    double ell = 0.0;           // strong convexity modulus of the quadratic term
    std::vector<Vec> gradients; // grad f~_i(y, mu), one per objective
    Vec offsets;                // f~_i(y, mu) - F~_i(x, mu)

    std::size_t num_objectives() const { return gradients.size(); }
    std::size_t dim() const { return y.size(); }
    void validate() const;
};

/// Primal subproblem objective; +inf outside the box.
double phi_ell(const Vec& z, const SubproblemInstance& inst, const ProxFriendlyG& g);

/// prox_{t * sum_i lambda_i g_i}(v): soft-threshold each coordinate by
/// t * sum_i lambda_i c_i, then clamp to the box. Exact because the
/// combined g is separable and convex per coordinate.
Vec weighted_prox(const SimplexWeights& lambda, double t, const Vec& v, const ProxFriendlyG& g);

/// Moreau envelope of h = t * sum_i lambda_i g_i at v:
///   M_h(v) = h(p) + 0.5 ||p - v||^2 with p = weighted_prox(lambda, t, v, g).
double moreau_envelope(const SimplexWeights& lambda, double t, const Vec& v,
                       const ProxFriendlyG& g);

/// Dual objective on the simplex:
///   omega(lambda) = ell * M_{(1/ell) sum lambda_i g_i}(y - d/ell)
///                   - ||d||^2 / (2 ell) + sum lambda_i offset_i,
/// with d = sum lambda_i grad_i. Concave in lambda.
double dual_omega(const SimplexWeights& lambda, const SubproblemInstance& inst,
                  const ProxFriendlyG& g);

/// Gradient of omega: component i is
///   g_i(p) + <grad_i, p - y> + offset_i,  p = weighted_prox at lambda.
Vec dual_omega_grad(const SimplexWeights& lambda, const SubproblemInstance& inst,
                    const ProxFriendlyG& g);

struct FrankWolfeResult {
    SimplexWeights lambda; // final iterate
    Vec z;                 // recovered primal minimizer
    double gap = 0.0;      // phi_ell(z) - omega(lambda)
    std::size_t iterations = 0;
};

/// Maximize omega over the simplex with the Frank-Wolfe step 2/(k+2).
/// The linear minimization oracle reduces to one simplex vertex: the
/// component with the largest dual gradient (ties go to the lowest index).
/// Starts from the uniform weights and exits early once the FW gap
/// <grad omega, s - lambda> drops to gap_tol.
FrankWolfeResult frank_wolfe_solve(const SubproblemInstance& inst, const ProxFriendlyG& g,
                                   std::size_t max_iters, double gap_tol = 1e-8);

/// Residual of the subproblem optimality system at (z, lambda): the
/// distance of -[sum lambda_i grad_i + ell (z - y)] to the aggregated
/// subdifferential of sum lambda_i g_i at z (minimum-norm selection at
/// kinks and bounds), combined with the complementarity defect
/// sum_i lambda_i (max_j psi_j - psi_i). Zero exactly at the solution.
double kkt_residual(const Vec& z, const SimplexWeights& lambda, const SubproblemInstance& inst,
                    const ProxFriendlyG& g);

} // namespace sapgm
