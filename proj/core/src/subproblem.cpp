#include "sapgm/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sapgm {

bool SimplexWeights::valid(double tol) const {
    double s = 0.0;
    for (double v : lambda) {
        if (v < -tol) return false;
        s += v;
    }
    return std::abs(s - 1.0) <= tol * static_cast<double>(std::max<std::size_t>(lambda.size(), 1));
}

void SubproblemInstance::validate() const {
    if (!(mu > 0.0)) throw std::domain_error("subproblem: mu must be positive");
    if (!(ell > 0.0)) throw std::domain_error("subproblem: ell must be positive");
    if (gradients.empty()) throw std::domain_error("subproblem: no objectives");
    if (offsets.size() != gradients.size())
        throw std::invalid_argument("subproblem: offsets/gradients size mismatch");
    for (const Vec& gvec : gradients)
        if (gvec.size() != y.size())
            throw std::invalid_argument("subproblem: gradient dimension mismatch");
}

namespace {

double soft_threshold(double v, double t) {
    if (v > t) return v - t;
    if (v < -t) return v + t;
    return 0.0;
}

Vec combined_gradient(const SimplexWeights& lambda, const SubproblemInstance& inst) {
    Vec d(inst.dim(), 0.0);
    for (std::size_t i = 0; i < inst.num_objectives(); ++i)
        axpy(lambda.lambda[i], inst.gradients[i], d);
    return d;
}

} // namespace

double phi_ell(const Vec& z, const SubproblemInstance& inst, const ProxFriendlyG& g) {
    if (!inside_box(z, g.lo, g.hi, 1e-12))
        return std::numeric_limits<double>::infinity();
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < inst.num_objectives(); ++i) {
        double lin = inst.offsets[i] + g.value(i, z);
        const Vec& gr = inst.gradients[i];
        for (std::size_t j = 0; j < z.size(); ++j) lin += gr[j] * (z[j] - inst.y[j]);
        best = std::max(best, lin);
    }
    return best + 0.5 * inst.ell * dist2_sq(z, inst.y);
}

Vec weighted_prox(const SimplexWeights& lambda, double t, const Vec& v, const ProxFriendlyG& g) {
    if (!(t > 0.0)) throw std::domain_error("weighted_prox: t must be positive");
    const double c = g.combined_coeff(lambda);
    Vec u(v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        u[j] = std::clamp(soft_threshold(v[j], t * c), g.lo[j], g.hi[j]);
    return u;
}

double moreau_envelope(const SimplexWeights& lambda, double t, const Vec& v,
                       const ProxFriendlyG& g) {
    const Vec p = weighted_prox(lambda, t, v, g);
    const double c = g.combined_coeff(lambda);
    double l1 = 0.0;
    for (double pj : p) l1 += std::abs(pj);
    return t * c * l1 + 0.5 * dist2_sq(p, v);
}

double dual_omega(const SimplexWeights& lambda, const SubproblemInstance& inst,
                  const ProxFriendlyG& g) {
    const Vec d = combined_gradient(lambda, inst);
    Vec v = inst.y;
    axpy(-1.0 / inst.ell, d, v);
    double val = inst.ell * moreau_envelope(lambda, 1.0 / inst.ell, v, g);
    val -= norm2_sq(d) / (2.0 * inst.ell);
    for (std::size_t i = 0; i < inst.num_objectives(); ++i)
        val += lambda.lambda[i] * inst.offsets[i];
    return val;
}

Vec dual_omega_grad(const SimplexWeights& lambda, const SubproblemInstance& inst,
                    const ProxFriendlyG& g) {
    const Vec d = combined_gradient(lambda, inst);
    Vec v = inst.y;
    axpy(-1.0 / inst.ell, d, v);
    const Vec p = weighted_prox(lambda, 1.0 / inst.ell, v, g);

    Vec grad(inst.num_objectives());
    for (std::size_t i = 0; i < inst.num_objectives(); ++i) {
        double gi = g.value(i, p) + inst.offsets[i];
        const Vec& gr = inst.gradients[i];
        for (std::size_t j = 0; j < p.size(); ++j) gi += gr[j] * (p[j] - inst.y[j]);
        grad[i] = gi;
    }
    return grad;
}

FrankWolfeResult frank_wolfe_solve(const SubproblemInstance& inst, const ProxFriendlyG& g,
                                   std::size_t max_iters, double gap_tol) {
    if (max_iters < 1) throw std::domain_error("frank_wolfe_solve: need at least one iteration");
    inst.validate();

    const std::size_t m = inst.num_objectives();
    SimplexWeights lambda = SimplexWeights::uniform(m);

    std::size_t iters = 0;
    for (std::size_t k = 0; k < max_iters; ++k) {
        const Vec grad = dual_omega_grad(lambda, inst, g);

        // LMO for maximizing omega over the simplex: the best vertex is the
        // largest gradient component; ties resolve to the lowest index.
        std::size_t j = 0;
        for (std::size_t i = 1; i < m; ++i)
            if (grad[i] > grad[j]) j = i;

        double fw_gap = grad[j];
        for (std::size_t i = 0; i < m; ++i) fw_gap -= grad[i] * lambda.lambda[i];
        if (fw_gap <= gap_tol) break;

        const double step = 2.0 / static_cast<double>(k + 2);
        for (std::size_t i = 0; i < m; ++i) lambda.lambda[i] *= 1.0 - step;
        lambda.lambda[j] += step;
        ++iters;
    }

    const Vec d = combined_gradient(lambda, inst);
    Vec v = inst.y;
    axpy(-1.0 / inst.ell, d, v);
    Vec z = weighted_prox(lambda, 1.0 / inst.ell, v, g);
    const double gap = phi_ell(z, inst, g) - dual_omega(lambda, inst, g);
    return FrankWolfeResult{std::move(lambda), std::move(z), gap, iters};
}

double kkt_residual(const Vec& z, const SimplexWeights& lambda, const SubproblemInstance& inst,
                    const ProxFriendlyG& g) {
    const std::size_t n = z.size();
    const double bound_tol = 1e-10;

    // Smooth part of the stationarity condition; the aggregated subgradient
    // eta must satisfy eta = -r with eta in sum_i lambda_i dg_i(z).
    Vec r = combined_gradient(lambda, inst);
    for (std::size_t j = 0; j < n; ++j) r[j] += inst.ell * (z[j] - inst.y[j]);

    const double c = g.combined_coeff(lambda);
    double stat_sq = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        // Allowed interval for the aggregated subgradient in coordinate j:
        // the l1 part contributes {c*sign} or [-c, c] at zero, the box
        // normal cone opens the interval at an active bound.
        double a, b;
        if (z[j] > bound_tol) {
            a = b = c;
        } else if (z[j] < -bound_tol) {
            a = b = -c;
        } else {
            a = -c;
            b = c;
        }
        if (z[j] <= g.lo[j] + bound_tol) a = -std::numeric_limits<double>::infinity();
        if (z[j] >= g.hi[j] - bound_tol) b = std::numeric_limits<double>::infinity();

        const double want = -r[j];
        double defect = 0.0;
        if (want < a) defect = a - want;
        else if (want > b) defect = want - b;
        stat_sq += defect * defect;
    }

    // Complementarity: weights may sit only on the active bracket terms.
    const std::size_t m = inst.num_objectives();
    Vec psi(m);
    double psi_max = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        double val = inst.offsets[i] + g.value(i, z);
        const Vec& gr = inst.gradients[i];
        for (std::size_t j = 0; j < n; ++j) val += gr[j] * (z[j] - inst.y[j]);
        psi[i] = val;
        psi_max = std::max(psi_max, val);
    }
    double comp = 0.0;
    for (std::size_t i = 0; i < m; ++i) comp += lambda.lambda[i] * (psi_max - psi[i]);

    return std::sqrt(stat_sq + comp * comp);
}

} // namespace sapgm
