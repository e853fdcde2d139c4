#include "sapgm/smoothing.hpp"

namespace sapgm {

double smooth_l1(const Vec& x, double mu) {
    detail::require_mu(mu);
    double s = 0.0;
    for (double v : x) s += smooth_abs(v, mu);
    return s;
}

void smooth_l1_grad(const Vec& x, double mu, Vec& grad_out) {
    detail::require_mu(mu);
    grad_out.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) grad_out[i] = smooth_abs_grad(x[i], mu);
}

double smooth_max(std::span<const double> values, double mu) {
    detail::require_mu(mu);
    if (values.empty()) throw std::domain_error("smooth_max: empty list");
    double acc = values[0];
    for (std::size_t i = 1; i < values.size(); ++i)
        acc += smooth_plus(values[i] - acc, mu);
    return acc;
}

double smooth_max_with_weights(std::span<const double> values, double mu, Vec& weights_out) {
    detail::require_mu(mu);
    if (values.empty()) throw std::domain_error("smooth_max: empty list");
    const std::size_t n = values.size();
    weights_out.assign(n, 0.0);

    // Forward pass keeps the partial folds; backward pass chains
    //   S_{j+1} = S_j + plus(v_{j+1} - S_j),
    // so dS_{j+1}/dv_{j+1} = p' and dS_{j+1}/dS_j = 1 - p'.
    Vec partial(n);
    partial[0] = values[0];
    for (std::size_t i = 1; i < n; ++i)
        partial[i] = partial[i - 1] + smooth_plus(values[i] - partial[i - 1], mu);

    double carry = 1.0; // d(result)/d(S_j), walking j downward
    for (std::size_t i = n; i-- > 1;) {
        const double p = smooth_plus_grad(values[i] - partial[i - 1], mu);
        weights_out[i] = carry * p;
        carry *= 1.0 - p;
    }
    weights_out[0] = carry;
    return partial[n - 1];
}

} // namespace sapgm
