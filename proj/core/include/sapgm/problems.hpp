#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sapgm/smoothing.hpp"
#include "sapgm/subproblem.hpp"
#include "sapgm/vec.hpp"

namespace sapgm {

/// Data of one generated sparse instance: standard-normal A (row major),
/// b = max(A x_true, 0), and the sparse x_true with ceil(spar * n)
/// nonzero entries uniform in (0, 1].
struct LargeScaleData {
    std::size_t m_rows = 0;
    std::size_t n = 0;
    double spar = 0.0;
    std::uint64_t seed = 0;
    Vec a;      // m_rows x n, row major
    Vec b;      // m_rows
    Vec x_true; // n

    double a_at(std::size_t r, std::size_t c) const { return a[r * n + c]; }
};

/// Draw order is fixed so a seed pins the instance: A row by row, then the
/// n uniform entries of x (zero draws are redrawn so the nonzero count is
/// exact), then one Fisher-Yates shuffle.
LargeScaleData generate_large_scale(std::size_t m_rows, std::size_t n, double spar,
                                    std::uint64_t seed);

/// Text serialization with a one-line header (m_rows, n, spar, seed) so
/// instances replay across machines.
void save_large_scale(const LargeScaleData& data, const std::string& path);
LargeScaleData load_large_scale(const std::string& path);

struct ProblemParams {
    std::size_t n = 2;          // dimension (JOS1 family)
    std::size_t m_rows = 500;   // large-scale rows
    double spar = 0.1;          // large-scale sparsity
    std::uint64_t data_seed = 0;
    double eps_hat = 1e-3;      // the epsilon-hat inside the large-scale f2
    bool l1_in_g = false;       // route the +0.01||x||_1 term through the prox
    std::string data_file;      // optional pre-generated instance
};

/// One benchmark problem: m smoothed objectives over a box, each paired
/// with its exact nonsmooth value for reporting and metrics.
struct Problem {
    std::string name;
    std::size_t dim = 0;
    std::vector<SmoothedObjective> objectives;
    std::vector<std::function<double(const Vec&)>> true_f; // f_i without the g part
    ProxFriendlyG g;
    bool all_smooth = false;             // every f_i continuously differentiable
    std::vector<bool> objective_convex;  // per-objective convexity inside the box

    std::size_t num_objectives() const { return objectives.size(); }
    /// Exact objective vector F(x) = f(x) + g(x) (finite g part).
    Vec objective_values(const Vec& x) const;
    /// Smoothed objective vector F~(x, mu) = f~(x, mu) + g(x).
    Vec smoothed_values(const Vec& x, double mu) const;
    /// Uniform smoothing constant used by the diagnostics: max_i kappa_i.
    double kappa() const;
};

/// Builds one of the named benchmark problems:
///   large_scale, cr_mf2, cb3_lq, cb3_mf1, jos1_l1, bk1_l1, sp1_l1
/// plus the smooth two-objective variants jos1, bk1, sp1 used for the
/// degenerate-mode comparison. Unknown names throw.
Problem build_problem(const std::string& name, const ProblemParams& params = {});

/// All names build_problem accepts.
std::vector<std::string> problem_names();

/// count points uniform in the box, deterministic per seed.
std::vector<Vec> sample_starts(const Problem& problem, std::size_t count, std::uint64_t seed);

} // namespace sapgm
