#include "sapgm/problems.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "sapgm/rng.hpp"

namespace sapgm {

Vec Problem::objective_values(const Vec& x) const {
    Vec v(num_objectives());
    for (std::size_t i = 0; i < num_objectives(); ++i) v[i] = true_f[i](x) + g.value(i, x);
    return v;
}

Vec Problem::smoothed_values(const Vec& x, double mu) const {
    Vec v(num_objectives());
    for (std::size_t i = 0; i < num_objectives(); ++i)
        v[i] = objectives[i].eval(x, mu) + g.value(i, x);
    return v;
}

double Problem::kappa() const {
    double k = 0.0;
    for (const auto& obj : objectives) k = std::max(k, obj.kappa);
    return k;
}

LargeScaleData generate_large_scale(std::size_t m_rows, std::size_t n, double spar,
                                    std::uint64_t seed) {
    if (m_rows < 1 || n < 1) throw std::domain_error("generate_large_scale: empty shape");
    if (!(spar > 0.0 && spar <= 1.0))
        throw std::domain_error("generate_large_scale: spar must be in (0, 1]");

    LargeScaleData data;
    data.m_rows = m_rows;
    data.n = n;
    data.spar = spar;
    data.seed = seed;

    Rng rng(seed);
    data.a.resize(m_rows * n);
    for (double& v : data.a) v = rng.normal();

    // ceil(spar * n) nonzeros; the epsilon guard keeps an integral product
    // from creeping one unit up through floating point.
    const auto nnz = static_cast<std::size_t>(
        std::ceil(spar * static_cast<double>(n) - 1e-9));
    data.x_true.resize(n);
    for (double& v : data.x_true) {
        do {
            v = rng.uniform01();
        } while (v == 0.0);
    }
    for (std::size_t i = 0; i + nnz < n + 0; ++i)
        if (i < n - nnz) data.x_true[i] = 0.0;
    rng.shuffle(data.x_true);
    for (double& v : data.x_true)
        if (v > 1.0) v = 1.0;

    data.b.resize(m_rows);
    for (std::size_t r = 0; r < m_rows; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < n; ++c) s += data.a_at(r, c) * data.x_true[c];
        data.b[r] = std::max(s, 0.0);
    }
    return data;
}

namespace {

void write_vec(std::ostream& os, const Vec& v) {
    char buf[64];
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%.17g", v[i]);
        os << (i ? " " : "") << buf;
    }
    os << "\n";
}

Vec read_vec(std::istream& is, std::size_t count) {
    Vec v(count);
    for (double& x : v)
        if (!(is >> x)) throw std::runtime_error("large-scale file: truncated data");
    return v;
}

} // namespace

void save_large_scale(const LargeScaleData& data, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << "sapgm-large-scale v1\n";
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%zu %zu %.17g %llu\n", data.m_rows, data.n, data.spar,
                  static_cast<unsigned long long>(data.seed));
    os << buf;
    for (std::size_t r = 0; r < data.m_rows; ++r) {
        Vec row(data.a.begin() + static_cast<std::ptrdiff_t>(r * data.n),
                data.a.begin() + static_cast<std::ptrdiff_t>((r + 1) * data.n));
        write_vec(os, row);
    }
    write_vec(os, data.b);
    write_vec(os, data.x_true);
}

LargeScaleData load_large_scale(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot read " + path);
    std::string magic, version;
    is >> magic >> version;
    if (magic != "sapgm-large-scale" || version != "v1")
        throw std::runtime_error("large-scale file: bad header in " + path);
    LargeScaleData data;
    unsigned long long seed = 0;
    if (!(is >> data.m_rows >> data.n >> data.spar >> seed))
        throw std::runtime_error("large-scale file: bad shape line in " + path);
    data.seed = seed;
    data.a = read_vec(is, data.m_rows * data.n);
    data.b = read_vec(is, data.m_rows);
    data.x_true = read_vec(is, data.n);
    return data;
}

namespace {

Vec constant_vec(std::size_t n, double v) { return Vec(n, v); }

// --- smooth quadratic families -------------------------------------------

SmoothedObjective smooth_objective(std::function<double(const Vec&)> f,
                                   std::function<void(const Vec&, Vec&)> grad,
                                   double hessian_bound) {
    SmoothedObjective obj;
    obj.eval = [f](const Vec& x, double) { return f(x); };
    obj.grad = [grad](const Vec& x, double, Vec& out) { grad(x, out); };
    obj.kappa = 0.0;
    // Stored in the L/mu convention, valid for mu <= 1.
    obj.lip_factor = hessian_bound;
    return obj;
}

std::function<double(const Vec&)> jos1_f1(std::size_t n) {
    const double inv = 1.0 / static_cast<double>(n);
    return [inv](const Vec& x) {
        double s = 0.0;
        for (double v : x) s += v * v;
        return inv * s;
    };
}

std::function<double(const Vec&)> jos1_f2(std::size_t n) {
    const double inv = 1.0 / static_cast<double>(n);
    return [inv](const Vec& x) {
        double s = 0.0;
        for (double v : x) s += (v - 2.0) * (v - 2.0);
        return inv * s;
    };
}

void append_smooth_l1_objective(Problem& p) {
    SmoothedObjective obj;
    obj.eval = [](const Vec& x, double mu) { return smooth_l1(x, mu); };
    obj.grad = [](const Vec& x, double mu, Vec& out) { smooth_l1_grad(x, mu, out); };
    obj.kappa = 0.5 * static_cast<double>(p.dim);
    obj.lip_factor = 1.0;
    p.objectives.push_back(std::move(obj));
    p.true_f.emplace_back([](const Vec& x) {
        double s = 0.0;
        for (double v : x) s += std::abs(v);
        return s;
    });
    p.objective_convex.push_back(true);
    p.all_smooth = false;
}

Problem make_jos1(std::size_t n, bool with_l1) {
    Problem p;
    p.name = with_l1 ? "jos1_l1" : "jos1";
    p.dim = n;
    p.g = ProxFriendlyG::box(constant_vec(n, 1.0), constant_vec(n, 2.0));
    const double inv = 1.0 / static_cast<double>(n);
    p.objectives.push_back(smooth_objective(
        jos1_f1(n),
        [inv](const Vec& x, Vec& out) {
            out.resize(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) out[i] = 2.0 * inv * x[i];
        },
        2.0 * inv));
    p.objectives.push_back(smooth_objective(
        jos1_f2(n),
        [inv](const Vec& x, Vec& out) {
            out.resize(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) out[i] = 2.0 * inv * (x[i] - 2.0);
        },
        2.0 * inv));
    p.true_f.push_back(jos1_f1(n));
    p.true_f.push_back(jos1_f2(n));
    p.objective_convex = {true, true};
    p.all_smooth = true;
    if (with_l1) append_smooth_l1_objective(p);
    return p;
}

Problem make_bk1(bool with_l1) {
    Problem p;
    p.name = with_l1 ? "bk1_l1" : "bk1";
    p.dim = 2;
    p.g = ProxFriendlyG::box(constant_vec(2, -5.0), constant_vec(2, 10.0));
    auto f1 = [](const Vec& x) { return x[0] * x[0] + x[1] * x[1]; };
    auto f2 = [](const Vec& x) {
        return (x[0] - 5.0) * (x[0] - 5.0) + (x[1] - 5.0) * (x[1] - 5.0);
    };
    p.objectives.push_back(smooth_objective(
        f1,
        [](const Vec& x, Vec& out) { out = {2.0 * x[0], 2.0 * x[1]}; },
        2.0));
    p.objectives.push_back(smooth_objective(
        f2,
        [](const Vec& x, Vec& out) { out = {2.0 * (x[0] - 5.0), 2.0 * (x[1] - 5.0)}; },
        2.0));
    p.true_f = {f1, f2};
    p.objective_convex = {true, true};
    p.all_smooth = true;
    if (with_l1) append_smooth_l1_objective(p);
    return p;
}

Problem make_sp1(bool with_l1) {
    Problem p;
    p.name = with_l1 ? "sp1_l1" : "sp1";
    p.dim = 2;
    p.g = ProxFriendlyG::box(constant_vec(2, 5.0), constant_vec(2, 10.0));
    auto f1 = [](const Vec& x) {
        const double d = x[0] - x[1];
        return (x[0] - 1.0) * (x[0] - 1.0) + d * d;
    };
    auto f2 = [](const Vec& x) {
        const double d = x[0] - x[1];
        return (x[1] - 3.0) * (x[1] - 3.0) + d * d;
    };
    p.objectives.push_back(smooth_objective(
        f1,
        [](const Vec& x, Vec& out) {
            const double d = x[0] - x[1];
            out = {2.0 * (x[0] - 1.0) + 2.0 * d, -2.0 * d};
        },
        6.0));
    p.objectives.push_back(smooth_objective(
        f2,
        [](const Vec& x, Vec& out) {
            const double d = x[0] - x[1];
            out = {2.0 * d, 2.0 * (x[1] - 3.0) - 2.0 * d};
        },
        6.0));
    p.true_f = {f1, f2};
    p.objective_convex = {true, true};
    p.all_smooth = true;
    if (with_l1) append_smooth_l1_objective(p);
    return p;
}

// --- small nonsmooth pairs ------------------------------------------------

Problem make_cr_mf2() {
    Problem p;
    p.name = "cr_mf2";
    p.dim = 2;
    p.g = ProxFriendlyG::box(constant_vec(2, 1.5), constant_vec(2, 2.0));

    // f1 = max(b1, b2), b1 = x1^2 + (x2-1)^2 + x2 - 1, b2 = -x1^2 - (x2-1)^2 + x2 + 1
    SmoothedObjective o1;
    o1.eval = [](const Vec& x, double mu) {
        const double t = x[1] - 1.0;
        const double b1 = x[0] * x[0] + t * t + x[1] - 1.0;
        const double b2 = -x[0] * x[0] - t * t + x[1] + 1.0;
        const double vals[2] = {b1, b2};
        return smooth_max(vals, mu);
    };
    o1.grad = [](const Vec& x, double mu, Vec& out) {
        const double t = x[1] - 1.0;
        const double b1 = x[0] * x[0] + t * t + x[1] - 1.0;
        const double b2 = -x[0] * x[0] - t * t + x[1] + 1.0;
        const double vals[2] = {b1, b2};
        Vec w;
        smooth_max_with_weights(vals, mu, w);
        out = {w[0] * 2.0 * x[0] + w[1] * (-2.0 * x[0]),
               w[0] * (2.0 * t + 1.0) + w[1] * (-2.0 * t + 1.0)};
    };
    o1.kappa = 1.0 / 6.0;
    o1.lip_factor = 2.0 + 80.0; // hessian bound + sup ||grad(b2-b1)||^2 on the box
    p.objectives.push_back(std::move(o1));
    p.true_f.emplace_back([](const Vec& x) {
        const double t = x[1] - 1.0;
        const double b1 = x[0] * x[0] + t * t + x[1] - 1.0;
        const double b2 = -x[0] * x[0] - t * t + x[1] + 1.0;
        return std::max(b1, b2);
    });

    // f2 = -x1 + 2 q + 1.75 |q|, q = x1^2 + x2^2 - 1
    SmoothedObjective o2;
    o2.eval = [](const Vec& x, double mu) {
        const double q = x[0] * x[0] + x[1] * x[1] - 1.0;
        return -x[0] + 2.0 * q + 1.75 * smooth_abs(q, mu);
    };
    o2.grad = [](const Vec& x, double mu, Vec& out) {
        const double q = x[0] * x[0] + x[1] * x[1] - 1.0;
        const double h = 2.0 + 1.75 * smooth_abs_grad(q, mu);
        out = {-1.0 + h * 2.0 * x[0], h * 2.0 * x[1]};
    };
    o2.kappa = 1.75 / 2.0;
    o2.lip_factor = 7.5 + 1.75 * 32.0;
    p.objectives.push_back(std::move(o2));
    p.true_f.emplace_back([](const Vec& x) {
        const double q = x[0] * x[0] + x[1] * x[1] - 1.0;
        return -x[0] + 2.0 * q + 1.75 * std::abs(q);
    });

    p.objective_convex = {true, true}; // on the box; the crescent kink is inactive there
    p.all_smooth = false;
    return p;
}

// CB3: max(x1^4 + x2^2, (2-x1)^2 + (2-x2)^2, 2 e^{x2-x1})
double cb3_value(const Vec& x, double mu) {
    const double c1 = x[0] * x[0] * x[0] * x[0] + x[1] * x[1];
    const double t1 = 2.0 - x[0];
    const double t2 = 2.0 - x[1];
    const double c2 = t1 * t1 + t2 * t2;
    const double c3 = 2.0 * std::exp(x[1] - x[0]);
    const double vals[3] = {c1, c2, c3};
    return smooth_max(vals, mu);
}

void cb3_grad(const Vec& x, double mu, Vec& out) {
    const double c1 = x[0] * x[0] * x[0] * x[0] + x[1] * x[1];
    const double t1 = 2.0 - x[0];
    const double t2 = 2.0 - x[1];
    const double c2 = t1 * t1 + t2 * t2;
    const double c3 = 2.0 * std::exp(x[1] - x[0]);
    const double vals[3] = {c1, c2, c3};
    Vec w;
    smooth_max_with_weights(vals, mu, w);
    out = {w[0] * 4.0 * x[0] * x[0] * x[0] + w[1] * (-2.0 * t1) + w[2] * (-c3),
           w[0] * 2.0 * x[1] + w[1] * (-2.0 * t2) + w[2] * c3};
}

double cb3_true(const Vec& x) {
    const double c1 = x[0] * x[0] * x[0] * x[0] + x[1] * x[1];
    const double t1 = 2.0 - x[0];
    const double t2 = 2.0 - x[1];
    const double c2 = t1 * t1 + t2 * t2;
    const double c3 = 2.0 * std::exp(x[1] - x[0]);
    return std::max({c1, c2, c3});
}

SmoothedObjective cb3_objective(double lip) {
    SmoothedObjective o;
    o.eval = cb3_value;
    o.grad = cb3_grad;
    o.kappa = 2.0 / 6.0; // two folds
    o.lip_factor = lip;
    return o;
}

Problem make_cb3_lq() {
    Problem p;
    p.name = "cb3_lq";
    p.dim = 2;
    p.g = ProxFriendlyG::box(constant_vec(2, 1.5), constant_vec(2, 2.0));
    p.objectives.push_back(cb3_objective(48.0 + 2.0 * 1200.0));
    p.true_f.emplace_back(cb3_true);

    // LQ: max(-x1 - x2, -x1 - x2 + x1^2 + x2^2 - 1)
    SmoothedObjective o2;
    o2.eval = [](const Vec& x, double mu) {
        const double l1 = -x[0] - x[1];
        const double l2 = l1 + x[0] * x[0] + x[1] * x[1] - 1.0;
        const double vals[2] = {l1, l2};
        return smooth_max(vals, mu);
    };
    o2.grad = [](const Vec& x, double mu, Vec& out) {
        const double l1 = -x[0] - x[1];
        const double l2 = l1 + x[0] * x[0] + x[1] * x[1] - 1.0;
        const double vals[2] = {l1, l2};
        Vec w;
        smooth_max_with_weights(vals, mu, w);
        out = {-1.0 + w[1] * 2.0 * x[0], -1.0 + w[1] * 2.0 * x[1]};
    };
    o2.kappa = 1.0 / 6.0;
    o2.lip_factor = 2.0 + 32.0;
    p.objectives.push_back(std::move(o2));
    p.true_f.emplace_back([](const Vec& x) {
        const double l1 = -x[0] - x[1];
        return std::max(l1, l1 + x[0] * x[0] + x[1] * x[1] - 1.0);
    });

    p.objective_convex = {true, true};
    p.all_smooth = false;
    return p;
}

Problem make_cb3_mf1() {
    Problem p;
    p.name = "cb3_mf1";
    p.dim = 2;
    p.g = ProxFriendlyG::box(constant_vec(2, 0.0), constant_vec(2, 1.0));
    p.objectives.push_back(cb3_objective(12.0 + 2.0 * 160.0));
    p.true_f.emplace_back(cb3_true);

    // MF1: -x1 + 20 max(x1^2 + x2^2 - 1, 0)
    SmoothedObjective o2;
    o2.eval = [](const Vec& x, double mu) {
        const double q = x[0] * x[0] + x[1] * x[1] - 1.0;
        return -x[0] + 20.0 * smooth_plus(q, mu);
    };
    o2.grad = [](const Vec& x, double mu, Vec& out) {
        const double q = x[0] * x[0] + x[1] * x[1] - 1.0;
        const double h = 20.0 * smooth_plus_grad(q, mu);
        out = {-1.0 + h * 2.0 * x[0], h * 2.0 * x[1]};
    };
    o2.kappa = 20.0 / 6.0;
    o2.lip_factor = 20.0 * (2.0 + 8.0);
    p.objectives.push_back(std::move(o2));
    p.true_f.emplace_back([](const Vec& x) {
        const double q = x[0] * x[0] + x[1] * x[1] - 1.0;
        return -x[0] + 20.0 * std::max(q, 0.0);
    });

    p.objective_convex = {true, true};
    p.all_smooth = false;
    return p;
}

Problem make_large_scale(const ProblemParams& params) {
    auto data = std::make_shared<LargeScaleData>(
        params.data_file.empty()
            ? generate_large_scale(params.m_rows, params.n, params.spar, params.data_seed)
            : load_large_scale(params.data_file));
    const std::size_t n = data->n;
    const std::size_t m_rows = data->m_rows;
    const double eps_hat = params.eps_hat;

    Problem p;
    p.name = "large_scale";
    p.dim = n;
    const double c1 = params.l1_in_g ? 0.0 : 0.01;

    auto matvec = [data](const Vec& x, Vec& u) {
        u.resize(data->m_rows);
        for (std::size_t r = 0; r < data->m_rows; ++r) {
            double s = 0.0;
            const double* row = data->a.data() + r * data->n;
            for (std::size_t c = 0; c < data->n; ++c) s += row[c] * x[c];
            u[r] = s;
        }
    };
    auto add_at_t = [data](const Vec& t, double scale, Vec& out) {
        for (std::size_t r = 0; r < data->m_rows; ++r) {
            const double w = scale * t[r];
            if (w == 0.0) continue;
            const double* row = data->a.data() + r * data->n;
            for (std::size_t c = 0; c < data->n; ++c) out[c] += w * row[c];
        }
    };

    // f1 = || max(Ax, 0) - b ||_1 (+ 0.01 ||x||_1 unless routed into g)
    SmoothedObjective o1;
    o1.eval = [data, matvec, c1](const Vec& x, double mu) {
        Vec u;
        matvec(x, u);
        double s = 0.0;
        for (std::size_t r = 0; r < data->m_rows; ++r)
            s += smooth_abs(smooth_plus(u[r], mu) - data->b[r], mu);
        if (c1 > 0.0) s += c1 * smooth_l1(x, mu);
        return s;
    };
    o1.grad = [data, matvec, add_at_t, c1](const Vec& x, double mu, Vec& out) {
        Vec u;
        matvec(x, u);
        Vec t(data->m_rows);
        for (std::size_t r = 0; r < data->m_rows; ++r) {
            const double inner = smooth_plus(u[r], mu);
            t[r] = smooth_abs_grad(inner - data->b[r], mu) * smooth_plus_grad(u[r], mu);
        }
        out.assign(x.size(), 0.0);
        add_at_t(t, 1.0, out);
        if (c1 > 0.0)
            for (std::size_t j = 0; j < x.size(); ++j)
                out[j] += c1 * smooth_abs_grad(x[j], mu);
    };
    o1.kappa = (2.0 / 3.0) * static_cast<double>(m_rows) + c1 * 0.5 * static_cast<double>(n);
    {
        double frob_sq = 0.0;
        for (double v : data->a) frob_sq += v * v;
        o1.lip_factor = 2.0 * frob_sq + c1;
        p.objectives.push_back(std::move(o1));
        p.true_f.emplace_back([data, c1](const Vec& x) {
            Vec u(data->m_rows);
            for (std::size_t r = 0; r < data->m_rows; ++r) {
                double s = 0.0;
                const double* row = data->a.data() + r * data->n;
                for (std::size_t c = 0; c < data->n; ++c) s += row[c] * x[c];
                u[r] = s;
            }
            double s = 0.0;
            for (std::size_t r = 0; r < data->m_rows; ++r)
                s += std::abs(std::max(u[r], 0.0) - data->b[r]);
            if (c1 > 0.0)
                for (double v : x) s += c1 * std::abs(v);
            return s;
        });

        // f2 = -max(||Ax - b||_1 - eps_hat, 0) - 0.03 ||x||_1
        SmoothedObjective o2;
        o2.eval = [data, matvec, eps_hat](const Vec& x, double mu) {
            Vec u;
            matvec(x, u);
            double s = 0.0;
            for (std::size_t r = 0; r < data->m_rows; ++r)
                s += smooth_abs(u[r] - data->b[r], mu);
            return -smooth_plus(s - eps_hat, mu) - 0.03 * smooth_l1(x, mu);
        };
        o2.grad = [data, matvec, add_at_t, eps_hat](const Vec& x, double mu, Vec& out) {
            Vec u;
            matvec(x, u);
            double s = 0.0;
            Vec t(data->m_rows);
            for (std::size_t r = 0; r < data->m_rows; ++r) {
                const double d = u[r] - data->b[r];
                s += smooth_abs(d, mu);
                t[r] = smooth_abs_grad(d, mu);
            }
            const double outer = smooth_plus_grad(s - eps_hat, mu);
            out.assign(x.size(), 0.0);
            add_at_t(t, -outer, out);
            for (std::size_t j = 0; j < x.size(); ++j)
                out[j] -= 0.03 * smooth_abs_grad(x[j], mu);
        };
        o2.kappa = 1.0 / 6.0 + 0.5 * static_cast<double>(m_rows) + 0.015 * static_cast<double>(n);
        double row_norm_sum = 0.0;
        for (std::size_t r = 0; r < m_rows; ++r) {
            double rn = 0.0;
            for (std::size_t c = 0; c < n; ++c) rn += data->a_at(r, c) * data->a_at(r, c);
            row_norm_sum += std::sqrt(rn);
        }
        o2.lip_factor = row_norm_sum * row_norm_sum + frob_sq + 0.03;
        p.objectives.push_back(std::move(o2));
    }
    p.true_f.emplace_back([data, eps_hat](const Vec& x) {
        double s = 0.0;
        for (std::size_t r = 0; r < data->m_rows; ++r) {
            double u = 0.0;
            const double* row = data->a.data() + r * data->n;
            for (std::size_t c = 0; c < data->n; ++c) u += row[c] * x[c];
            s += std::abs(u - data->b[r]);
        }
        double l1 = 0.0;
        for (double v : x) l1 += std::abs(v);
        return -std::max(s - eps_hat, 0.0) - 0.03 * l1;
    });

    if (params.l1_in_g) {
        p.g = ProxFriendlyG::l1_box({0.01, 0.0}, constant_vec(n, 0.0), constant_vec(n, 1.0));
    } else {
        p.g = ProxFriendlyG::box(constant_vec(n, 0.0), constant_vec(n, 1.0));
    }
    // Neither objective is convex as printed: f1 takes |.| of a sign-changing
    // max-composition and f2 subtracts l1 terms.
    p.objective_convex = {false, false};
    p.all_smooth = false;
    return p;
}

} // namespace

Problem build_problem(const std::string& name, const ProblemParams& params) {
    if (name == "jos1") return make_jos1(params.n, false);
    if (name == "jos1_l1") return make_jos1(params.n, true);
    if (name == "bk1") return make_bk1(false);
    if (name == "bk1_l1") return make_bk1(true);
    if (name == "sp1") return make_sp1(false);
    if (name == "sp1_l1") return make_sp1(true);
    if (name == "cr_mf2") return make_cr_mf2();
    if (name == "cb3_lq") return make_cb3_lq();
    if (name == "cb3_mf1") return make_cb3_mf1();
    if (name == "large_scale") return make_large_scale(params);
    throw std::invalid_argument("build_problem: unknown problem '" + name + "'");
}

std::vector<std::string> problem_names() {
    return {"large_scale", "cr_mf2", "cb3_lq", "cb3_mf1", "jos1_l1",
            "bk1_l1",      "sp1_l1", "jos1",   "bk1",     "sp1"};
}

std::vector<Vec> sample_starts(const Problem& problem, std::size_t count, std::uint64_t seed) {
    if (count < 1) throw std::domain_error("sample_starts: count must be positive");
    Rng rng(seed);
    std::vector<Vec> starts(count);
    for (Vec& x : starts) {
        x.resize(problem.dim);
        for (std::size_t j = 0; j < problem.dim; ++j)
            x[j] = rng.uniform(problem.g.lo[j], problem.g.hi[j]);
    }
    return starts;
}

} // namespace sapgm
