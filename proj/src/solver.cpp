#include "plap/solver.hpp"
#include "plap/operators.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace plap {

void validate(const SolverConfig& cfg) {
    detail::require_exponent(cfg.p);
    detail::require_epsilon(cfg.epsilon);
    if (!(cfg.mu > 0.0))
        throw std::invalid_argument("mu must be positive, got " + std::to_string(cfg.mu));
    if (!(cfg.tol > 0.0))
        throw std::invalid_argument("tol must be positive, got " + std::to_string(cfg.tol));
    if (cfg.max_iter == 0) throw std::invalid_argument("max_iter must be positive");
}

namespace {

std::vector<double> variation_brackets(const SparseGraph& g, const VertexFunction& f,
                                       const SolverConfig& cfg) {
    const LocalVariation lv = local_variation(g, f, cfg.epsilon);
    std::vector<double> bracket(lv.values.size());
    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId i = 0; i < n; ++i)
        bracket[i] = detail::variation_power(lv.values[i], cfg.p);
    return bracket;
}

}  // namespace

IterationCoefficients coefficients(const SparseGraph& g, const VertexFunction& f,
                                   const SolverConfig& cfg) {
    validate(cfg);
    detail::require_vertex_sized(g, f, "coefficients");

    const std::vector<double> bracket = variation_brackets(g, f, cfg);
    IterationCoefficients out;
    out.edge_m.resize(g.slot_count());
    out.edge_p.resize(g.slot_count());
    out.diag_p.resize(g.vertex_count());

    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId j = 0; j < n; ++j) {
        const auto cols = g.neighbors(j);
        const auto ws = g.edge_weights(j);
        const std::size_t base = g.row_begin(j);
        double m_sum = 0.0;
        for (std::size_t s = 0; s < cols.size(); ++s) {
            const double m = 0.5 * ws[s] * (bracket[cols[s]] + bracket[j]);
            out.edge_m[base + s] = m;
            m_sum += m;
        }
        const double denom = m_sum + cfg.mu;
        for (std::size_t s = 0; s < cols.size(); ++s)
            out.edge_p[base + s] = out.edge_m[base + s] / denom;
        out.diag_p[j] = cfg.mu / denom;
    }
    return out;
}

double jacobi_sweep(const SparseGraph& g, const VertexFunction& current, const VertexFunction& y,
                    const SolverConfig& cfg, VertexFunction& next) {
    detail::require_vertex_sized(g, current, "jacobi_sweep");
    detail::require_vertex_sized(g, y, "jacobi_sweep");
    if (next.size() != current.size()) next = VertexFunction(current.size());

    const std::vector<double> bracket = variation_brackets(g, current, cfg);
    const auto n = g.vertex_count();
    double delta = 0.0;
#pragma omp parallel for schedule(static) reduction(max : delta)
    for (VertexId j = 0; j < n; ++j) {
        const auto cols = g.neighbors(j);
        const auto ws = g.edge_weights(j);
        double m_sum = 0.0;
        double num = 0.0;
        for (std::size_t s = 0; s < cols.size(); ++s) {
            const VertexId i = cols[s];
            const double m = 0.5 * ws[s] * (bracket[i] + bracket[j]);
            m_sum += m;
            num += m * current[i];
        }
        const double value = (num + cfg.mu * y[j]) / (m_sum + cfg.mu);
        next[j] = value;
        const double change = std::fabs(value - current[j]);
        if (change > delta) delta = change;
    }
    return delta;
}

SolveReport solve_fixed_point(const SparseGraph& g, const VertexFunction& y,
                              const SolverConfig& cfg) {
    validate(cfg);
    detail::require_vertex_sized(g, y, "solve_fixed_point");

    SolveReport report;
    VertexFunction cur = y;
    VertexFunction next(y.size());
    for (std::size_t t = 1; t <= cfg.max_iter; ++t) {
        const double delta = jacobi_sweep(g, cur, y, cfg, next);
        if (!std::isfinite(delta))
            throw std::runtime_error("solve_fixed_point: non-finite iterate at sweep " +
                                     std::to_string(t));
        std::swap(cur, next);
        report.iterations = t;
        report.final_delta = delta;
        if (delta <= cfg.tol) {
            report.converged = true;
            break;
        }
    }
    report.residual = stationarity_residual(g, cur, y, cfg);
    report.f = std::move(cur);
    return report;
}

VertexFunction solve_p2_direct(const SparseGraph& g, const VertexFunction& y, double mu) {
    if (!(mu > 0.0))
        throw std::invalid_argument("mu must be positive, got " + std::to_string(mu));
    detail::require_vertex_sized(g, y, "solve_p2_direct");

    const auto n = static_cast<Eigen::Index>(g.vertex_count());
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(g.slot_count() + static_cast<std::size_t>(n));
    const auto& row_ptr = g.row_ptr();
    const auto& col = g.col();
    const auto& w = g.weights();
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        double d = 0.0;
        for (std::size_t s = row_ptr[u]; s < row_ptr[u + 1]; ++s) {
            d += w[s];
            trip.emplace_back(u, col[s], -w[s]);
        }
        trip.emplace_back(u, u, d + mu);
    }
    Eigen::SparseMatrix<double> A(n, n);
    A.setFromTriplets(trip.begin(), trip.end());

    Eigen::VectorXd b(n);
    for (Eigen::Index i = 0; i < n; ++i) b[i] = mu * y[static_cast<std::size_t>(i)];

    Eigen::SimplicialLLT<Eigen::SparseMatrix<double>> llt(A);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("solve_p2_direct: Cholesky factorization failed");
    Eigen::VectorXd x = llt.solve(b);
    // One step of iterative refinement to push the residual to ~1e-12.
    x += llt.solve(b - A * x);

    VertexFunction out(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = x[i];
    return out;
}

double stationarity_residual(const SparseGraph& g, const VertexFunction& f,
                             const VertexFunction& y, const SolverConfig& cfg) {
    validate(cfg);
    detail::require_vertex_sized(g, f, "stationarity_residual");
    detail::require_vertex_sized(g, y, "stationarity_residual");
    const VertexFunction lp = p_laplacian(g, f, cfg.p, cfg.epsilon);
    double r = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        r = std::max(r, std::fabs(lp[j] + cfg.mu * (f[j] - y[j])));
    return r;
}

}  // namespace plap
