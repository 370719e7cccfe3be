#pragma once

#include "plap/graph.hpp"

#include <cstddef>

namespace plap {

struct SolverConfig {
    double p = 2.0;
    double mu = 1.0;
    double epsilon = 1e-10;
    double tol = 1e-9;        // max-norm change between sweeps
    std::size_t max_iter = 2000;
};

void validate(const SolverConfig& cfg);

/// Per-sweep update coefficients derived from the current iterate.
/// edge_m is slot-indexed and symmetric across reverse slots:
///   m_uv = 1/2 w_uv (||d_u f||^(p-2) + ||d_v f||^(p-2)).
/// Row u of edge_p holds m_uv / (sum_{v~u} m_uv + mu); diag_p[u] holds
/// mu / (sum_{v~u} m_uv + mu). Each row of (edge_p, diag_p) sums to 1.
struct IterationCoefficients {
    std::vector<double> edge_m;   // per slot
    std::vector<double> edge_p;   // per slot
    std::vector<double> diag_p;   // per vertex
};

IterationCoefficients coefficients(const SparseGraph& g, const VertexFunction& f,
                                   const SolverConfig& cfg);

struct SolveReport {
    VertexFunction f;
    std::size_t iterations = 0;
    double final_delta = 0.0;  // max |f_new - f_old| at the last sweep
    double residual = 0.0;     // max-norm stationarity residual of the final iterate
    bool converged = false;
};

/// One simultaneous (Jacobi) sweep: next[j] = sum_{i~j} p_ji f_i + p_jj y_j,
/// with the coefficients recomputed from `current`. `next` must not alias
/// `current`. Returns the max-norm change.
double jacobi_sweep(const SparseGraph& g, const VertexFunction& current, const VertexFunction& y,
                    const SolverConfig& cfg, VertexFunction& next);

/// Fixed-point iteration for L_p f + mu (f - y) = 0, starting from f = y.
/// Every iterate is a per-vertex convex combination of the previous iterate
/// and y, so iterates stay inside the range of y. Runs until the max-norm
/// change drops to cfg.tol or cfg.max_iter sweeps; non-convergence is
/// reported via the flag, not an error. Throws on non-finite iterates.
SolveReport solve_fixed_point(const SparseGraph& g, const VertexFunction& y,
                              const SolverConfig& cfg);

/// Exact solve of the p = 2 stationarity system (L + mu I) f = mu y via
/// sparse Cholesky. The matrix is assembled from the raw adjacency arrays,
/// independent of the operator sweeps, so this doubles as an oracle for
/// solve_fixed_point at p = 2.
VertexFunction solve_p2_direct(const SparseGraph& g, const VertexFunction& y, double mu);

/// max_j | (L_p f)_j + mu (f_j - y_j) |.
double stationarity_residual(const SparseGraph& g, const VertexFunction& f,
                             const VertexFunction& y, const SolverConfig& cfg);

}  // namespace plap
