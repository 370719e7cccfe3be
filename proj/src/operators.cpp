#include "plap/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

namespace detail {

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("epsilon must be positive, got " + std::to_string(epsilon));
}

void require_exponent(double p) {
    if (!(p >= 1.0))
        throw std::invalid_argument("p must be >= 1, got " + std::to_string(p));
}

double variation_power(double v, double p) { return std::exp((p - 2.0) * std::log(v)); }

}  // namespace detail

VertexFunction laplacian(const SparseGraph& g, const VertexFunction& f) {
    detail::require_vertex_sized(g, f, "laplacian");
    VertexFunction out(g.vertex_count());
    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId j = 0; j < n; ++j) {
        const auto cols = g.neighbors(j);
        const auto ws = g.edge_weights(j);
        double acc = 0.0;
        for (std::size_t i = 0; i < cols.size(); ++i) acc += ws[i] * (f[j] - f[cols[i]]);
        out[j] = acc;
    }
    return out;
}

LocalVariation local_variation(const SparseGraph& g, const VertexFunction& f, double epsilon) {
    detail::require_vertex_sized(g, f, "local_variation");
    detail::require_epsilon(epsilon);
    LocalVariation lv;
    lv.epsilon = epsilon;
    lv.values.resize(g.vertex_count());
    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId i = 0; i < n; ++i) {
        const auto cols = g.neighbors(i);
        const auto ws = g.edge_weights(i);
        double acc = 0.0;
        for (std::size_t s = 0; s < cols.size(); ++s) {
            const double diff = f[cols[s]] - f[i];
            acc += ws[s] * diff * diff;
        }
        lv.values[i] = std::sqrt(acc + epsilon);
    }
    return lv;
}

namespace {

// Shared sweep for the variation-weighted operators: bracket[i] = ||d_i f||^(p-2).
VertexFunction variation_weighted_sweep(const SparseGraph& g, const VertexFunction& f, double p,
                                        double epsilon) {
    const LocalVariation lv = local_variation(g, f, epsilon);
    std::vector<double> bracket(lv.values.size());
    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId i = 0; i < n; ++i) bracket[i] = detail::variation_power(lv.values[i], p);

    VertexFunction out(n);
#pragma omp parallel for schedule(static)
    for (VertexId j = 0; j < n; ++j) {
        const auto cols = g.neighbors(j);
        const auto ws = g.edge_weights(j);
        double acc = 0.0;
        for (std::size_t s = 0; s < cols.size(); ++s) {
            const VertexId i = cols[s];
            acc += ws[s] * (0.5 * (bracket[i] + bracket[j])) * (f[j] - f[i]);
        }
        out[j] = acc;
    }
    return out;
}

}  // namespace

VertexFunction curvature(const SparseGraph& g, const VertexFunction& f, double epsilon) {
    return variation_weighted_sweep(g, f, 1.0, epsilon);
}

VertexFunction p_laplacian(const SparseGraph& g, const VertexFunction& f, double p,
                           double epsilon) {
    detail::require_exponent(p);
    return variation_weighted_sweep(g, f, p, epsilon);
}

double energy(const SparseGraph& g, const VertexFunction& f, double p, double epsilon) {
    detail::require_exponent(p);
    const LocalVariation lv = local_variation(g, f, epsilon);
    double acc = 0.0;
    for (double v : lv.values) acc += std::pow(v, p);
    return 0.5 * acc;
}

double objective(const SparseGraph& g, const VertexFunction& f, const VertexFunction& y, double p,
                 double mu, double epsilon) {
    if (!(mu > 0.0))
        throw std::invalid_argument("mu must be positive, got " + std::to_string(mu));
    detail::require_vertex_sized(g, y, "objective");
    double fit = 0.0;
    if (f.size() != y.size())
        throw std::invalid_argument("objective: f and y length mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = f[i] - y[i];
        fit += d * d;
    }
    return energy(g, f, p, epsilon) + 0.5 * mu * fit;
}

}  // namespace plap
