#pragma once

#include "plap/graph.hpp"

namespace plap {

/// Smoothed local variation ||d_i f|| per vertex:
/// values[i] = sqrt( sum_{j~i} w_ij (f_j - f_i)^2 + epsilon ), so every entry
/// is at least sqrt(epsilon) and never divides by zero downstream.
struct LocalVariation {
    std::vector<double> values;
    double epsilon = 0.0;
};

/// (Lf)_j = sum_{i~j} w_ij (f_j - f_i). Linear, self-adjoint, positive
/// semi-definite; identical to -1/2 div(grad f).
VertexFunction laplacian(const SparseGraph& g, const VertexFunction& f);

LocalVariation local_variation(const SparseGraph& g, const VertexFunction& f, double epsilon);

/// (Kf)_j = 1/2 sum_{i~j} w_ij (1/||d_i f|| + 1/||d_j f||) (f_j - f_i),
/// with smoothed variations. Equals p_laplacian at p = 1.
VertexFunction curvature(const SparseGraph& g, const VertexFunction& f, double epsilon);

/// (L_p f)_j = 1/2 sum_{i~j} w_ij (||d_i f||^{p-2} + ||d_j f||^{p-2}) (f_j - f_i).
/// Reduces exactly to laplacian at p = 2 and to curvature at p = 1.
/// Requires p >= 1 and epsilon > 0.
VertexFunction p_laplacian(const SparseGraph& g, const VertexFunction& f, double p,
                           double epsilon);

/// Smoothness functional 1/2 sum_i ||d_i f||^p with smoothed variations.
/// Its gradient in f is exactly p * p_laplacian(f); at p = 2 that is
/// 2 * laplacian(f) and at p = 1 it is curvature(f).
double energy(const SparseGraph& g, const VertexFunction& f, double p, double epsilon);

/// energy(f) + mu/2 * <f - y, f - y>. Requires mu > 0.
double objective(const SparseGraph& g, const VertexFunction& f, const VertexFunction& y,
                 double p, double mu, double epsilon);

namespace detail {
void require_epsilon(double epsilon);
void require_exponent(double p);
/// v^(p-2) evaluated as exp((p-2) ln v); exact 1.0 at p = 2 for any v > 0.
double variation_power(double v, double p);
}  // namespace detail

}  // namespace plap
