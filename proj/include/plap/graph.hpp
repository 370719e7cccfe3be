#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace plap {

using VertexId = std::uint32_t;

struct WeightedEdge {
    VertexId u = 0;
    VertexId v = 0;
    double weight = 0.0;
};

/// Real-valued function on the vertices of a graph (one value per vertex).
struct VertexFunction {
    std::vector<double> values;

    VertexFunction() = default;
    explicit VertexFunction(std::size_t n, double fill = 0.0) : values(n, fill) {}
    VertexFunction(std::initializer_list<double> init) : values(init) {}

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }
};

/// Real-valued function on the directed edges of a graph. Values are indexed
/// by CSR slot: slot s of row u is the directed edge u -> neighbors(u)[s'].
/// Both orientations of every stored undirected edge are addressable.
struct EdgeFunction {
    std::vector<double> values;

    EdgeFunction() = default;
    explicit EdgeFunction(std::size_t slots, double fill = 0.0) : values(slots, fill) {}

    std::size_t size() const { return values.size(); }
    double& operator[](std::size_t s) { return values[s]; }
    double operator[](std::size_t s) const { return values[s]; }
};

/// Symmetric weighted graph without self-loops, stored in CSR form with both
/// directions of every undirected edge materialized. Neighbor lists are sorted
/// by index, so all sweeps are deterministic. Immutable after construction and
/// safe to share across threads.
class SparseGraph {
public:
    SparseGraph() = default;

    /// Build from a list of unordered weighted pairs. Each pair must appear
    /// once; indices must be in range, weights nonnegative, no self-loops.
    /// Throws std::invalid_argument with a diagnostic otherwise.
    static SparseGraph build(VertexId n, std::span<const WeightedEdge> edges);
    static SparseGraph build(VertexId n, std::initializer_list<WeightedEdge> edges);

    /// Assemble directly from raw CSR arrays, skipping validation. Exists for
    /// fault-injection in diagnostics and tests; everything else uses build().
    static SparseGraph unchecked_from_csr(VertexId n,
                                          std::vector<std::size_t> row_ptr,
                                          std::vector<VertexId> col,
                                          std::vector<double> weights);

    VertexId vertex_count() const { return n_; }
    std::size_t undirected_edge_count() const { return col_.size() / 2; }
    /// Number of directed slots (twice the undirected edge count).
    std::size_t slot_count() const { return col_.size(); }

    std::span<const VertexId> neighbors(VertexId u) const {
        return {col_.data() + row_ptr_[u], col_.data() + row_ptr_[u + 1]};
    }
    std::span<const double> edge_weights(VertexId u) const {
        return {w_.data() + row_ptr_[u], w_.data() + row_ptr_[u + 1]};
    }

    /// First slot of row u; slots of row u are [row_begin(u), row_begin(u+1)).
    std::size_t row_begin(VertexId u) const { return row_ptr_[u]; }
    std::size_t row_end(VertexId u) const { return row_ptr_[u + 1]; }

    /// Slot of the directed edge u -> v, if the pair is stored.
    std::optional<std::size_t> find_slot(VertexId u, VertexId v) const;
    /// Slot of the opposite orientation of slot s.
    std::size_t reverse_slot(std::size_t s) const { return rev_[s]; }
    VertexId slot_target(std::size_t s) const { return col_[s]; }
    double slot_weight(std::size_t s) const { return w_[s]; }

    double degree(VertexId u) const { return deg_[u]; }
    const std::vector<double>& degrees() const { return deg_; }

    const std::vector<std::size_t>& row_ptr() const { return row_ptr_; }
    const std::vector<VertexId>& col() const { return col_; }
    const std::vector<double>& weights() const { return w_; }

private:
    void finalize();  // rev_ and deg_ from the CSR arrays

    VertexId n_ = 0;
    std::vector<std::size_t> row_ptr_{0};
    std::vector<VertexId> col_;
    std::vector<double> w_;
    std::vector<std::size_t> rev_;
    std::vector<double> deg_;
};

/// <f, g> = sum_i f_i g_i. Throws on length mismatch.
double inner_product(const VertexFunction& f, const VertexFunction& g);

/// <F, G> = sum over all directed slots of F_s G_s. Throws on size mismatch.
double inner_product(const SparseGraph& g, const EdgeFunction& F, const EdgeFunction& G);

/// Difference operator: (df)_{uv} = sqrt(w_uv) * (f_v - f_u) on every directed
/// slot. Antisymmetric between a slot and its reverse.
EdgeFunction gradient(const SparseGraph& g, const VertexFunction& f);

/// Adjoint of the gradient up to sign: (div F)_u = sum over neighbors v of
/// sqrt(w_uv) * (F_{uv} - F_{vu}).
VertexFunction divergence(const SparseGraph& g, const EdgeFunction& F);

namespace detail {
void require_vertex_sized(const SparseGraph& g, const VertexFunction& f, const char* what);
void require_slot_sized(const SparseGraph& g, const EdgeFunction& F, const char* what);
}  // namespace detail

}  // namespace plap
