#include "plap/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

namespace detail {

void require_vertex_sized(const SparseGraph& g, const VertexFunction& f, const char* what) {
    if (f.size() != g.vertex_count())
        throw std::invalid_argument(std::string(what) + ": vertex function has length " +
                                    std::to_string(f.size()) + ", graph has " +
                                    std::to_string(g.vertex_count()) + " vertices");
}

void require_slot_sized(const SparseGraph& g, const EdgeFunction& F, const char* what) {
    if (F.size() != g.slot_count())
        throw std::invalid_argument(std::string(what) + ": edge function has " +
                                    std::to_string(F.size()) + " slots, graph has " +
                                    std::to_string(g.slot_count()));
}

}  // namespace detail

SparseGraph SparseGraph::build(VertexId n, std::span<const WeightedEdge> edges) {
    for (const auto& e : edges) {
        if (e.u >= n || e.v >= n)
            throw std::invalid_argument("build: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range for n=" +
                                        std::to_string(n));
        if (e.u == e.v)
            throw std::invalid_argument("build: self-loop at vertex " + std::to_string(e.u));
        if (!(e.weight >= 0.0) || !std::isfinite(e.weight))
            throw std::invalid_argument("build: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") has invalid weight " +
                                        std::to_string(e.weight));
    }

    SparseGraph g;
    g.n_ = n;
    g.row_ptr_.assign(std::size_t(n) + 1, 0);
    for (const auto& e : edges) {
        ++g.row_ptr_[e.u + 1];
        ++g.row_ptr_[e.v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.row_ptr_[i] += g.row_ptr_[i - 1];

    const std::size_t slots = g.row_ptr_[n];
    g.col_.resize(slots);
    g.w_.resize(slots);
    std::vector<std::size_t> cursor(g.row_ptr_.begin(), g.row_ptr_.end() - 1);
    for (const auto& e : edges) {
        g.col_[cursor[e.u]] = e.v;
        g.w_[cursor[e.u]++] = e.weight;
        g.col_[cursor[e.v]] = e.u;
        g.w_[cursor[e.v]++] = e.weight;
    }

    // Sort each neighbor list by index; duplicate pairs become adjacent.
    for (VertexId u = 0; u < n; ++u) {
        const std::size_t lo = g.row_ptr_[u], hi = g.row_ptr_[u + 1];
        std::vector<std::pair<VertexId, double>> row;
        row.reserve(hi - lo);
        for (std::size_t s = lo; s < hi; ++s) row.emplace_back(g.col_[s], g.w_[s]);
        std::sort(row.begin(), row.end());
        for (std::size_t i = 0; i + 1 < row.size(); ++i)
            if (row[i].first == row[i + 1].first)
                throw std::invalid_argument("build: duplicate edge {" + std::to_string(u) + "," +
                                            std::to_string(row[i].first) + "}");
        for (std::size_t i = 0; i < row.size(); ++i) {
            g.col_[lo + i] = row[i].first;
            g.w_[lo + i] = row[i].second;
        }
    }

    g.finalize();
    return g;
}

SparseGraph SparseGraph::build(VertexId n, std::initializer_list<WeightedEdge> edges) {
    return build(n, std::span<const WeightedEdge>(edges.begin(), edges.size()));
}

SparseGraph SparseGraph::unchecked_from_csr(VertexId n, std::vector<std::size_t> row_ptr,
                                            std::vector<VertexId> col,
                                            std::vector<double> weights) {
    SparseGraph g;
    g.n_ = n;
    g.row_ptr_ = std::move(row_ptr);
    g.col_ = std::move(col);
    g.w_ = std::move(weights);
    g.finalize();
    return g;
}

void SparseGraph::finalize() {
    const std::size_t slots = col_.size();
    rev_.resize(slots);
    for (VertexId u = 0; u < n_; ++u) {
        for (std::size_t s = row_ptr_[u]; s < row_ptr_[u + 1]; ++s) {
            auto r = find_slot(col_[s], u);
            if (!r)
                throw std::invalid_argument("graph: missing reverse of edge " + std::to_string(u) +
                                            "->" + std::to_string(col_[s]));
            rev_[s] = *r;
        }
    }
    deg_.assign(n_, 0.0);
    for (VertexId u = 0; u < n_; ++u) {
        double d = 0.0;
        for (std::size_t s = row_ptr_[u]; s < row_ptr_[u + 1]; ++s) d += w_[s];
        deg_[u] = d;
    }
}

std::optional<std::size_t> SparseGraph::find_slot(VertexId u, VertexId v) const {
    const auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v);
    if (it == row.end() || *it != v) return std::nullopt;
    return row_ptr_[u] + static_cast<std::size_t>(it - row.begin());
}

double inner_product(const VertexFunction& f, const VertexFunction& g) {
    if (f.size() != g.size())
        throw std::invalid_argument("inner_product: length mismatch (" + std::to_string(f.size()) +
                                    " vs " + std::to_string(g.size()) + ")");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
    return s;
}

double inner_product(const SparseGraph& g, const EdgeFunction& F, const EdgeFunction& G) {
    detail::require_slot_sized(g, F, "inner_product");
    detail::require_slot_sized(g, G, "inner_product");
    double s = 0.0;
    for (std::size_t i = 0; i < F.size(); ++i) s += F[i] * G[i];
    return s;
}

EdgeFunction gradient(const SparseGraph& g, const VertexFunction& f) {
    detail::require_vertex_sized(g, f, "gradient");
    EdgeFunction out(g.slot_count());
    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId u = 0; u < n; ++u) {
        const auto cols = g.neighbors(u);
        const auto ws = g.edge_weights(u);
        const std::size_t base = g.row_begin(u);
        for (std::size_t i = 0; i < cols.size(); ++i)
            out[base + i] = std::sqrt(ws[i]) * (f[cols[i]] - f[u]);
    }
    return out;
}

VertexFunction divergence(const SparseGraph& g, const EdgeFunction& F) {
    detail::require_slot_sized(g, F, "divergence");
    VertexFunction out(g.vertex_count());
    const auto n = g.vertex_count();
#pragma omp parallel for schedule(static)
    for (VertexId u = 0; u < n; ++u) {
        const auto ws = g.edge_weights(u);
        const std::size_t base = g.row_begin(u);
        double acc = 0.0;
        for (std::size_t i = 0; i < ws.size(); ++i) {
            const std::size_t s = base + i;
            acc += std::sqrt(ws[i]) * (F[s] - F[g.reverse_slot(s)]);
        }
        out[u] = acc;
    }
    return out;
}

}  // namespace plap
