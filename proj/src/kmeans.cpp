#include "plap/kmeans.hpp"
#include "plap/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

namespace {

double sq_dist(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

constexpr double kRelTol = 1e-6;

// k-means++: first centroid uniform, then proportional to squared distance
// from the chosen set. Falls back to the first unchosen index when all
// remaining distances are zero (duplicate-heavy inputs).
FeatureMatrix seed_centroids(const FeatureMatrix& X, std::size_t k, Rng& rng) {
    const std::size_t m = X.rows, d = X.cols;
    FeatureMatrix centroids(k, d);
    std::vector<double> dist2(m, 0.0);
    std::vector<char> chosen(m, 0);

    std::size_t first = static_cast<std::size_t>(rng.below(m));
    std::copy_n(X.row(first).data(), d, centroids.row(0).data());
    chosen[first] = 1;

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m; ++i) dist2[i] = sq_dist(X.row(i), centroids.row(0));

    for (std::size_t c = 1; c < k; ++c) {
        double total = 0.0;
        for (std::size_t i = 0; i < m; ++i) total += dist2[i];

        std::size_t pick = m;
        if (total > 0.0) {
            const double r = rng.uniform() * total;
            double acc = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                acc += dist2[i];
                if (acc > r) {
                    pick = i;
                    break;
                }
            }
            if (pick == m) {  // fp roundoff at the far end
                for (std::size_t i = m; i-- > 0;)
                    if (dist2[i] > 0.0) {
                        pick = i;
                        break;
                    }
            }
        }
        if (pick == m) {
            for (std::size_t i = 0; i < m; ++i)
                if (!chosen[i]) {
                    pick = i;
                    break;
                }
        }
        chosen[pick] = 1;
        std::copy_n(X.row(pick).data(), d, centroids.row(c).data());

#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < m; ++i)
            dist2[i] = std::min(dist2[i], sq_dist(X.row(i), centroids.row(c)));
    }
    return centroids;
}

}  // namespace

KMeansResult kmeans(const FeatureMatrix& X, std::size_t k, std::uint64_t seed,
                    std::size_t max_iter) {
    const std::size_t m = X.rows, d = X.cols;
    if (k < 1 || k > m)
        throw std::invalid_argument("kmeans: k=" + std::to_string(k) +
                                    " out of range for " + std::to_string(m) + " points");
    for (double v : X.data)
        if (!std::isfinite(v)) throw std::invalid_argument("kmeans: non-finite input");

    Rng rng(seed);
    KMeansResult res;
    res.centroids = seed_centroids(X, k, rng);
    res.assignments.assign(m, 0);

    std::vector<double> point_dist2(m, 0.0);
    std::vector<std::size_t> members(m);
    std::vector<std::size_t> cluster_start(k + 1, 0);
    double prev_inertia = -1.0;

    for (std::size_t iter = 1; iter <= max_iter; ++iter) {
        // Assignment: nearest centroid, ties to the lower index.
        bool any_moved = false;
#pragma omp parallel for schedule(static) reduction(|| : any_moved)
        for (std::size_t i = 0; i < m; ++i) {
            const auto row = X.row(i);
            double best = sq_dist(row, res.centroids.row(0));
            std::uint32_t best_c = 0;
            for (std::size_t c = 1; c < k; ++c) {
                const double dd = sq_dist(row, res.centroids.row(c));
                if (dd < best) {
                    best = dd;
                    best_c = static_cast<std::uint32_t>(c);
                }
            }
            any_moved = any_moved || res.assignments[i] != best_c;
            res.assignments[i] = best_c;
            point_dist2[i] = best;
        }

        double inertia = 0.0;
        for (std::size_t i = 0; i < m; ++i) inertia += point_dist2[i];
        res.inertia = inertia;
        res.inertia_history.push_back(inertia);
        res.iterations = iter;

        if (!any_moved && iter > 1) break;
        if (prev_inertia >= 0.0) {
            const double change = prev_inertia - inertia;
            if (change <= kRelTol * std::max(prev_inertia, 1e-300)) break;
        }
        prev_inertia = inertia;

        // Member lists in ascending point order (deterministic reductions).
        std::fill(cluster_start.begin(), cluster_start.end(), 0);
        for (std::size_t i = 0; i < m; ++i) ++cluster_start[res.assignments[i] + 1];
        for (std::size_t c = 0; c < k; ++c) cluster_start[c + 1] += cluster_start[c];
        {
            std::vector<std::size_t> cursor(cluster_start.begin(), cluster_start.end() - 1);
            for (std::size_t i = 0; i < m; ++i) members[cursor[res.assignments[i]]++] = i;
        }

        // Update step: per-cluster mean over members in index order.
#pragma omp parallel for schedule(static)
        for (std::size_t c = 0; c < k; ++c) {
            const std::size_t lo = cluster_start[c], hi = cluster_start[c + 1];
            if (lo == hi) continue;  // repaired below
            auto centroid = res.centroids.row(c);
            std::fill(centroid.begin(), centroid.end(), 0.0);
            for (std::size_t s = lo; s < hi; ++s) {
                const auto row = X.row(members[s]);
                for (std::size_t j = 0; j < d; ++j) centroid[j] += row[j];
            }
            const double inv = 1.0 / static_cast<double>(hi - lo);
            for (std::size_t j = 0; j < d; ++j) centroid[j] *= inv;
        }

        // Repair empty clusters with the farthest points (ties to lower index).
        for (std::size_t c = 0; c < k; ++c) {
            if (cluster_start[c] != cluster_start[c + 1]) continue;
            std::size_t far = 0;
            double far_d = -1.0;
            for (std::size_t i = 0; i < m; ++i)
                if (point_dist2[i] > far_d) {
                    far_d = point_dist2[i];
                    far = i;
                }
            std::copy_n(X.row(far).data(), d, res.centroids.row(c).data());
            point_dist2[far] = 0.0;
        }
    }
    return res;
}

}  // namespace plap
