#pragma once

#include "plap/dataset.hpp"

#include <cstdint>

namespace plap {

struct KMeansResult {
    FeatureMatrix centroids;                // k x d
    std::vector<std::uint32_t> assignments; // per point, in [0, k)
    double inertia = 0.0;                   // sum of squared distances to assigned centroid
    std::vector<double> inertia_history;    // one entry per assignment pass, nonincreasing
    std::size_t iterations = 0;
};

/// Lloyd's algorithm with seeded k-means++ initialization. Deterministic for
/// fixed (X, k, seed): assignment ties go to the lower centroid index, sums
/// accumulate in fixed point order, and empty clusters are repaired by
/// promoting the point currently farthest from its centroid. Stops when the
/// relative inertia change drops below 1e-6, assignments stop moving, or
/// max_iter passes.
KMeansResult kmeans(const FeatureMatrix& X, std::size_t k, std::uint64_t seed,
                    std::size_t max_iter = 300);

}  // namespace plap
