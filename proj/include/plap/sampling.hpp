#pragma once

#include "plap/dataset.hpp"

#include <cstdint>

namespace plap {

/// Cluster-centroids under-sampling: keeps every minority (fraud) row
/// unchanged and replaces the majority rows with k-means centroids, where
/// k = round(minority_count / ratio). Output rows are minority first, then
/// the k centroid rows labeled normal. Throws if the implied k exceeds the
/// majority count or a class is empty.
LabeledDataset cluster_centroids_undersample(const LabeledDataset& ds, double ratio,
                                             std::uint64_t seed);

/// Random train/test partition preserving class proportions to within one
/// row per class (largest-remainder rounding). Returns a copy of the dataset
/// with the partition filled in; deterministic for a fixed seed.
LabeledDataset stratified_split(const LabeledDataset& ds, std::size_t train_count,
                                std::uint64_t seed);

}  // namespace plap
