#include "plap/sampling.hpp"
#include "plap/kmeans.hpp"
#include "plap/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace plap {

LabeledDataset cluster_centroids_undersample(const LabeledDataset& ds, double ratio,
                                             std::uint64_t seed) {
    if (!(ratio > 0.0) || ratio > 1.0)
        throw std::invalid_argument("undersample: ratio must be in (0, 1], got " +
                                    std::to_string(ratio));
    const std::size_t minority = ds.count(Label::fraud);
    const std::size_t majority = ds.count(Label::normal);
    if (minority == 0 || majority == 0)
        throw std::invalid_argument("undersample: both classes must be nonempty (fraud=" +
                                    std::to_string(minority) + ", normal=" +
                                    std::to_string(majority) + ")");

    const auto k = static_cast<std::size_t>(std::llround(static_cast<double>(minority) / ratio));
    if (k > majority)
        throw std::invalid_argument("undersample: ratio " + std::to_string(ratio) +
                                    " needs " + std::to_string(k) + " centroids but only " +
                                    std::to_string(majority) + " majority rows exist");

    const std::size_t d = ds.features.cols;
    FeatureMatrix majority_rows(majority, d);
    {
        std::size_t r = 0;
        for (std::size_t i = 0; i < ds.size(); ++i)
            if (ds.labels[i] == Label::normal) {
                std::copy_n(ds.features.row(i).data(), d, majority_rows.row(r).data());
                ++r;
            }
    }

    const KMeansResult km = kmeans(majority_rows, k, seed);

    LabeledDataset out;
    out.feature_names = ds.feature_names;
    out.features = FeatureMatrix(minority + k, d);
    out.labels.reserve(minority + k);
    std::size_t r = 0;
    for (std::size_t i = 0; i < ds.size(); ++i)
        if (ds.labels[i] == Label::fraud) {
            std::copy_n(ds.features.row(i).data(), d, out.features.row(r).data());
            out.labels.push_back(Label::fraud);
            ++r;
        }
    for (std::size_t c = 0; c < k; ++c) {
        std::copy_n(km.centroids.row(c).data(), d, out.features.row(r).data());
        out.labels.push_back(Label::normal);
        ++r;
    }
    return out;
}

LabeledDataset stratified_split(const LabeledDataset& ds, std::size_t train_count,
                                std::uint64_t seed) {
    const std::size_t n = ds.size();
    if (train_count == 0 || train_count >= n)
        throw std::invalid_argument("stratified_split: train_count " + std::to_string(train_count) +
                                    " out of range for " + std::to_string(n) + " rows");

    std::vector<std::size_t> fraud_idx, normal_idx;
    for (std::size_t i = 0; i < n; ++i)
        (ds.labels[i] == Label::fraud ? fraud_idx : normal_idx).push_back(i);

    // Per-class quotas: floors, then the remainder to the largest fraction.
    const double scale = static_cast<double>(train_count) / static_cast<double>(n);
    const double fraud_exact = static_cast<double>(fraud_idx.size()) * scale;
    std::size_t fraud_train = static_cast<std::size_t>(std::floor(fraud_exact));
    std::size_t normal_train = static_cast<std::size_t>(
        std::floor(static_cast<double>(normal_idx.size()) * scale));
    std::size_t assigned = fraud_train + normal_train;
    while (assigned < train_count) {
        const double fraud_frac = fraud_exact - static_cast<double>(fraud_train);
        // Give the next slot to the class with the larger remainder; the
        // fractions sum to an integer, so comparing one against 0.5 decides.
        if (fraud_frac >= 0.5 && fraud_train < fraud_idx.size())
            ++fraud_train;
        else
            ++normal_train;
        ++assigned;
    }
    fraud_train = std::min(fraud_train, fraud_idx.size());
    normal_train = train_count - fraud_train;
    if (normal_train > normal_idx.size())
        throw std::invalid_argument("stratified_split: class sizes cannot fill train_count");

    Rng rng(seed);
    rng.shuffle(fraud_idx);
    rng.shuffle(normal_idx);

    LabeledDataset out = ds;
    out.partition.assign(n, Split::test);
    for (std::size_t i = 0; i < fraud_train; ++i) out.partition[fraud_idx[i]] = Split::train;
    for (std::size_t i = 0; i < normal_train; ++i) out.partition[normal_idx[i]] = Split::train;
    return out;
}

}  // namespace plap
