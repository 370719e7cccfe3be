#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace plap {

enum class Label : std::uint8_t { normal = 0, fraud = 1 };
enum class Split : std::uint8_t { train = 0, test = 1 };

/// Dense row-major matrix of feature rows.
struct FeatureMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    FeatureMatrix() = default;
    FeatureMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    std::span<const double> row(std::size_t i) const { return {data.data() + i * cols, cols}; }
    std::span<double> row(std::size_t i) { return {data.data() + i * cols, cols}; }
    double& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

struct LabeledDataset {
    FeatureMatrix features;
    std::vector<Label> labels;
    std::vector<Split> partition;           // empty until a split is assigned
    std::vector<std::string> feature_names; // column order of `features`

    std::size_t size() const { return labels.size(); }
    std::size_t count(Label l) const;
    bool has_partition() const { return partition.size() == labels.size(); }
};

/// Reads the transaction CSV layout: header with Time, V1..V28, Amount, Class
/// (any column order, quotes tolerated). The 30 feature columns are stored in
/// that canonical order; Class 1 -> fraud, 0 -> normal. Throws std::runtime_error
/// with row/column diagnostics on malformed input.
LabeledDataset load_csv(const std::filesystem::path& path);

/// Writes features + Class column in the canonical layout, with shortest
/// round-trip number formatting.
void write_csv(const std::filesystem::path& path, const LabeledDataset& ds);

struct StandardizationStats {
    std::vector<double> mean;
    std::vector<double> stddev;               // clamped entries hold 1.0
    std::vector<std::size_t> clamped_columns; // zero-variance columns
};

/// Z-scores every column in place; zero-variance columns are clamped to unit
/// scale and reported back.
StandardizationStats standardize_features(FeatureMatrix& m);

std::vector<std::string> canonical_feature_names();

}  // namespace plap
