#include "plap/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace plap {

std::size_t LabeledDataset::count(Label l) const {
    return static_cast<std::size_t>(std::count(labels.begin(), labels.end(), l));
}

std::vector<std::string> canonical_feature_names() {
    std::vector<std::string> names;
    names.reserve(30);
    names.emplace_back("Time");
    for (int i = 1; i <= 28; ++i) names.emplace_back("V" + std::to_string(i));
    names.emplace_back("Amount");
    return names;
}

namespace {

std::string_view strip_cell(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
        s.remove_prefix(1);
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_line(std::string_view line, std::vector<std::string_view>& out) {
    out.clear();
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string_view::npos) {
            out.push_back(strip_cell(line.substr(start)));
            break;
        }
        out.push_back(strip_cell(line.substr(start, pos - start)));
        start = pos + 1;
    }
    return out;
}

double parse_number(std::string_view cell, std::size_t row, const std::string& column) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
    if (ec != std::errc{} || ptr != cell.data() + cell.size())
        throw std::runtime_error("load_csv: non-numeric cell \"" + std::string(cell) +
                                 "\" at data row " + std::to_string(row) + ", column " + column);
    return value;
}

}  // namespace

LabeledDataset load_csv(const std::filesystem::path& path) {
    std::ifstream file(path);
    if (!file) throw std::runtime_error("load_csv: cannot open " + path.string());

    std::string line;
    if (!std::getline(file, line) || line.empty())
        throw std::runtime_error("load_csv: " + path.string() + " is empty or has no header");

    std::vector<std::string_view> cells;
    split_line(line, cells);
    std::vector<std::string> header(cells.begin(), cells.end());

    const std::vector<std::string> names = canonical_feature_names();
    std::vector<std::size_t> feature_cols(names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
        const auto it = std::find(header.begin(), header.end(), names[i]);
        if (it == header.end())
            throw std::runtime_error("load_csv: missing column " + names[i]);
        feature_cols[i] = static_cast<std::size_t>(it - header.begin());
    }
    const auto class_it = std::find(header.begin(), header.end(), "Class");
    if (class_it == header.end()) throw std::runtime_error("load_csv: missing column Class");
    const std::size_t class_col = static_cast<std::size_t>(class_it - header.begin());

    LabeledDataset ds;
    ds.feature_names = names;
    std::vector<double> buffer;
    std::size_t row = 0;
    while (std::getline(file, line)) {
        if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
        ++row;
        split_line(line, cells);
        if (cells.size() != header.size())
            throw std::runtime_error("load_csv: data row " + std::to_string(row) + " has " +
                                     std::to_string(cells.size()) + " cells, header has " +
                                     std::to_string(header.size()));
        for (std::size_t i = 0; i < names.size(); ++i)
            buffer.push_back(parse_number(cells[feature_cols[i]], row, names[i]));
        const double cls = parse_number(cells[class_col], row, "Class");
        if (cls != 0.0 && cls != 1.0)
            throw std::runtime_error("load_csv: Class must be 0 or 1, got " +
                                     std::to_string(cls) + " at data row " + std::to_string(row));
        ds.labels.push_back(cls == 1.0 ? Label::fraud : Label::normal);
    }
    if (row == 0) throw std::runtime_error("load_csv: " + path.string() + " has no data rows");

    ds.features.rows = row;
    ds.features.cols = names.size();
    ds.features.data = std::move(buffer);
    return ds;
}

void write_csv(const std::filesystem::path& path, const LabeledDataset& ds) {
    std::ofstream file(path);
    if (!file) throw std::runtime_error("write_csv: cannot open " + path.string());

    const auto& names = ds.feature_names.empty() ? canonical_feature_names() : ds.feature_names;
    for (std::size_t j = 0; j < names.size(); ++j) file << names[j] << ',';
    file << "Class\n";

    char buf[64];
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto row = ds.features.row(i);
        for (double v : row) {
            const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
            file.write(buf, ptr - buf);
            file.put(',');
        }
        file << (ds.labels[i] == Label::fraud ? '1' : '0') << '\n';
    }
    if (!file) throw std::runtime_error("write_csv: write failed for " + path.string());
}

StandardizationStats standardize_features(FeatureMatrix& m) {
    StandardizationStats stats;
    stats.mean.assign(m.cols, 0.0);
    stats.stddev.assign(m.cols, 1.0);
    if (m.rows == 0) return stats;

    for (std::size_t i = 0; i < m.rows; ++i) {
        const auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) stats.mean[j] += row[j];
    }
    for (std::size_t j = 0; j < m.cols; ++j) stats.mean[j] /= static_cast<double>(m.rows);

    std::vector<double> var(m.cols, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        const auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) {
            const double d = row[j] - stats.mean[j];
            var[j] += d * d;
        }
    }
    for (std::size_t j = 0; j < m.cols; ++j) {
        var[j] /= static_cast<double>(m.rows);
        if (var[j] > 0.0) {
            stats.stddev[j] = std::sqrt(var[j]);
        } else {
            stats.stddev[j] = 1.0;
            stats.clamped_columns.push_back(j);
        }
    }

#pragma omp parallel for schedule(static)
    for (std::size_t i = 0; i < m.rows; ++i) {
        auto row = m.row(i);
        for (std::size_t j = 0; j < m.cols; ++j) row[j] = (row[j] - stats.mean[j]) / stats.stddev[j];
    }
    return stats;
}

}  // namespace plap
