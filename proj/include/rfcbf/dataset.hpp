#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rfcbf {

/// Dense row-major numeric table. Missing cells are stored as NaN.
struct NumericTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> values;  // rows * cols

    NumericTable() = default;
    NumericTable(std::size_t r, std::size_t c)
        : rows(r), cols(c), values(r * c, 0.0) {}

    double at(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
    double& at(std::size_t r, std::size_t c) { return values[r * cols + c]; }
    const double* row(std::size_t r) const { return values.data() + r * cols; }
};

inline bool is_missing(double v) { return std::isnan(v); }
bool has_missing(const NumericTable& t);

/// Numeric feature matrix plus class labels; the pipeline input.
struct RawDataset {
    NumericTable features;                  // M x N, NaN = missing
    std::vector<std::int32_t> labels;       // length M, values in [0, class_count)
    std::vector<std::string> feature_names; // N, unique
    std::vector<std::string> class_names;   // class_count, first-appearance order
    std::int32_t class_count = 0;
    std::string name;

    std::size_t row_count() const { return features.rows; }
    std::size_t feature_count() const { return features.cols; }
};

/// Throws std::invalid_argument if the dataset breaks its invariants.
void validate(const RawDataset& data);

/// New dataset containing the given rows, in the given order.
RawDataset take_rows(const RawDataset& data, const std::vector<std::size_t>& rows);

/// One feature as category codes in [0, cardinality).
struct DiscreteColumn {
    std::vector<std::int32_t> codes;
    std::int32_t cardinality = 0;
};

/// Categorical view of a dataset: the domain of the entropy/SU math.
struct DiscreteDataset {
    std::vector<DiscreteColumn> columns;  // N columns of equal length M
    DiscreteColumn class_column;

    std::size_t row_count() const { return class_column.codes.size(); }
    std::size_t feature_count() const { return columns.size(); }
};

}  // namespace rfcbf
