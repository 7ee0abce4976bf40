#pragma once

#include <cstddef>
#include <vector>

#include "rfcbf/dataset.hpp"

namespace rfcbf {

/// Replace every missing cell by the mean of that feature over the
/// n_neighbors nearest rows (Euclidean distance over mutually observed
/// features, rescaled by the fraction observed). Observed cells are
/// never altered.
RawDataset impute_knn(const RawDataset& data, int n_neighbors = 5);

/// Impute missing cells of `target` from the complete `reference` table
/// (the training partition). Distances use the target row's observed
/// coordinates only.
NumericTable impute_against(const NumericTable& target,
                            const NumericTable& reference,
                            int n_neighbors = 5);

/// Per-feature population mean and standard deviation.
struct ColumnStats {
    std::vector<double> mean;
    std::vector<double> stddev;  // 0 marks a constant feature
};

ColumnStats fit_standardize(const RawDataset& data);

/// (x - mean) / stddev per cell; constant features map to all-zeros.
RawDataset apply_standardize(const RawDataset& data, const ColumnStats& stats);

/// Fit-and-apply in one step. Requires a fully observed table.
RawDataset standardize(const RawDataset& data, ColumnStats* stats_out = nullptr);

/// Per-feature [lo, hi] range for equal-width binning.
struct BinGrid {
    std::vector<double> lo;
    std::vector<double> hi;
    int bins = 0;
};

BinGrid fit_bins(const RawDataset& data, int bins);

/// code = floor(bins * (x - lo) / (hi - lo)), clamped to [0, bins-1].
/// Constant features get code 0 with cardinality 1. Out-of-range values
/// (test rows binned with training edges) clamp to the boundary bins.
DiscreteDataset apply_bins(const RawDataset& data, const BinGrid& grid);

DiscreteDataset discretize(const RawDataset& data, int bins = 10);

}  // namespace rfcbf
