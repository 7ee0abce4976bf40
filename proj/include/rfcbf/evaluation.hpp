#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rfcbf/dataset.hpp"
#include "rfcbf/selection.hpp"

namespace rfcbf {

/// class_count x class_count confusion matrix, row = actual,
/// column = predicted.
struct ConfusionCounts {
    std::size_t class_count = 0;
    std::vector<std::size_t> counts;

    ConfusionCounts() = default;
    explicit ConfusionCounts(std::size_t classes)
        : class_count(classes), counts(classes * classes, 0) {}

    std::size_t& at(std::size_t actual, std::size_t predicted) {
        return counts[actual * class_count + predicted];
    }
    std::size_t at(std::size_t actual, std::size_t predicted) const {
        return counts[actual * class_count + predicted];
    }
    std::size_t total() const;
};

ConfusionCounts confusion(const std::vector<std::int32_t>& actual,
                          const std::vector<std::int32_t>& predicted,
                          std::size_t class_count);

/// Fraction of correct predictions: trace over total.
/// Throws if the matrix is empty.
double accuracy(const ConfusionCounts& conf);

/// Majority label among the k Euclidean-nearest training rows.
/// Vote ties resolve to the label of the nearest neighbor among the
/// tied classes; distance ties resolve to the lower training-row index.
std::vector<std::int32_t> knn_predict(const NumericTable& train_rows,
                                      const std::vector<std::int32_t>& train_labels,
                                      const NumericTable& test_rows, int k);

/// Fold index per row. Folds are near-equal in size (difference at most
/// one row) and preserve per-class proportions to within one row.
/// A pure function of (labels, folds, seed).
std::vector<int> stratified_kfold(const std::vector<std::int32_t>& labels,
                                  int folds, std::uint64_t seed);

struct PipelineOptions {
    Method method = Method::rfcbf;
    SelectionParams params;
    int repeats = 10;
    int folds = 10;
    int knn_k = 5;
    int impute_neighbors = 5;
    int workers = 1;
};

/// Result of one (repeat, fold) cell.
struct FoldOutcome {
    bool na = false;  // empty selection: no classifier could be trained
    double accuracy = 0.0;
    std::vector<std::size_t> selected;
    double selection_seconds = 0.0;
};

/// One train/test split evaluated end to end: impute and standardize
/// with training statistics, discretize with training bin edges, select
/// on the training partition only, then score a KNN restricted to the
/// selected features.
FoldOutcome run_cv_cell(const RawDataset& raw,
                        const std::vector<std::size_t>& train_idx,
                        const std::vector<std::size_t>& test_idx,
                        Method method, const SelectionParams& params,
                        int knn_k, int impute_neighbors,
                        std::uint64_t cell_seed);

struct CvReport {
    std::string method;
    SelectionParams params;
    int repeats = 0;
    int folds = 0;
    int knn_k = 0;

    // repeats x folds grids, row-major; accuracy is NaN for NA cells.
    std::vector<double> cell_accuracy;
    std::vector<int> cell_selected;
    std::vector<double> cell_selection_seconds;

    std::size_t na_cells = 0;
    double mean_accuracy = 0.0;  // over populated cells; NaN if all NA
    double accuracy_std = 0.0;
    double mean_selected_count = 0.0;
    double mean_selection_seconds = 0.0;
};

/// Stratified k-fold CV repeated `repeats` times with selection redone
/// inside every training fold. (repeat, fold) cells run on up to
/// `workers` threads; results are identical for any worker count.
CvReport evaluate_pipeline(const RawDataset& raw, const PipelineOptions& opts);

}  // namespace rfcbf
