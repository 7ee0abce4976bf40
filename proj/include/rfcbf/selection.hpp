#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rfcbf/dataset.hpp"
#include "rfcbf/rng.hpp"

namespace rfcbf {

struct SelectionParams {
    double delta = 0.01;          // relevance threshold in [0, 1]
    int sampling_times = 20;      // T
    double sampling_prob = 0.5;   // G in (0, 1]
    std::uint64_t seed = 1;
    int bins = 10;                // discretizer bin count
};

void validate(const SelectionParams& params);

struct FeatureScore {
    std::size_t feature_index = 0;
    double su_to_class = 0.0;
};

/// Features sorted by SU-to-class descending, ties by ascending index.
struct RankedList {
    std::vector<FeatureScore> entries;
};

/// One redundancy elimination event: `removed` was covered by the
/// earlier-ranked `kept_by` because su_pair >= su_class.
struct RemovalRecord {
    std::size_t removed = 0;
    std::size_t kept_by = 0;
    double su_pair = 0.0;
    double su_class = 0.0;
};

struct SelectionResult {
    std::vector<std::size_t> selected;  // rank order
    std::vector<double> scores;         // SU-to-class, parallel to selected
    double elapsed_seconds = 0.0;
    std::vector<RemovalRecord> removals;

    bool empty() const { return selected.empty(); }
};

// ---- FCBF -----------------------------------------------------------

/// Features with SU(F_i, C) >= delta, ranked.
RankedList relevance_pass(const DiscreteDataset& data, double delta);

/// Approximate-Markov-blanket elimination: walk the ranking, and under
/// each surviving predominant feature F_p remove every later F_q with
/// SU(F_p, F_q) >= SU(F_q, C).
SelectionResult redundancy_pass(const RankedList& ranked, const DiscreteDataset& data);

SelectionResult fcbf(const DiscreteDataset& data, double delta);

// ---- RFCBF ----------------------------------------------------------

/// Row subset drawn from a dataset; indices strictly increasing.
struct Subsample {
    std::vector<std::uint32_t> row_indices;
};

/// Bernoulli row selection with probability `prob`. Draws yielding
/// fewer than 2 rows or fewer than 2 distinct class labels are redrawn
/// up to 100 times; after that the full dataset is used.
Subsample resample(const DiscreteDataset& data, double prob, SplitMix64& rng);

/// The T subsample draws of one RFCBF pass. `pass_id`/`pair_id` key the
/// RNG stream so every (seed, pass, pair) pair sees its own sequence.
std::vector<Subsample> draw_subsamples(const DiscreteDataset& data, double prob,
                                       int times, std::uint64_t seed,
                                       std::uint64_t pass_id, std::uint64_t pair_id);

/// Mean of SU(x, y) over the given subsamples.
double averaged_su(std::size_t x_index, std::size_t y_index,
                   const DiscreteDataset& data,
                   const std::vector<Subsample>& subsamples);

/// SU against the class column, averaged over the given subsamples.
double averaged_su_to_class(std::size_t x_index, const DiscreteDataset& data,
                            const std::vector<Subsample>& subsamples);

/// FCBF with every SU estimate replaced by a T-subsample average:
/// one shared subsample set scores the relevance pass, and each pairwise
/// SU draws a fresh seed-derived set. Deterministic for a fixed seed.
SelectionResult rfcbf(const DiscreteDataset& data, const SelectionParams& params);

enum class Method { fcbf, rfcbf };

const char* method_name(Method m);
Method method_from_name(const std::string& name);

SelectionResult run_selection(Method method, const DiscreteDataset& data,
                              const SelectionParams& params);

}  // namespace rfcbf
