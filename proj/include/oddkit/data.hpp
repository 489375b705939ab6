#pragma once

#include <cstdint>
#include <utility>

#include "oddkit/matrix.hpp"

namespace oddkit {

/// Feature matrix plus ground-truth labels (0 = inlier, 1 = outlier).
struct LabeledDataset {
    DataMatrix X;
    LabelVector y;
};

struct GenParams {
    std::size_t n_train = 200;
    std::size_t n_test = 100;
    std::size_t n_features = 2;
    double contamination = 0.1;
    std::uint64_t seed = 42;
};

/// Synthetic train/test pair: inliers i.i.d. Normal(0,1) per feature,
/// outliers i.i.d. Uniform(-6,6), round(contamination * n) outliers at the
/// tail indices of each split. The train split draws from child stream 0 of
/// the seed and the test split from child stream 1; within a split, inlier
/// rows are drawn row-major first, then outlier rows.
/// Throws std::invalid_argument on zero counts or contamination outside (0, 0.5].
std::pair<LabeledDataset, LabeledDataset> generate_data(const GenParams& params);

}  // namespace oddkit
