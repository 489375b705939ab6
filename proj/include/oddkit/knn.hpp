#pragma once

#include "oddkit/matrix.hpp"
#include "oddkit/neighbors.hpp"

namespace oddkit {

enum class KnnMode { largest, mean, median };

struct KnnParams {
    std::size_t k = 5;
    KnnMode mode = KnnMode::largest;
};

/// kNN outlier scores: per query point, an aggregate of its k nearest train
/// distances (largest = distance to the k-th neighbor, mean, or median).
/// With exclude_self set, query row i is train point i and is skipped as its
/// own neighbor (the fit path).
/// Throws std::invalid_argument when k is out of range for the effective
/// neighbor count.
ScoreVector knn_scores(const NeighborIndex& index, const DataMatrix& query,
                       const KnnParams& params, bool exclude_self, int threads = 0);

/// Convenience overload building a kd-tree index over train.
ScoreVector knn_scores(const DataMatrix& train, const DataMatrix& query,
                       const KnnParams& params, bool exclude_self = false, int threads = 0);

}  // namespace oddkit
