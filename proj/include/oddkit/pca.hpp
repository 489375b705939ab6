#pragma once

#include <vector>

#include "oddkit/matrix.hpp"

namespace oddkit {

// PCA-based outlier scores: the squared projections of a centered point onto
// the principal axes, each weighted by the inverse eigenvalue. With all
// components kept this is the squared Mahalanobis distance to the train
// distribution, so points off the principal subspace or far along minor axes
// score high.

struct PcaState {
    std::vector<double> mean;        // d
    DataMatrix components;           // kept x d, orthonormal rows
    std::vector<double> eigenvalues; // kept, descending, all positive
    std::size_t dim = 0;

    std::size_t kept() const { return eigenvalues.size(); }
};

/// Eigendecomposition of the population covariance (divide by n) of the
/// mean-centered train data. Components with eigenvalue < 1e-9 * max
/// eigenvalue are dropped.
/// Throws std::invalid_argument for fewer than 2 train rows.
PcaState pca_fit(const DataMatrix& train);

/// Sum over kept components of (projection)^2 / eigenvalue.
ScoreVector pca_scores(const PcaState& state, const DataMatrix& query, int threads = 0);

}  // namespace oddkit
