#pragma once

#include "oddkit/matrix.hpp"
#include "oddkit/neighbors.hpp"

namespace oddkit {

// Fast angle-based outlier detection. For query x with k-NN neighbor set N,
// over all unordered pairs (y, z) in N:
//
//   w = <y - x, z - x> / (|y - x|^2 * |z - x|^2)
//
// The angle-based outlier factor is the variance of the w values; outliers
// see their neighbors through a narrow angle range, so low variance means
// anomalous. Scores are negated ABOF so that larger = more anomalous, like
// every other detector here.
//
// Pairs where either difference vector has norm < 1e-12 are skipped to keep
// duplicates from blowing up the division; if every pair is skipped the
// score is 0.

/// Throws std::invalid_argument unless k >= 2 and k fits the effective
/// neighbor count (k < train rows when exclude_self).
ScoreVector abod_scores(const NeighborIndex& index, const DataMatrix& query,
                        std::size_t k, bool exclude_self, int threads = 0);

ScoreVector abod_scores(const DataMatrix& train, const DataMatrix& query,
                        std::size_t k, bool exclude_self = false, int threads = 0);

}  // namespace oddkit
