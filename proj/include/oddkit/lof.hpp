#pragma once

#include <memory>

#include "oddkit/matrix.hpp"
#include "oddkit/neighbors.hpp"

namespace oddkit {

// Local Outlier Factor. Scores are density ratios: ~1 inside uniform
// regions, > 1 for points sparser than their neighbors.
//
//   reach-dist_k(a, b) = max(k-distance(b), d(a, b))
//   lrd(a)             = 1 / mean_b reach-dist_k(a, b)   over a's k neighbors
//   LOF(a)             = mean_b lrd(b) / lrd(a)
//
// Duplicate guard: a zero mean reach distance caps lrd at 1e12 instead of
// producing infinity, so a set of identical points scores LOF = 1.

inline constexpr double kLofZeroDistanceLrd = 1e12;

struct LofState {
    std::size_t k = 20;
    std::shared_ptr<const NeighborIndex> index;  // shared with persistence layer
    std::vector<double> k_distances;             // per train point
    std::vector<double> lrd;                     // per train point, positive finite
};

/// Builds train neighborhoods, k-distances and local reachability densities.
/// Throws std::invalid_argument unless 1 <= k < train rows.
LofState lof_fit(const DataMatrix& train, std::size_t k, int threads = 0);

/// LOF of each query row against the fitted train neighborhoods. With
/// exclude_self set, query row i is train point i (the fit path).
ScoreVector lof_scores(const LofState& state, const DataMatrix& query,
                       bool exclude_self, int threads = 0);

/// One-shot convenience: fit on train, score query.
ScoreVector lof_scores(const DataMatrix& train, const DataMatrix& query, std::size_t k,
                       bool exclude_self = false, int threads = 0);

}  // namespace oddkit
