#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "oddkit/matrix.hpp"

namespace oddkit {

// Isolation Forest. Each tree recursively splits a random subsample on a
// uniformly chosen feature at a uniform value in that feature's open range;
// anomalies isolate in few splits. The anomaly score for a query is
//
//   s(x) = 2^(-E[h(x)] / c(psi))
//
// where h(x) is the path depth plus c(size) at a truncated leaf and c(n) is
// the average unsuccessful-search path length of a binary search tree.

struct IsoNode {
    int feature = -1;        // -1 marks an external (leaf) node
    double split = 0.0;
    int left = -1;
    int right = -1;
    std::uint32_t size = 0;  // data slice size at an external node
};

struct IsoTree {
    std::vector<IsoNode> nodes;  // node 0 is the root
};

struct IsoForest {
    std::vector<IsoTree> trees;
    std::size_t psi = 256;       // per-tree subsample size
    std::size_t max_depth = 8;   // ceil(log2(psi))
    std::size_t dim = 0;         // train column count
    std::uint64_t seed = 42;
};

/// c(n): expected path length normalizer. c(0) = c(1) = 0, c(2) = 1,
/// otherwise 2(ln(n-1) + gamma) - 2(n-1)/n with gamma = 0.5772156649.
double average_path_length(std::size_t n);

/// Grows `t` trees on independently seeded subsamples (tree i uses child
/// stream i of `seed`). psi is clamped to the train row count. Deterministic
/// for a fixed seed regardless of thread count.
/// Throws std::invalid_argument unless t >= 1, psi >= 2 and train rows >= 2.
IsoForest iforest_fit(const DataMatrix& train, std::size_t t, std::size_t psi,
                      std::uint64_t seed, int threads = 0);

/// Path length h(x) of one point through one tree, including the c(size)
/// adjustment at the external node.
double iforest_path_length(const IsoTree& tree, std::span<const double> x);

/// Scores in (0, 1]; larger = more anomalous.
ScoreVector iforest_scores(const IsoForest& forest, const DataMatrix& query, int threads = 0);

}  // namespace oddkit
