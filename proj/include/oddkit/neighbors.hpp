#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "oddkit/matrix.hpp"

namespace oddkit {

/// Exact Euclidean distance. Throws std::invalid_argument on dimension mismatch.
double euclidean(std::span<const double> a, std::span<const double> b);

struct NeighborResult {
    std::vector<std::size_t> indices;   // distinct train-point indices
    std::vector<double> distances;      // ascending, ties broken by smaller index
};

enum class IndexStrategy { brute, kdtree };

/// k-nearest-neighbor index over a fixed point set. Immutable after
/// construction; concurrent queries are safe. Both strategies return
/// identical results, including tie handling: candidates are ordered by
/// (squared distance, point index) and distances are sqrt'd at the end, so
/// the kd-tree path reproduces brute force bit-for-bit.
class NeighborIndex {
public:
    explicit NeighborIndex(DataMatrix points, IndexStrategy strategy = IndexStrategy::kdtree);

    /// The k nearest points to q, optionally excluding one train index (used
    /// when a train point queries the set it belongs to).
    /// Throws std::invalid_argument if k is 0 or exceeds the effective point
    /// count, or if q has the wrong dimension.
    NeighborResult query(std::span<const double> q, std::size_t k,
                         std::optional<std::size_t> exclude = std::nullopt) const;

    const DataMatrix& points() const { return points_; }
    std::size_t size() const { return points_.rows(); }
    std::size_t dim() const { return points_.cols(); }
    IndexStrategy strategy() const { return strategy_; }

private:
    struct Node {
        int axis = -1;            // -1 marks a leaf
        double split = 0.0;
        int left = -1;
        int right = -1;
        std::size_t begin = 0;    // leaf range into order_
        std::size_t end = 0;
    };

    // Bounded candidate set ordered by (d2, index); worst element on top.
    struct Candidates;

    int build(std::size_t begin, std::size_t end, std::size_t depth);
    void search(int node, std::span<const double> q,
                std::optional<std::size_t> exclude, Candidates& best) const;

    double dist2(std::span<const double> q, std::size_t point) const;

    DataMatrix points_;
    IndexStrategy strategy_;
    std::vector<Node> nodes_;
    std::vector<std::size_t> order_;  // permutation of point indices, leaf-partitioned
};

/// Batch queries, one result per query row, partitioned across threads.
/// With exclude_self set, query row i must be train point i.
std::vector<NeighborResult> knn_batch(const NeighborIndex& index, const DataMatrix& queries,
                                      std::size_t k, bool exclude_self, int threads = 0);

}  // namespace oddkit
