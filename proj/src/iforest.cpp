#include "oddkit/iforest.hpp"

#include <cmath>
#include <stdexcept>

#include "oddkit/parallel.hpp"
#include "oddkit/rng.hpp"

namespace oddkit {

namespace {

constexpr double kEulerGamma = 0.5772156649;

struct TreeBuilder {
    const DataMatrix& data;
    Rng& rng;
    std::size_t max_depth;
    IsoTree tree;

    // rows[begin, end) is the slice owned by this node.
    int grow(std::vector<std::size_t>& rows, std::size_t begin, std::size_t end,
             std::size_t depth) {
        const int id = static_cast<int>(tree.nodes.size());
        tree.nodes.emplace_back();
        const std::size_t count = end - begin;

        if (depth >= max_depth || count <= 1) {
            tree.nodes[id].size = static_cast<std::uint32_t>(count);
            return id;
        }

        // Candidate features are those with a nonzero range in this slice;
        // a slice of identical points terminates.
        std::vector<std::size_t> candidates;
        std::vector<std::pair<double, double>> ranges;
        for (std::size_t f = 0; f < data.cols(); ++f) {
            double lo = data(rows[begin], f), hi = lo;
            for (std::size_t i = begin + 1; i < end; ++i) {
                const double v = data(rows[i], f);
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (lo < hi) {
                candidates.push_back(f);
                ranges.emplace_back(lo, hi);
            }
        }
        if (candidates.empty()) {
            tree.nodes[id].size = static_cast<std::uint32_t>(count);
            return id;
        }

        const std::size_t pick = static_cast<std::size_t>(rng.uniform_int(candidates.size()));
        const std::size_t feature = candidates[pick];
        const auto [lo, hi] = ranges[pick];
        double u;
        do {
            u = rng.uniform();
        } while (u == 0.0);  // open interval (lo, hi)
        const double split = lo + u * (hi - lo);

        // Partition the slice: < split goes left. Stable order is irrelevant
        // to scoring but kept deterministic.
        std::size_t mid = begin;
        for (std::size_t i = begin; i < end; ++i)
            if (data(rows[i], feature) < split) std::swap(rows[mid++], rows[i]);

        const int left = grow(rows, begin, mid, depth + 1);
        const int right = grow(rows, mid, end, depth + 1);
        tree.nodes[id].feature = static_cast<int>(feature);
        tree.nodes[id].split = split;
        tree.nodes[id].left = left;
        tree.nodes[id].right = right;
        return id;
    }
};

}  // namespace

double average_path_length(std::size_t n) {
    if (n <= 1) return 0.0;
    if (n == 2) return 1.0;
    const double nd = static_cast<double>(n);
    return 2.0 * (std::log(nd - 1.0) + kEulerGamma) - 2.0 * (nd - 1.0) / nd;
}

IsoForest iforest_fit(const DataMatrix& train, std::size_t t, std::size_t psi,
                      std::uint64_t seed, int threads) {
    train.validate("iforest_fit: train");
    if (t == 0) throw std::invalid_argument("iforest_fit: need at least one tree");
    if (train.rows() < 2) throw std::invalid_argument("iforest_fit: need at least 2 train rows");
    if (psi < 2) throw std::invalid_argument("iforest_fit: psi must be >= 2");

    IsoForest forest;
    forest.psi = std::min(psi, train.rows());
    forest.dim = train.cols();
    forest.seed = seed;
    forest.max_depth =
        static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(forest.psi))));
    forest.trees.resize(t);

    const Rng master(seed);
    parallel_for(t, threads, [&](std::size_t i) {
        Rng rng = master.spawn(i);
        std::vector<std::size_t> rows = rng.sample_indices(train.rows(), forest.psi);
        TreeBuilder builder{train, rng, forest.max_depth, {}};
        builder.tree.nodes.reserve(2 * forest.psi);
        builder.grow(rows, 0, rows.size(), 0);
        forest.trees[i] = std::move(builder.tree);
    });
    return forest;
}

double iforest_path_length(const IsoTree& tree, std::span<const double> x) {
    std::size_t depth = 0;
    int node = 0;
    for (;;) {
        const IsoNode& nd = tree.nodes[static_cast<std::size_t>(node)];
        if (nd.feature < 0)
            return static_cast<double>(depth) + average_path_length(nd.size);
        node = x[static_cast<std::size_t>(nd.feature)] < nd.split ? nd.left : nd.right;
        ++depth;
    }
}

ScoreVector iforest_scores(const IsoForest& forest, const DataMatrix& query, int threads) {
    query.validate("iforest_scores: query");
    if (forest.trees.empty())
        throw std::invalid_argument("iforest_scores: forest is empty");
    if (query.cols() != forest.dim)
        throw std::invalid_argument("iforest_scores: query dimension mismatch");

    const double norm = average_path_length(forest.psi);
    ScoreVector scores(query.rows());
    parallel_for(query.rows(), threads, [&](std::size_t i) {
        const auto x = query.row(i);
        double total = 0.0;
        for (const IsoTree& tree : forest.trees) total += iforest_path_length(tree, x);
        const double mean_path = total / static_cast<double>(forest.trees.size());
        scores[i] = std::pow(2.0, -mean_path / norm);
    });
    return scores;
}

}  // namespace oddkit
