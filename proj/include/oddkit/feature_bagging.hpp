#pragma once

#include <cstdint>
#include <vector>

#include "oddkit/lof.hpp"
#include "oddkit/matrix.hpp"

namespace oddkit {

// Feature Bagging: m rounds, each running LOF on a random feature subset of
// size uniform in [ceil(d/2), d-1] (the single feature when d == 1). Every
// round's query-score vector is z-standardized so rounds are comparable,
// then the rounds are combined by average or max. Round r draws from child
// stream r of the seed, so parallel rounds stay deterministic.

enum class FbCombine { average, max };

struct FeatureBagParams {
    std::size_t m = 10;        // rounds
    std::size_t base_k = 10;   // LOF neighbors per round
    FbCombine combine = FbCombine::average;
    std::uint64_t seed = 42;
};

struct FeatureBagState {
    std::vector<std::vector<std::size_t>> subsets;  // features per round, ascending
    std::vector<LofState> rounds;                   // LOF fitted per projected train
    std::size_t base_k = 10;
    FbCombine combine = FbCombine::average;
    std::uint64_t seed = 42;
};

/// The per-round feature subsets the given seed induces (exposed so tests
/// can pin partitions and force full subsets).
std::vector<std::vector<std::size_t>> fb_draw_subsets(std::size_t d, std::size_t m,
                                                      std::uint64_t seed);

/// Fit with explicit subsets; the public fit draws them from the seed.
/// Throws std::invalid_argument for empty subsets or base_k out of range.
FeatureBagState fb_fit_with_subsets(const DataMatrix& train,
                                    std::vector<std::vector<std::size_t>> subsets,
                                    std::size_t base_k, FbCombine combine,
                                    std::uint64_t seed, int threads = 0);

FeatureBagState fb_fit(const DataMatrix& train, const FeatureBagParams& params,
                       int threads = 0);

/// Combined score per query row. With exclude_self set, query row i is train
/// point i (the fit path).
ScoreVector fb_scores(const FeatureBagState& state, const DataMatrix& query,
                      bool exclude_self, int threads = 0);

/// One-shot convenience: fit on train, score query.
ScoreVector feature_bagging_scores(const DataMatrix& train, const DataMatrix& query,
                                   const FeatureBagParams& params, bool exclude_self = false,
                                   int threads = 0);

}  // namespace oddkit
