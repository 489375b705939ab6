#include "oddkit/feature_bagging.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddkit/parallel.hpp"
#include "oddkit/rng.hpp"
#include "oddkit/stats.hpp"

namespace oddkit {

std::vector<std::vector<std::size_t>> fb_draw_subsets(std::size_t d, std::size_t m,
                                                      std::uint64_t seed) {
    if (d == 0) throw std::invalid_argument("fb_draw_subsets: d must be >= 1");
    if (m == 0) throw std::invalid_argument("fb_draw_subsets: m must be >= 1");

    std::vector<std::vector<std::size_t>> subsets(m);
    const Rng master(seed);
    for (std::size_t r = 0; r < m; ++r) {
        Rng rng = master.spawn(r);
        if (d == 1) {
            subsets[r] = {0};
            continue;
        }
        const std::size_t lo = (d + 1) / 2;  // ceil(d/2)
        const std::size_t hi = d - 1;
        const std::size_t size = lo + static_cast<std::size_t>(rng.uniform_int(hi - lo + 1));
        subsets[r] = rng.sample_indices(d, size);
        std::sort(subsets[r].begin(), subsets[r].end());
    }
    return subsets;
}

FeatureBagState fb_fit_with_subsets(const DataMatrix& train,
                                    std::vector<std::vector<std::size_t>> subsets,
                                    std::size_t base_k, FbCombine combine,
                                    std::uint64_t seed, int threads) {
    train.validate("fb_fit: train");
    if (subsets.empty()) throw std::invalid_argument("fb_fit: need at least one round");
    for (const auto& s : subsets) {
        if (s.empty()) throw std::invalid_argument("fb_fit: empty feature subset");
        for (std::size_t f : s)
            if (f >= train.cols()) throw std::invalid_argument("fb_fit: feature index out of range");
    }
    if (base_k == 0 || base_k >= train.rows())
        throw std::invalid_argument("fb_fit: base_k must satisfy 1 <= base_k < train rows");

    FeatureBagState state;
    state.subsets = std::move(subsets);
    state.base_k = base_k;
    state.combine = combine;
    state.seed = seed;
    state.rounds.resize(state.subsets.size());

    parallel_for(state.subsets.size(), threads, [&](std::size_t r) {
        const DataMatrix projected = train.select_columns(state.subsets[r]);
        state.rounds[r] = lof_fit(projected, base_k, 1);
    });
    return state;
}

FeatureBagState fb_fit(const DataMatrix& train, const FeatureBagParams& params, int threads) {
    return fb_fit_with_subsets(train, fb_draw_subsets(train.cols(), params.m, params.seed),
                               params.base_k, params.combine, params.seed, threads);
}

ScoreVector fb_scores(const FeatureBagState& state, const DataMatrix& query,
                      bool exclude_self, int threads) {
    query.validate("fb_scores: query");
    if (state.rounds.empty())
        throw std::invalid_argument("fb_scores: state is not fitted");

    const std::size_t n = query.rows();
    const std::size_t m = state.rounds.size();

    // Round scores first (parallel over rounds), standardization and
    // combination after in fixed round order, so thread count cannot change
    // the result.
    std::vector<ScoreVector> round_scores(m);
    parallel_for(m, threads, [&](std::size_t r) {
        const DataMatrix projected = query.select_columns(state.subsets[r]);
        ScoreVector s = lof_scores(state.rounds[r], projected, exclude_self, 1);
        const double mu = mean_of(s);
        const double sigma = population_std(s);
        if (sigma == 0.0) {
            std::fill(s.begin(), s.end(), 0.0);
        } else {
            for (double& v : s) v = (v - mu) / sigma;
        }
        round_scores[r] = std::move(s);
    });

    ScoreVector combined(n, 0.0);
    if (state.combine == FbCombine::average) {
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t i = 0; i < n; ++i) combined[i] += round_scores[r][i];
        for (double& v : combined) v /= static_cast<double>(m);
    } else {
        combined = round_scores[0];
        for (std::size_t r = 1; r < m; ++r)
            for (std::size_t i = 0; i < n; ++i)
                combined[i] = std::max(combined[i], round_scores[r][i]);
    }
    return combined;
}

ScoreVector feature_bagging_scores(const DataMatrix& train, const DataMatrix& query,
                                   const FeatureBagParams& params, bool exclude_self,
                                   int threads) {
    const FeatureBagState state = fb_fit(train, params, threads);
    return fb_scores(state, query, exclude_self, threads);
}

}  // namespace oddkit
