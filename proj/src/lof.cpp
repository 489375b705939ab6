#include "oddkit/lof.hpp"

#include <stdexcept>

#include "oddkit/parallel.hpp"

namespace oddkit {

namespace {

double lrd_from_neighbors(const LofState& state, const NeighborResult& nn) {
    double sum = 0.0;
    for (std::size_t j = 0; j < nn.indices.size(); ++j)
        sum += std::max(state.k_distances[nn.indices[j]], nn.distances[j]);
    const double mean = sum / static_cast<double>(nn.indices.size());
    if (mean <= 0.0) return kLofZeroDistanceLrd;
    return 1.0 / mean;
}

}  // namespace

LofState lof_fit(const DataMatrix& train, std::size_t k, int threads) {
    train.validate("lof_fit: train");
    if (k == 0 || k >= train.rows())
        throw std::invalid_argument("lof_fit: k must satisfy 1 <= k < train rows");

    LofState state;
    state.k = k;
    state.index = std::make_shared<NeighborIndex>(train);
    state.k_distances.resize(train.rows());
    state.lrd.resize(train.rows());

    std::vector<NeighborResult> neighborhoods(train.rows());
    parallel_for(train.rows(), threads, [&](std::size_t i) {
        neighborhoods[i] = state.index->query(train.row(i), k, i);
        state.k_distances[i] = neighborhoods[i].distances.back();
    });
    parallel_for(train.rows(), threads, [&](std::size_t i) {
        state.lrd[i] = lrd_from_neighbors(state, neighborhoods[i]);
    });
    return state;
}

ScoreVector lof_scores(const LofState& state, const DataMatrix& query,
                       bool exclude_self, int threads) {
    query.validate("lof_scores: query");
    if (!state.index)
        throw std::invalid_argument("lof_scores: state is not fitted");
    if (query.cols() != state.index->dim())
        throw std::invalid_argument("lof_scores: query dimension mismatch");
    if (exclude_self && query.rows() != state.index->size())
        throw std::invalid_argument("lof_scores: exclude_self requires query rows == train rows");

    ScoreVector scores(query.rows());
    parallel_for(query.rows(), threads, [&](std::size_t i) {
        const NeighborResult nn = state.index->query(
            query.row(i), state.k, exclude_self ? std::optional<std::size_t>(i) : std::nullopt);
        const double own_lrd = lrd_from_neighbors(state, nn);
        double ratio_sum = 0.0;
        for (std::size_t idx : nn.indices) ratio_sum += state.lrd[idx] / own_lrd;
        scores[i] = ratio_sum / static_cast<double>(nn.indices.size());
    });
    return scores;
}

ScoreVector lof_scores(const DataMatrix& train, const DataMatrix& query, std::size_t k,
                       bool exclude_self, int threads) {
    const LofState state = lof_fit(train, k, threads);
    return lof_scores(state, query, exclude_self, threads);
}

}  // namespace oddkit
