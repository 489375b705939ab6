#include "oddkit/knn.hpp"

#include <stdexcept>

#include "oddkit/parallel.hpp"
#include "oddkit/stats.hpp"

namespace oddkit {

ScoreVector knn_scores(const NeighborIndex& index, const DataMatrix& query,
                       const KnnParams& params, bool exclude_self, int threads) {
    query.validate("knn_scores: query");
    if (query.cols() != index.dim())
        throw std::invalid_argument("knn_scores: query dimension mismatch");
    if (params.k == 0 || params.k > index.size() - (exclude_self ? 1 : 0))
        throw std::invalid_argument("knn_scores: k out of range");

    ScoreVector scores(query.rows());
    parallel_for(query.rows(), threads, [&](std::size_t i) {
        const NeighborResult nn = index.query(
            query.row(i), params.k, exclude_self ? std::optional<std::size_t>(i) : std::nullopt);
        switch (params.mode) {
            case KnnMode::largest: scores[i] = nn.distances.back(); break;
            case KnnMode::mean: scores[i] = mean_of(nn.distances); break;
            case KnnMode::median: scores[i] = median_of(nn.distances); break;
        }
    });
    return scores;
}

ScoreVector knn_scores(const DataMatrix& train, const DataMatrix& query,
                       const KnnParams& params, bool exclude_self, int threads) {
    NeighborIndex index(train);
    return knn_scores(index, query, params, exclude_self, threads);
}

}  // namespace oddkit
