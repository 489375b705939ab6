#include "oddkit/abod.hpp"

#include <stdexcept>
#include <vector>

#include "oddkit/parallel.hpp"

namespace oddkit {

namespace {
constexpr double kMinNormSq = 1e-24;  // |diff| < 1e-12 skips the pair
}

ScoreVector abod_scores(const NeighborIndex& index, const DataMatrix& query,
                        std::size_t k, bool exclude_self, int threads) {
    query.validate("abod_scores: query");
    if (query.cols() != index.dim())
        throw std::invalid_argument("abod_scores: query dimension mismatch");
    if (k < 2)
        throw std::invalid_argument("abod_scores: k must be >= 2");
    if (k > index.size() - (exclude_self ? 1 : 0))
        throw std::invalid_argument("abod_scores: k out of range");
    if (exclude_self && query.rows() != index.size())
        throw std::invalid_argument("abod_scores: exclude_self requires query rows == train rows");

    const std::size_t d = index.dim();
    const DataMatrix& train = index.points();

    ScoreVector scores(query.rows());
    parallel_for(query.rows(), threads, [&](std::size_t i) {
        const auto x = query.row(i);
        const NeighborResult nn =
            index.query(x, k, exclude_self ? std::optional<std::size_t>(i) : std::nullopt);

        // Difference vectors and squared norms, one per neighbor.
        std::vector<double> diffs(k * d);
        std::vector<double> norms2(k);
        for (std::size_t a = 0; a < k; ++a) {
            const auto y = train.row(nn.indices[a]);
            double n2 = 0.0;
            for (std::size_t c = 0; c < d; ++c) {
                const double v = y[c] - x[c];
                diffs[a * d + c] = v;
                n2 += v * v;
            }
            norms2[a] = n2;
        }

        std::vector<double> weights;
        weights.reserve(k * (k - 1) / 2);
        for (std::size_t a = 0; a < k; ++a) {
            if (norms2[a] < kMinNormSq) continue;
            for (std::size_t b = a + 1; b < k; ++b) {
                if (norms2[b] < kMinNormSq) continue;
                double dot = 0.0;
                for (std::size_t c = 0; c < d; ++c) dot += diffs[a * d + c] * diffs[b * d + c];
                weights.push_back(dot / (norms2[a] * norms2[b]));
            }
        }

        if (weights.empty()) {
            scores[i] = 0.0;
            return;
        }
        double mean = 0.0;
        for (double w : weights) mean += w;
        mean /= static_cast<double>(weights.size());
        double var = 0.0;
        for (double w : weights) var += (w - mean) * (w - mean);
        var /= static_cast<double>(weights.size());
        scores[i] = -var;
    });
    return scores;
}

ScoreVector abod_scores(const DataMatrix& train, const DataMatrix& query,
                        std::size_t k, bool exclude_self, int threads) {
    NeighborIndex index(train);
    return abod_scores(index, query, k, exclude_self, threads);
}

}  // namespace oddkit
