#include "oddkit/core.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oddkit/stats.hpp"

namespace oddkit {

double threshold_from_scores(const ScoreVector& scores, double contamination) {
    if (scores.empty())
        throw std::invalid_argument("threshold_from_scores: empty score vector");
    if (!(contamination > 0.0) || contamination > 0.5)
        throw std::invalid_argument("threshold_from_scores: contamination must be in (0, 0.5]");

    std::vector<double> sorted(scores);
    std::sort(sorted.begin(), sorted.end());
    const double rank = (1.0 - contamination) * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(rank);
    if (lo + 1 >= sorted.size()) return sorted.back();
    const double frac = rank - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

LabelVector labels_from_scores(const ScoreVector& scores, double threshold) {
    LabelVector labels(scores.size());
    for (std::size_t i = 0; i < scores.size(); ++i)
        labels[i] = scores[i] > threshold ? 1 : 0;
    return labels;
}

ScoreVector proba_linear(const ScoreVector& query_scores, double train_min, double train_max) {
    if (train_max < train_min)
        throw std::invalid_argument("proba_linear: train_max < train_min");
    ScoreVector probs(query_scores.size(), 0.0);
    const double range = train_max - train_min;
    if (range == 0.0) return probs;
    for (std::size_t i = 0; i < query_scores.size(); ++i)
        probs[i] = std::clamp((query_scores[i] - train_min) / range, 0.0, 1.0);
    return probs;
}

ScoreVector proba_unify(const ScoreVector& query_scores, double score_mean, double score_std) {
    if (score_std < 0.0)
        throw std::invalid_argument("proba_unify: negative score_std");
    ScoreVector probs(query_scores.size(), 0.0);
    if (score_std == 0.0) return probs;
    const double denom = score_std * std::sqrt(2.0);
    for (std::size_t i = 0; i < query_scores.size(); ++i)
        probs[i] = std::max(0.0, std::erf((query_scores[i] - score_mean) / denom));
    return probs;
}

ScoreMatrix zscore_standardize(const ScoreMatrix& matrix) {
    matrix.validate("zscore_standardize: matrix");
    const std::size_t n = matrix.rows();
    const std::size_t m = matrix.cols();
    ScoreMatrix out(n, m);
    std::vector<double> column(n);
    for (std::size_t c = 0; c < m; ++c) {
        for (std::size_t r = 0; r < n; ++r) column[r] = matrix(r, c);
        const double mu = mean_of(column);
        const double sigma = population_std(column);
        if (sigma == 0.0) {
            for (std::size_t r = 0; r < n; ++r) out(r, c) = 0.0;
        } else {
            for (std::size_t r = 0; r < n; ++r) out(r, c) = (column[r] - mu) / sigma;
        }
    }
    return out;
}

}  // namespace oddkit
