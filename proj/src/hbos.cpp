#include "oddkit/hbos.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oddkit/parallel.hpp"

namespace oddkit {

namespace {

// Density looked up for one value: bin density when in range (or clamped
// within tol * width of an edge), 0 otherwise.
double feature_density(const HbosFeature& f, double tol, double v) {
    if (f.degenerate)
        return v == f.edges.front() ? f.densities.front() : 0.0;

    const double lo = f.edges.front();
    const double hi = f.edges.back();
    const double slack = tol * f.width;
    if (v < lo) return lo - v <= slack ? f.densities.front() : 0.0;
    if (v > hi) return v - hi <= slack ? f.densities.back() : 0.0;
    if (v == hi) return f.densities.back();  // last bin right-closed

    // Right-open bins: edges[j] <= v < edges[j+1].
    const auto it = std::upper_bound(f.edges.begin(), f.edges.end(), v);
    const auto bin = static_cast<std::size_t>(it - f.edges.begin()) - 1;
    return f.densities[std::min(bin, f.densities.size() - 1)];
}

}  // namespace

HbosState hbos_fit(const DataMatrix& train, std::size_t bins, double alpha, double tol) {
    train.validate("hbos_fit: train");
    if (bins == 0) throw std::invalid_argument("hbos_fit: bins must be >= 1");
    if (!(alpha > 0.0)) throw std::invalid_argument("hbos_fit: alpha must be > 0");
    if (tol < 0.0) throw std::invalid_argument("hbos_fit: tol must be >= 0");

    const std::size_t n = train.rows();
    HbosState state;
    state.bins = bins;
    state.alpha = alpha;
    state.tol = tol;
    state.features.resize(train.cols());

    for (std::size_t c = 0; c < train.cols(); ++c) {
        HbosFeature& f = state.features[c];
        double lo = train(0, c), hi = train(0, c);
        for (std::size_t r = 1; r < n; ++r) {
            lo = std::min(lo, train(r, c));
            hi = std::max(hi, train(r, c));
        }
        if (lo == hi) {
            f.degenerate = true;
            f.edges = {lo, hi};
            f.densities = {1.0};
            f.width = 0.0;
            continue;
        }
        f.width = (hi - lo) / static_cast<double>(bins);
        f.edges.resize(bins + 1);
        for (std::size_t j = 0; j <= bins; ++j)
            f.edges[j] = lo + static_cast<double>(j) * (hi - lo) / static_cast<double>(bins);
        f.edges[bins] = hi;  // guard against rounding drift at the top edge

        std::vector<std::size_t> counts(bins, 0);
        for (std::size_t r = 0; r < n; ++r) {
            const double v = train(r, c);
            std::size_t bin;
            if (v == hi) {
                bin = bins - 1;
            } else {
                const auto it = std::upper_bound(f.edges.begin(), f.edges.end(), v);
                bin = static_cast<std::size_t>(it - f.edges.begin()) - 1;
            }
            ++counts[std::min(bin, bins - 1)];
        }
        f.densities.resize(bins);
        for (std::size_t j = 0; j < bins; ++j)
            f.densities[j] =
                static_cast<double>(counts[j]) / (static_cast<double>(n) * f.width);
    }
    return state;
}

ScoreVector hbos_scores(const HbosState& state, const DataMatrix& query, int threads) {
    query.validate("hbos_scores: query");
    if (query.cols() != state.features.size())
        throw std::invalid_argument("hbos_scores: query column count does not match fit");

    ScoreVector scores(query.rows());
    parallel_for(query.rows(), threads, [&](std::size_t i) {
        double s = 0.0;
        for (std::size_t c = 0; c < state.features.size(); ++c) {
            const double density = feature_density(state.features[c], state.tol, query(i, c));
            s += -std::log(density + state.alpha);
        }
        scores[i] = s;
    });
    return scores;
}

}  // namespace oddkit
