#pragma once

#include <vector>

#include "oddkit/matrix.hpp"

namespace oddkit {

// Histogram-based outlier score. Each feature gets an equal-width histogram
// over its train range; a sample's score is the sum over features of
// -log(bin density + alpha), so rare bins raise the score. Bins are
// right-open except the last, which is closed so the train maximum stays in
// range. Query values just outside the range are clamped to the edge bin
// when within tol * binwidth; farther out they contribute density 0.

struct HbosFeature {
    std::vector<double> edges;      // bins+1 ascending; {v, v} for a constant feature
    std::vector<double> densities;  // one per bin; {1} for a constant feature
    double width = 0.0;             // single-bin width, 0 when degenerate
    bool degenerate = false;
};

struct HbosState {
    std::vector<HbosFeature> features;
    std::size_t bins = 10;
    double alpha = 0.1;
    double tol = 0.5;
};

/// Throws std::invalid_argument unless bins >= 1, alpha > 0 and tol >= 0.
HbosState hbos_fit(const DataMatrix& train, std::size_t bins = 10, double alpha = 0.1,
                   double tol = 0.5);

/// Throws std::invalid_argument when query column count does not match the fit.
ScoreVector hbos_scores(const HbosState& state, const DataMatrix& query, int threads = 0);

}  // namespace oddkit
