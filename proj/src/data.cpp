#include "oddkit/data.hpp"

#include <cmath>
#include <stdexcept>

#include "oddkit/rng.hpp"

namespace oddkit {

namespace {

LabeledDataset generate_split(std::size_t n, std::size_t d, double contamination, Rng rng) {
    const auto n_outliers =
        std::min<std::size_t>(static_cast<std::size_t>(std::llround(
                                  contamination * static_cast<double>(n))),
                              n);
    const std::size_t n_inliers = n - n_outliers;

    LabeledDataset set;
    set.X = DataMatrix(n, d);
    set.y.assign(n, 0);
    for (std::size_t r = 0; r < n_inliers; ++r)
        for (std::size_t c = 0; c < d; ++c) set.X(r, c) = rng.normal();
    for (std::size_t r = n_inliers; r < n; ++r) {
        for (std::size_t c = 0; c < d; ++c) set.X(r, c) = rng.uniform(-6.0, 6.0);
        set.y[r] = 1;
    }
    return set;
}

}  // namespace

std::pair<LabeledDataset, LabeledDataset> generate_data(const GenParams& params) {
    if (params.n_train == 0 || params.n_test == 0 || params.n_features == 0)
        throw std::invalid_argument("generate_data: counts must be >= 1");
    if (!(params.contamination > 0.0) || params.contamination > 0.5)
        throw std::invalid_argument("generate_data: contamination must be in (0, 0.5]");

    const Rng master(params.seed);
    return {generate_split(params.n_train, params.n_features, params.contamination,
                           master.spawn(0)),
            generate_split(params.n_test, params.n_features, params.contamination,
                           master.spawn(1))};
}

}  // namespace oddkit
