#include "oddkit/pca.hpp"

#include <Eigen/Dense>
#include <stdexcept>

#include "oddkit/parallel.hpp"

namespace oddkit {

PcaState pca_fit(const DataMatrix& train) {
    train.validate("pca_fit: train");
    if (train.rows() < 2)
        throw std::invalid_argument("pca_fit: need at least 2 train rows");

    const auto n = static_cast<Eigen::Index>(train.rows());
    const auto d = static_cast<Eigen::Index>(train.cols());

    Eigen::MatrixXd x(n, d);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < d; ++c)
            x(r, c) = train(static_cast<std::size_t>(r), static_cast<std::size_t>(c));

    const Eigen::RowVectorXd mean = x.colwise().mean();
    x.rowwise() -= mean;
    const Eigen::MatrixXd cov = (x.transpose() * x) / static_cast<double>(n);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(cov);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("pca_fit: eigendecomposition failed");

    // Eigen returns ascending eigenvalues; flip to descending and drop the
    // near-degenerate tail.
    const Eigen::VectorXd evals = solver.eigenvalues();
    const Eigen::MatrixXd evecs = solver.eigenvectors();
    const double max_eval = std::max(evals(d - 1), 0.0);

    PcaState state;
    state.dim = train.cols();
    state.mean.assign(mean.data(), mean.data() + d);

    std::vector<Eigen::Index> kept;
    for (Eigen::Index j = d - 1; j >= 0; --j) {
        const double ev = evals(j);
        if (ev <= 0.0 || ev < 1e-9 * max_eval) continue;
        kept.push_back(j);
    }

    state.eigenvalues.reserve(kept.size());
    state.components = DataMatrix(kept.size(), train.cols());
    for (std::size_t row = 0; row < kept.size(); ++row) {
        state.eigenvalues.push_back(evals(kept[row]));
        for (Eigen::Index c = 0; c < d; ++c)
            state.components(row, static_cast<std::size_t>(c)) = evecs(c, kept[row]);
    }
    return state;
}

ScoreVector pca_scores(const PcaState& state, const DataMatrix& query, int threads) {
    query.validate("pca_scores: query");
    if (query.cols() != state.dim)
        throw std::invalid_argument("pca_scores: query dimension mismatch");

    const std::size_t d = state.dim;
    ScoreVector scores(query.rows(), 0.0);
    parallel_for(query.rows(), threads, [&](std::size_t i) {
        double s = 0.0;
        for (std::size_t j = 0; j < state.kept(); ++j) {
            double proj = 0.0;
            for (std::size_t c = 0; c < d; ++c)
                proj += (query(i, c) - state.mean[c]) * state.components(j, c);
            s += proj * proj / state.eigenvalues[j];
        }
        scores[i] = s;
    });
    return scores;
}

}  // namespace oddkit
