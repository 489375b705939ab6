#include <doctest.h>

#include <array>
#include <cmath>

#include "oddkit/pca.hpp"
#include "oddkit/rng.hpp"
#include "test_util.hpp"

using namespace oddkit;
using oddkit::test::random_matrix;

namespace {

// 3x3 inverse via adjugate, for the direct Mahalanobis reference.
std::array<std::array<double, 3>, 3> invert3(const std::array<std::array<double, 3>, 3>& m) {
    const double det =
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
        m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
        m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    std::array<std::array<double, 3>, 3> inv;
    inv[0][0] = (m[1][1] * m[2][2] - m[1][2] * m[2][1]) / det;
    inv[0][1] = (m[0][2] * m[2][1] - m[0][1] * m[2][2]) / det;
    inv[0][2] = (m[0][1] * m[1][2] - m[0][2] * m[1][1]) / det;
    inv[1][0] = (m[1][2] * m[2][0] - m[1][0] * m[2][2]) / det;
    inv[1][1] = (m[0][0] * m[2][2] - m[0][2] * m[2][0]) / det;
    inv[1][2] = (m[0][2] * m[1][0] - m[0][0] * m[1][2]) / det;
    inv[2][0] = (m[1][0] * m[2][1] - m[1][1] * m[2][0]) / det;
    inv[2][1] = (m[0][1] * m[2][0] - m[0][0] * m[2][1]) / det;
    inv[2][2] = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) / det;
    return inv;
}

}  // namespace

TEST_CASE("fit on a symmetric diamond") {
    const DataMatrix train = DataMatrix::from_rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    const PcaState state = pca_fit(train);
    CHECK(state.mean[0] == doctest::Approx(0.0));
    CHECK(state.mean[1] == doctest::Approx(0.0));
    REQUIRE(state.kept() == 2);
    CHECK(state.eigenvalues[0] == doctest::Approx(0.5));
    CHECK(state.eigenvalues[1] == doctest::Approx(0.5));

    SUBCASE("query at the mean scores zero") {
        const auto s = pca_scores(state, DataMatrix::from_rows({{0, 0}}));
        CHECK(s[0] == doctest::Approx(0.0));
    }
    SUBCASE("unit diagonal query") {
        const auto s = pca_scores(state, DataMatrix::from_rows({{1, 1}}));
        CHECK(s[0] == doctest::Approx(4.0));
    }
}

TEST_CASE("collinear data drops the degenerate component") {
    const DataMatrix train =
        DataMatrix::from_rows({{0, 0}, {1, 2}, {2, 4}, {3, 6}});
    const PcaState state = pca_fit(train);
    CHECK(state.kept() == 1);
    // a query on the retained line at the mean scores zero
    const auto s = pca_scores(state, DataMatrix::from_rows({{1.5, 3.0}}));
    CHECK(s[0] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("1-D population variance") {
    const DataMatrix train(2, 1, {0, 2});
    const PcaState state = pca_fit(train);
    CHECK(state.mean[0] == doctest::Approx(1.0));
    REQUIRE(state.kept() == 1);
    CHECK(state.eigenvalues[0] == doctest::Approx(1.0));
}

TEST_CASE("needs two rows") {
    CHECK_THROWS_AS(pca_fit(DataMatrix(1, 2, {1, 2})), std::invalid_argument);
}

TEST_CASE("components are orthonormal with descending eigenvalues") {
    Rng rng(73);
    DataMatrix train = random_matrix(rng, 60, 4);
    for (std::size_t r = 0; r < train.rows(); ++r) {
        train(r, 0) *= 5.0;
        train(r, 2) *= 0.3;
    }
    const PcaState state = pca_fit(train);
    for (std::size_t j = 1; j < state.kept(); ++j)
        CHECK(state.eigenvalues[j] <= state.eigenvalues[j - 1]);
    for (std::size_t a = 0; a < state.kept(); ++a)
        for (std::size_t b = 0; b < state.kept(); ++b) {
            double dot = 0;
            for (std::size_t c = 0; c < 4; ++c)
                dot += state.components(a, c) * state.components(b, c);
            CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-8));
        }
}

TEST_CASE("rotation invariance of scores") {
    Rng rng(71);
    DataMatrix train = random_matrix(rng, 40, 2);
    // stretch one axis so the eigenvalues separate
    for (std::size_t r = 0; r < train.rows(); ++r) train(r, 0) *= 3.0;
    const DataMatrix query = random_matrix(rng, 10, 2);
    const auto base = pca_scores(pca_fit(train), query);

    const double theta = 1.1;
    auto rotate = [&](const DataMatrix& m) {
        DataMatrix out(m.rows(), 2);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            out(r, 0) = std::cos(theta) * m(r, 0) - std::sin(theta) * m(r, 1);
            out(r, 1) = std::sin(theta) * m(r, 0) + std::cos(theta) * m(r, 1);
        }
        return out;
    };
    const auto rotated = pca_scores(pca_fit(rotate(train)), rotate(query));
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(rotated[i] == doctest::Approx(base[i]).epsilon(1e-8));
}

TEST_CASE("equals the squared Mahalanobis distance on full-rank data") {
    Rng rng(72);
    for (int trial = 0; trial < 10; ++trial) {
        const DataMatrix train = random_matrix(rng, 50, 3);
        const DataMatrix query = random_matrix(rng, 5, 3);
        const PcaState state = pca_fit(train);
        REQUIRE(state.kept() == 3);
        const auto scores = pca_scores(state, query);

        // direct covariance-inverse route
        std::array<double, 3> mean{};
        for (std::size_t r = 0; r < train.rows(); ++r)
            for (std::size_t c = 0; c < 3; ++c) mean[c] += train(r, c);
        for (double& v : mean) v /= static_cast<double>(train.rows());
        std::array<std::array<double, 3>, 3> cov{};
        for (std::size_t r = 0; r < train.rows(); ++r)
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b)
                    cov[a][b] += (train(r, a) - mean[a]) * (train(r, b) - mean[b]);
        for (auto& row : cov)
            for (double& v : row) v /= static_cast<double>(train.rows());
        const auto inv = invert3(cov);

        for (std::size_t i = 0; i < query.rows(); ++i) {
            std::array<double, 3> x{};
            for (std::size_t c = 0; c < 3; ++c) x[c] = query(i, c) - mean[c];
            double mahal = 0;
            for (std::size_t a = 0; a < 3; ++a)
                for (std::size_t b = 0; b < 3; ++b) mahal += x[a] * inv[a][b] * x[b];
            CHECK(scores[i] == doctest::Approx(mahal).epsilon(1e-6));
        }
    }
}
