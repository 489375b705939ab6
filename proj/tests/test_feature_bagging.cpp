#include <doctest.h>

#include <set>

#include "oddkit/core.hpp"
#include "oddkit/feature_bagging.hpp"
#include "oddkit/rng.hpp"
#include "test_util.hpp"

using namespace oddkit;
using oddkit::test::random_matrix;

TEST_CASE("subset sizes stay inside [ceil(d/2), d-1]") {
    SUBCASE("d=2 forces singletons") {
        for (const auto& subset : fb_draw_subsets(2, 50, 3)) CHECK(subset.size() == 1);
    }
    SUBCASE("d=6 gives sizes in {3,4,5}") {
        std::set<std::size_t> seen;
        for (const auto& subset : fb_draw_subsets(6, 100, 9)) {
            CHECK(subset.size() >= 3);
            CHECK(subset.size() <= 5);
            seen.insert(subset.size());
            // distinct features
            CHECK(std::set<std::size_t>(subset.begin(), subset.end()).size() == subset.size());
        }
        CHECK(seen.size() == 3);  // all sizes show up over 100 rounds
    }
    SUBCASE("d=1 uses the single feature") {
        for (const auto& subset : fb_draw_subsets(1, 10, 1))
            CHECK(subset == std::vector<std::size_t>{0});
    }
}

TEST_CASE("single round equals standardized LOF on the drawn subset") {
    Rng rng(91);
    const DataMatrix train = random_matrix(rng, 40, 4);
    FeatureBagParams params;
    params.m = 1;
    params.base_k = 5;
    params.seed = 17;
    const auto combined = feature_bagging_scores(train, train, params, true);

    const auto subsets = fb_draw_subsets(4, 1, 17);
    const DataMatrix projected = train.select_columns(subsets[0]);
    ScoreVector lof = lof_scores(projected, projected, 5, true);
    const ScoreMatrix as_matrix(lof.size(), 1, ScoreVector(lof));
    const ScoreMatrix standardized = zscore_standardize(as_matrix);
    for (std::size_t i = 0; i < lof.size(); ++i)
        CHECK(combined[i] == doctest::Approx(standardized(i, 0)).epsilon(1e-12));
}

TEST_CASE("full subsets forced with average equal standardized plain LOF") {
    Rng rng(92);
    const DataMatrix train = random_matrix(rng, 50, 3);
    std::vector<std::vector<std::size_t>> full(6, {0, 1, 2});
    const FeatureBagState state = fb_fit_with_subsets(train, full, 8, FbCombine::average, 1);
    const auto combined = fb_scores(state, train, true);

    ScoreVector lof = lof_scores(train, train, 8, true);
    const ScoreMatrix standardized =
        zscore_standardize(ScoreMatrix(lof.size(), 1, ScoreVector(lof)));
    for (std::size_t i = 0; i < lof.size(); ++i)
        CHECK(combined[i] == doctest::Approx(standardized(i, 0)).epsilon(1e-9));
}

TEST_CASE("seeded determinism across thread counts") {
    Rng rng(93);
    const DataMatrix train = random_matrix(rng, 60, 5);
    const DataMatrix query = random_matrix(rng, 25, 5);
    FeatureBagParams params;
    params.m = 8;
    params.base_k = 6;
    params.seed = 5;

    const auto a = feature_bagging_scores(train, query, params, false, 1);
    const auto b = feature_bagging_scores(train, query, params, false, 8);
    CHECK(a == b);

    params.combine = FbCombine::max;
    const auto c = feature_bagging_scores(train, query, params, false, 1);
    const auto d2 = feature_bagging_scores(train, query, params, false, 8);
    CHECK(c == d2);
}

TEST_CASE("max combination bounds average combination from above") {
    Rng rng(94);
    const DataMatrix train = random_matrix(rng, 40, 4);
    FeatureBagParams params;
    params.m = 6;
    params.base_k = 5;
    params.seed = 2;
    const auto avg = feature_bagging_scores(train, train, params, true);
    params.combine = FbCombine::max;
    const auto mx = feature_bagging_scores(train, train, params, true);
    for (std::size_t i = 0; i < avg.size(); ++i) CHECK(mx[i] >= avg[i]);
}

TEST_CASE("argument validation") {
    Rng rng(95);
    const DataMatrix train = random_matrix(rng, 10, 2);
    FeatureBagParams params;
    params.m = 0;
    CHECK_THROWS_AS(fb_fit(train, params), std::invalid_argument);
    params.m = 2;
    params.base_k = 10;
    CHECK_THROWS_AS(fb_fit(train, params), std::invalid_argument);
    params.base_k = 3;
    CHECK_NOTHROW(fb_fit(train, params));
}
