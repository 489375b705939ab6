#include <doctest.h>

#include "oddkit/bench.hpp"
#include "oddkit/data.hpp"
#include "oddkit/metrics.hpp"
#include "oddkit/rng.hpp"

using namespace oddkit;

namespace {
std::vector<BenchDataset> demo_datasets() {
    const auto [train, test] = generate_data({150, 10, 2, 0.1, 19});
    return {{"demo", train.X, train.y}};
}
}  // namespace

TEST_CASE("one row per dataset-algorithm pair with four metric columns") {
    DetectorParams knn;
    knn.algo = Algo::knn;
    DetectorParams hbos;
    hbos.algo = Algo::hbos;
    const auto cells = run_benchmark(demo_datasets(), {knn, hbos}, {1, 2});
    REQUIRE(cells.size() == 2);
    for (const auto& c : cells) {
        CHECK_FALSE(c.failed);
        CHECK(c.roc >= 0.0);
        CHECK(c.precision_at_n >= 0.0);
        CHECK(c.fit_ms >= 0.0);
        CHECK(c.score_ms >= 0.0);
    }
    CHECK(cells[0].algo == "knn");
    CHECK(cells[1].algo == "hbos");
}

TEST_CASE("metrics are reproducible for fixed seeds") {
    DetectorParams iforest;
    iforest.algo = Algo::iforest;
    iforest.trees = 30;
    const auto a = run_benchmark(demo_datasets(), {iforest}, {5, 6});
    const auto b = run_benchmark(demo_datasets(), {iforest}, {5, 6});
    CHECK(a[0].roc == b[0].roc);
    CHECK(a[0].precision_at_n == b[0].precision_at_n);
}

TEST_CASE("knn clearly beats a random-score baseline") {
    const auto datasets = demo_datasets();
    DetectorParams knn;
    knn.algo = Algo::knn;
    knn.k = 5;
    const auto cells = run_benchmark(datasets, {knn}, {1});

    Rng rng(999);
    double random_roc = 0;
    const int trials = 20;
    for (int t = 0; t < trials; ++t) {
        ScoreVector random(datasets[0].X.rows());
        for (double& v : random) v = rng.uniform();
        random_roc += roc_auc(datasets[0].y, random);
    }
    random_roc /= trials;
    CHECK(cells[0].roc > random_roc);
    CHECK(cells[0].roc > 0.8);  // far from chance on this data
}

TEST_CASE("failing cells are recorded without aborting the rest") {
    DetectorParams bad;
    bad.algo = Algo::knn;
    bad.k = 10000;  // larger than any train set
    DetectorParams good;
    good.algo = Algo::hbos;
    const auto cells = run_benchmark(demo_datasets(), {bad, good}, {1});
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].failed);
    CHECK_FALSE(cells[0].message.empty());
    CHECK_FALSE(cells[1].failed);

    const std::string table = render_benchmark_table(cells);
    CHECK(table.find("ERROR") != std::string::npos);
}

TEST_CASE("empty inputs are rejected") {
    DetectorParams knn;
    knn.algo = Algo::knn;
    CHECK_THROWS_AS(run_benchmark({}, {knn}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(run_benchmark(demo_datasets(), {}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(run_benchmark(demo_datasets(), {knn}, {}), std::invalid_argument);
}
