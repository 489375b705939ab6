#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oddkit/abod.hpp"
#include "oddkit/rng.hpp"
#include "test_util.hpp"

using namespace oddkit;
using oddkit::test::random_matrix;

namespace {

// Reference: brute-force neighbor selection and a direct pass over all
// neighbor pairs, independent of the library's index.
ScoreVector naive_abod(const DataMatrix& train, const DataMatrix& query, std::size_t k,
                       bool exclude_self) {
    const std::size_t d = train.cols();
    ScoreVector out(query.rows());
    for (std::size_t qi = 0; qi < query.rows(); ++qi) {
        std::vector<std::pair<double, std::size_t>> cand;
        for (std::size_t t = 0; t < train.rows(); ++t) {
            if (exclude_self && t == qi) continue;
            double s = 0;
            for (std::size_t c = 0; c < d; ++c) {
                const double diff = query(qi, c) - train(t, c);
                s += diff * diff;
            }
            cand.emplace_back(s, t);
        }
        std::sort(cand.begin(), cand.end());
        cand.resize(k);

        std::vector<double> ws;
        for (std::size_t a = 0; a < k; ++a) {
            for (std::size_t b = a + 1; b < k; ++b) {
                std::vector<double> da(d), db(d);
                double na = 0, nb = 0, dot = 0;
                for (std::size_t c = 0; c < d; ++c) {
                    da[c] = train(cand[a].second, c) - query(qi, c);
                    db[c] = train(cand[b].second, c) - query(qi, c);
                    na += da[c] * da[c];
                    nb += db[c] * db[c];
                    dot += da[c] * db[c];
                }
                if (na < 1e-24 || nb < 1e-24) continue;
                ws.push_back(dot / (na * nb));
            }
        }
        if (ws.empty()) {
            out[qi] = 0.0;
            continue;
        }
        double mean = 0;
        for (double w : ws) mean += w;
        mean /= static_cast<double>(ws.size());
        double var = 0;
        for (double w : ws) var += (w - mean) * (w - mean);
        var /= static_cast<double>(ws.size());
        out[qi] = -var;
    }
    return out;
}

}  // namespace

TEST_CASE("a far point attains the maximum score") {
    Rng rng(41);
    DataMatrix train(9, 2);
    for (std::size_t i = 0; i < 8; ++i) {
        train(i, 0) = rng.normal();
        train(i, 1) = rng.normal();
    }
    train(8, 0) = 40.0;
    train(8, 1) = 40.0;
    const auto scores = abod_scores(train, train, 4, true);
    CHECK(scores[8] == *std::max_element(scores.begin(), scores.end()));
}

TEST_CASE("surrounded query sees wider angles than a distant one") {
    const DataMatrix train = DataMatrix::from_rows({{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    const DataMatrix queries = DataMatrix::from_rows({{0, 0}, {100, 100}});
    const auto scores = abod_scores(train, queries, 4, false);
    CHECK(scores[0] < scores[1]);
}

TEST_CASE("matches the all-pairs reference exactly") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 5 + static_cast<std::size_t>(rng.uniform_int(8));
        const DataMatrix train = random_matrix(rng, n, 2);
        const auto scores = abod_scores(train, train, 3, true);
        const auto reference = naive_abod(train, train, 3, true);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(scores[i] == doctest::Approx(reference[i]).epsilon(1e-12));
    }
}

TEST_CASE("rotation invariance") {
    Rng rng(43);
    const DataMatrix train = random_matrix(rng, 25, 2);
    const auto base = abod_scores(train, train, 5, true);

    const double theta = 0.7;
    DataMatrix rotated(train.rows(), 2);
    for (std::size_t i = 0; i < train.rows(); ++i) {
        rotated(i, 0) = std::cos(theta) * train(i, 0) - std::sin(theta) * train(i, 1);
        rotated(i, 1) = std::sin(theta) * train(i, 0) + std::cos(theta) * train(i, 1);
    }
    const auto rot = abod_scores(rotated, rotated, 5, true);
    for (std::size_t i = 0; i < base.size(); ++i)
        CHECK(rot[i] == doctest::Approx(base[i]).epsilon(1e-9));
}

TEST_CASE("duplicate-heavy input degrades to zero instead of blowing up") {
    const DataMatrix train = DataMatrix::from_rows({{1, 1}, {1, 1}, {1, 1}});
    const auto scores = abod_scores(train, train, 2, true);
    for (double v : scores) {
        CHECK(std::isfinite(v));
        CHECK(v == 0.0);
    }
}

TEST_CASE("argument validation") {
    const DataMatrix train = DataMatrix::from_rows({{0.0}, {1.0}, {2.0}});
    CHECK_THROWS_AS(abod_scores(train, train, 1, true), std::invalid_argument);
    CHECK_THROWS_AS(abod_scores(train, train, 3, true), std::invalid_argument);
    CHECK_NOTHROW(abod_scores(train, train, 2, true));
    CHECK_NOTHROW(abod_scores(train, train, 3, false));
}
