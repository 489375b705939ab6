#include "oddkit/combine.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddkit/rng.hpp"

namespace oddkit {

namespace {

void check_matrix(const ScoreMatrix& scores, const char* what) {
    scores.validate(what);
}

enum class BucketReduce { max_then_average, average_then_max };

ScoreVector bucketed_combine(const ScoreMatrix& scores, std::size_t n_buckets,
                             std::uint64_t seed, BucketReduce reduce) {
    check_matrix(scores, "combine: scores");
    const std::size_t m = scores.cols();
    if (n_buckets == 0 || n_buckets > m)
        throw std::invalid_argument("combine: n_buckets must be in [1, m]");

    // Trivial partitions collapse to the plain combiners; taking those paths
    // keeps the documented identities bit-exact.
    if (n_buckets == m)
        return reduce == BucketReduce::max_then_average ? combine_average(scores)
                                                        : combine_max(scores);
    if (n_buckets == 1)
        return reduce == BucketReduce::max_then_average ? combine_max(scores)
                                                        : combine_average(scores);

    const auto buckets = bucket_partition(m, n_buckets, seed);
    ScoreVector out(scores.rows());
    for (std::size_t r = 0; r < scores.rows(); ++r) {
        double acc = 0.0;
        bool first_bucket = true;
        for (const auto& bucket : buckets) {
            double bucket_value;
            if (reduce == BucketReduce::max_then_average) {
                bucket_value = scores(r, bucket[0]);
                for (std::size_t c : bucket)
                    bucket_value = std::max(bucket_value, scores(r, c));
                acc += bucket_value;
            } else {
                double sum = 0.0;
                for (std::size_t c : bucket) sum += scores(r, c);
                bucket_value = sum / static_cast<double>(bucket.size());
                acc = first_bucket ? bucket_value : std::max(acc, bucket_value);
            }
            first_bucket = false;
        }
        out[r] = reduce == BucketReduce::max_then_average
                     ? acc / static_cast<double>(buckets.size())
                     : acc;
    }
    return out;
}

}  // namespace

ScoreVector combine_average(const ScoreMatrix& scores) {
    check_matrix(scores, "combine_average: scores");
    ScoreVector out(scores.rows());
    for (std::size_t r = 0; r < scores.rows(); ++r) {
        double sum = 0.0;
        for (std::size_t c = 0; c < scores.cols(); ++c) sum += scores(r, c);
        out[r] = sum / static_cast<double>(scores.cols());
    }
    return out;
}

ScoreVector combine_max(const ScoreMatrix& scores) {
    check_matrix(scores, "combine_max: scores");
    ScoreVector out(scores.rows());
    for (std::size_t r = 0; r < scores.rows(); ++r) {
        double best = scores(r, 0);
        for (std::size_t c = 1; c < scores.cols(); ++c) best = std::max(best, scores(r, c));
        out[r] = best;
    }
    return out;
}

std::vector<std::vector<std::size_t>> bucket_partition(std::size_t m, std::size_t n_buckets,
                                                       std::uint64_t seed) {
    if (n_buckets == 0 || n_buckets > m)
        throw std::invalid_argument("bucket_partition: n_buckets must be in [1, m]");

    std::vector<std::size_t> order(m);
    for (std::size_t i = 0; i < m; ++i) order[i] = i;
    Rng rng(seed);
    rng.shuffle(order);

    const std::size_t base = m / n_buckets;
    const std::size_t remainder = m % n_buckets;
    std::vector<std::vector<std::size_t>> buckets(n_buckets);
    std::size_t pos = 0;
    for (std::size_t b = 0; b < n_buckets; ++b) {
        const std::size_t take = base + (b < remainder ? 1 : 0);
        buckets[b].assign(order.begin() + pos, order.begin() + pos + take);
        pos += take;
    }
    return buckets;
}

ScoreVector combine_aom(const ScoreMatrix& scores, std::size_t n_buckets, std::uint64_t seed) {
    return bucketed_combine(scores, n_buckets, seed, BucketReduce::max_then_average);
}

ScoreVector combine_moa(const ScoreMatrix& scores, std::size_t n_buckets, std::uint64_t seed) {
    return bucketed_combine(scores, n_buckets, seed, BucketReduce::average_then_max);
}

}  // namespace oddkit
