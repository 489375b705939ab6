#pragma once

#include <cstdint>
#include <vector>

#include "oddkit/matrix.hpp"

namespace oddkit {

// Score-combination methods over an n x m score matrix (one column per
// detector). Columns are assumed comparable; callers z-standardize first
// (see zscore_standardize), the combiners themselves do not.

/// Row-wise arithmetic mean.
ScoreVector combine_average(const ScoreMatrix& scores);

/// Row-wise maximum.
ScoreVector combine_max(const ScoreMatrix& scores);

/// Detector columns 0..m-1 shuffled by `seed` and split into n_buckets
/// near-equal contiguous chunks, the remainder spread one per bucket from
/// the front. Shared by AOM and MOA.
/// Throws std::invalid_argument unless 1 <= n_buckets <= m.
std::vector<std::vector<std::size_t>> bucket_partition(std::size_t m, std::size_t n_buckets,
                                                       std::uint64_t seed);

/// Average of Maximum: per row, bucket maxima averaged across buckets.
/// n_buckets == m reduces to combine_average, n_buckets == 1 to combine_max
/// (both exact).
ScoreVector combine_aom(const ScoreMatrix& scores, std::size_t n_buckets, std::uint64_t seed);

/// Maximum of Average: per row, bucket means maximized across buckets.
/// n_buckets == m reduces to combine_max, n_buckets == 1 to combine_average.
ScoreVector combine_moa(const ScoreMatrix& scores, std::size_t n_buckets, std::uint64_t seed);

}  // namespace oddkit
