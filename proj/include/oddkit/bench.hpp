#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oddkit/detector.hpp"
#include "oddkit/matrix.hpp"

namespace oddkit {

struct BenchDataset {
    std::string name;
    DataMatrix X;
    LabelVector y;
};

struct BenchCell {
    std::string dataset;
    std::string algo;
    double roc = 0.0;
    double precision_at_n = 0.0;
    double fit_ms = 0.0;
    double score_ms = 0.0;
    bool failed = false;
    std::string message;
};

/// One row per (dataset, algorithm): the detector is fitted on X, scores X,
/// and is judged against y; metrics and wall times are averaged over the
/// seeds. A failing cell is recorded with its message and does not abort the
/// rest.
/// Throws std::invalid_argument when datasets, algorithms or seeds are empty.
std::vector<BenchCell> run_benchmark(const std::vector<BenchDataset>& datasets,
                                     const std::vector<DetectorParams>& algos,
                                     const std::vector<std::uint64_t>& seeds);

/// Aligned text table; timings rendered with 3 significant digits.
std::string render_benchmark_table(const std::vector<BenchCell>& cells);

void write_benchmark_csv(const std::string& path, const std::vector<BenchCell>& cells);

}  // namespace oddkit
