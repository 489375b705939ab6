#include "oddkit/bench.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oddkit/errors.hpp"
#include "oddkit/metrics.hpp"

namespace oddkit {

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

std::string format_ms(double ms) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", ms);
    return buf;
}

std::string format_metric(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::vector<BenchCell> run_benchmark(const std::vector<BenchDataset>& datasets,
                                     const std::vector<DetectorParams>& algos,
                                     const std::vector<std::uint64_t>& seeds) {
    if (datasets.empty()) throw std::invalid_argument("run_benchmark: no datasets");
    if (algos.empty()) throw std::invalid_argument("run_benchmark: no algorithms");
    if (seeds.empty()) throw std::invalid_argument("run_benchmark: no seeds");

    std::vector<BenchCell> cells;
    for (const auto& ds : datasets) {
        for (const auto& base_params : algos) {
            BenchCell cell;
            cell.dataset = ds.name;
            cell.algo = algo_name(base_params.algo);
            try {
                double roc_sum = 0, prn_sum = 0, fit_sum = 0, score_sum = 0;
                for (const std::uint64_t seed : seeds) {
                    DetectorParams params = base_params;
                    params.seed = seed;
                    Detector det(params);

                    auto t0 = std::chrono::steady_clock::now();
                    det.fit(ds.X);
                    fit_sum += ms_since(t0);

                    t0 = std::chrono::steady_clock::now();
                    const ScoreVector scores = det.decision_function(ds.X);
                    score_sum += ms_since(t0);

                    roc_sum += roc_auc(ds.y, scores);
                    prn_sum += precision_at_n(ds.y, scores);
                }
                const auto n = static_cast<double>(seeds.size());
                cell.roc = roc_sum / n;
                cell.precision_at_n = prn_sum / n;
                cell.fit_ms = fit_sum / n;
                cell.score_ms = score_sum / n;
            } catch (const std::exception& e) {
                cell.failed = true;
                cell.message = e.what();
            }
            cells.push_back(std::move(cell));
        }
    }
    return cells;
}

std::string render_benchmark_table(const std::vector<BenchCell>& cells) {
    std::size_t dataset_width = 7, algo_width = 4;
    for (const auto& c : cells) {
        dataset_width = std::max(dataset_width, c.dataset.size());
        algo_width = std::max(algo_width, c.algo.size());
    }

    std::ostringstream out;
    auto pad = [&](const std::string& s, std::size_t w) {
        out << s;
        for (std::size_t i = s.size(); i < w + 2; ++i) out << ' ';
    };
    pad("dataset", dataset_width);
    pad("algo", algo_width);
    pad("roc", 8);
    pad("p@n", 8);
    pad("fit_ms", 8);
    out << "score_ms\n";

    for (const auto& c : cells) {
        pad(c.dataset, dataset_width);
        pad(c.algo, algo_width);
        if (c.failed) {
            pad("ERROR", 8);
            pad("ERROR", 8);
            pad("-", 8);
            out << "-\n";
            continue;
        }
        pad(format_metric(c.roc), 8);
        pad(format_metric(c.precision_at_n), 8);
        pad(format_ms(c.fit_ms), 8);
        out << format_ms(c.score_ms) << '\n';
    }
    return out.str();
}

void write_benchmark_csv(const std::string& path, const std::vector<BenchCell>& cells) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << "dataset,algo,roc,precision_at_n,fit_ms,score_ms\n";
    for (const auto& c : cells) {
        if (c.failed) {
            out << c.dataset << ',' << c.algo << ",ERROR,ERROR,,\n";
            continue;
        }
        out << c.dataset << ',' << c.algo << ',' << format_metric(c.roc) << ','
            << format_metric(c.precision_at_n) << ',' << format_ms(c.fit_ms) << ','
            << format_ms(c.score_ms) << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace oddkit
