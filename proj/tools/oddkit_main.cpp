// oddkit: batch outlier-detection pipelines over CSV files.
//
// Subcommands: generate, fit, score, eval, combine, bench, plot.
// Exit codes: 0 success, 2 argument error, 3 data/file error.
// stdout carries only documented payload (the eval line, bench tables);
// diagnostics go to stderr.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "oddkit/bench.hpp"
#include "oddkit/combine.hpp"
#include "oddkit/core.hpp"
#include "oddkit/csv.hpp"
#include "oddkit/data.hpp"
#include "oddkit/detector.hpp"
#include "oddkit/errors.hpp"
#include "oddkit/metrics.hpp"
#include "oddkit/model_io.hpp"
#include "oddkit/plot.hpp"

namespace fs = std::filesystem;
using namespace oddkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitArgument = 2;
constexpr int kExitData = 3;

std::string joined_algo_names() {
    std::string out;
    for (const auto& name : algo_names()) {
        if (!out.empty()) out += ", ";
        out += name;
    }
    return out;
}

Algo parse_algo(const std::string& name) {
    const auto algo = algo_from_name(name);
    if (!algo)
        throw std::invalid_argument("unknown algorithm '" + name +
                                    "'; valid algorithms: " + joined_algo_names());
    return *algo;
}

std::vector<std::string> split_list(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

struct CliOptions {
    std::string input, output, model, truth, pred, out_dir, name = "Model";
    std::string algo, proba, method = "average", fb_combine = "average";
    std::string algos = "knn,lof,iforest", seeds = "42";
    std::size_t n_train = 200, n_test = 100, n_features = 2;
    double contamination = 0.1, alpha = 0.1, tol = 0.5;
    std::size_t k = 0, bins = 10, trees = 100, psi = 256, rounds = 10, buckets = 1;
    std::uint64_t seed = 42;
    int threads = 0;
    bool emit_labels = false;
    bool standardize = true;
};

DetectorParams detector_params(const CliOptions& opt, Algo algo) {
    DetectorParams p;
    p.algo = algo;
    p.contamination = opt.contamination;
    p.k = opt.k;
    p.bins = opt.bins;
    p.alpha = opt.alpha;
    p.tol = opt.tol;
    p.trees = opt.trees;
    p.psi = opt.psi;
    p.rounds = opt.rounds;
    if (opt.fb_combine == "max")
        p.fb_combine = FbCombine::max;
    else if (opt.fb_combine == "average")
        p.fb_combine = FbCombine::average;
    else
        throw std::invalid_argument("--fb-combine must be 'average' or 'max'");
    p.seed = opt.seed;
    p.threads = opt.threads;
    return p;
}

int cmd_generate(const CliOptions& opt) {
    GenParams params;
    params.n_train = opt.n_train;
    params.n_test = opt.n_test;
    params.n_features = opt.n_features;
    params.contamination = opt.contamination;
    params.seed = opt.seed;
    const auto [train, test] = generate_data(params);

    fs::create_directories(opt.out_dir);
    std::vector<std::string> header;
    for (std::size_t c = 0; c < params.n_features; ++c)
        header.push_back("f" + std::to_string(c));

    const fs::path dir(opt.out_dir);
    write_matrix_csv((dir / "X_train.csv").string(), train.X, header);
    write_labels_csv((dir / "y_train.csv").string(), train.y);
    write_matrix_csv((dir / "X_test.csv").string(), test.X, header);
    write_labels_csv((dir / "y_test.csv").string(), test.y);
    std::cerr << "wrote 4 files to " << dir.string() << "\n";
    return kExitOk;
}

int cmd_fit(const CliOptions& opt) {
    const Algo algo = parse_algo(opt.algo);
    Detector det(detector_params(opt, algo));
    det.fit(read_matrix_csv(opt.input));
    save_model(det, opt.model);
    std::cerr << "fitted " << opt.algo << " on " << opt.input << " -> " << opt.model << "\n";
    return kExitOk;
}

int cmd_score(const CliOptions& opt) {
    Detector det = load_model(opt.model);
    det.set_threads(opt.threads);
    const DataMatrix query = read_matrix_csv(opt.input);
    const ScoreVector scores = det.decision_function(query);

    std::optional<LabelVector> labels;
    if (opt.emit_labels) labels = det.predict(query);
    std::optional<ScoreVector> probs;
    if (!opt.proba.empty()) {
        if (opt.proba == "linear")
            probs = det.predict_proba(query, ProbaMethod::linear);
        else if (opt.proba == "unify")
            probs = det.predict_proba(query, ProbaMethod::unify);
        else
            throw std::invalid_argument("--proba must be 'linear' or 'unify'");
    }
    write_scores_csv(opt.output, scores, labels ? &*labels : nullptr,
                     probs ? &*probs : nullptr);
    std::cerr << "scored " << query.rows() << " rows -> " << opt.output << "\n";
    return kExitOk;
}

int cmd_eval(const CliOptions& opt) {
    const ScoreVector scores = read_score_column(opt.input);
    const LabelVector y = read_labels_csv(opt.truth);
    std::cout << evaluate_format(opt.name, y, scores) << "\n";
    return kExitOk;
}

int cmd_combine(const CliOptions& opt) {
    ScoreMatrix matrix = read_matrix_csv(opt.input);
    if (opt.standardize) matrix = zscore_standardize(matrix);

    ScoreVector combined;
    if (opt.method == "average")
        combined = combine_average(matrix);
    else if (opt.method == "max")
        combined = combine_max(matrix);
    else if (opt.method == "aom")
        combined = combine_aom(matrix, opt.buckets, opt.seed);
    else if (opt.method == "moa")
        combined = combine_moa(matrix, opt.buckets, opt.seed);
    else
        throw std::invalid_argument("--method must be one of average, max, aom, moa");

    write_scores_csv(opt.output, combined);
    std::cerr << "combined " << matrix.cols() << " columns -> " << opt.output << "\n";
    return kExitOk;
}

int cmd_bench(const CliOptions& opt, const std::vector<std::string>& data_files,
              const std::vector<std::string>& truth_files) {
    if (data_files.empty()) throw std::invalid_argument("bench: need at least one --data file");
    if (!truth_files.empty() && truth_files.size() != data_files.size())
        throw std::invalid_argument("bench: --truth count must match --data count");

    std::vector<BenchDataset> datasets;
    for (std::size_t i = 0; i < data_files.size(); ++i) {
        BenchDataset ds;
        ds.name = fs::path(data_files[i]).stem().string();
        if (truth_files.empty()) {
            LabeledDataset labeled = read_labeled_csv(data_files[i]);
            if (labeled.y.empty())
                throw DataError("'" + data_files[i] +
                                "': no label column; pass --truth files");
            ds.X = std::move(labeled.X);
            ds.y = std::move(labeled.y);
        } else {
            ds.X = read_matrix_csv(data_files[i]);
            ds.y = read_labels_csv(truth_files[i]);
        }
        if (ds.y.size() != ds.X.rows())
            throw DataError("'" + data_files[i] + "': label count does not match rows");
        datasets.push_back(std::move(ds));
    }

    std::vector<DetectorParams> algos;
    for (const auto& name : split_list(opt.algos))
        algos.push_back(detector_params(opt, parse_algo(name)));

    std::vector<std::uint64_t> seeds;
    for (const auto& s : split_list(opt.seeds)) seeds.push_back(std::stoull(s));

    const auto cells = run_benchmark(datasets, algos, seeds);
    std::cout << render_benchmark_table(cells);
    if (!opt.output.empty()) write_benchmark_csv(opt.output, cells);
    return kExitOk;
}

int cmd_plot(const CliOptions& opt) {
    const DataMatrix points = read_matrix_csv(opt.input);
    const LabelVector truth = read_labels_csv(opt.truth);

    // Predictions come either from a labels CSV or from a score CSV with a
    // label column.
    const CsvTable pred_table = read_csv_table(opt.pred);
    std::size_t col = 0;
    for (std::size_t i = 0; i < pred_table.header.size(); ++i)
        if (pred_table.header[i] == "label") {
            col = i;
            break;
        }
    LabelVector predicted(pred_table.data.rows());
    for (std::size_t r = 0; r < pred_table.data.rows(); ++r) {
        const double v = pred_table.data(r, col);
        if (v != 0.0 && v != 1.0)
            throw DataError("'" + opt.pred + "': predictions must be 0 or 1");
        predicted[r] = static_cast<int>(v);
    }

    emit_scatter_plot(points, truth, predicted, opt.output);
    std::cerr << "wrote " << opt.output << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"oddkit: multivariate outlier detection over CSV pipelines"};
    app.require_subcommand(1);

    CliOptions opt;
    std::vector<std::string> data_files, truth_files;

    auto* generate = app.add_subcommand("generate", "emit a synthetic labeled train/test pair");
    generate->add_option("--n-train", opt.n_train, "train rows");
    generate->add_option("--n-test", opt.n_test, "test rows");
    generate->add_option("--n-features", opt.n_features, "feature count");
    generate->add_option("--contamination", opt.contamination, "outlier fraction");
    generate->add_option("--seed", opt.seed, "rng seed");
    generate->add_option("--out-dir", opt.out_dir, "output directory")->required();

    auto* fit = app.add_subcommand("fit", "fit a detector on a feature CSV");
    fit->add_option("--algo", opt.algo, "algorithm: " + joined_algo_names())->required();
    fit->add_option("--input", opt.input, "train feature CSV")->required();
    fit->add_option("--model", opt.model, "output model JSON")->required();
    fit->add_option("--contamination", opt.contamination, "outlier fraction");
    fit->add_option("--k", opt.k, "neighbor count (0 = algorithm default)");
    fit->add_option("--bins", opt.bins, "hbos: histogram bins");
    fit->add_option("--alpha", opt.alpha, "hbos: density smoothing");
    fit->add_option("--tol", opt.tol, "hbos: out-of-range clamp fraction");
    fit->add_option("--trees", opt.trees, "iforest: tree count");
    fit->add_option("--psi", opt.psi, "iforest: subsample size");
    fit->add_option("--rounds", opt.rounds, "fb: rounds");
    fit->add_option("--fb-combine", opt.fb_combine, "fb: average|max");
    fit->add_option("--seed", opt.seed, "rng seed");
    fit->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    auto* score = app.add_subcommand("score", "score a CSV with a saved model");
    score->add_option("--model", opt.model, "model JSON")->required();
    score->add_option("--input", opt.input, "query feature CSV")->required();
    score->add_option("--output", opt.output, "output score CSV")->required();
    score->add_flag("--labels", opt.emit_labels, "also emit binary labels");
    score->add_option("--proba", opt.proba, "also emit probabilities: linear|unify");
    score->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    auto* eval = app.add_subcommand("eval", "print the evaluation line for a score CSV");
    eval->add_option("--input", opt.input, "score CSV")->required();
    eval->add_option("--truth", opt.truth, "ground-truth label CSV")->required();
    eval->add_option("--name", opt.name, "display name");

    auto* combine = app.add_subcommand("combine", "merge a multi-detector score matrix");
    combine->add_option("--input", opt.input, "score matrix CSV (one column per detector)")
        ->required();
    combine->add_option("--output", opt.output, "output score CSV")->required();
    combine->add_option("--method", opt.method, "average|max|aom|moa");
    combine->add_option("--buckets", opt.buckets, "aom/moa bucket count");
    combine->add_option("--seed", opt.seed, "aom/moa shuffle seed");
    combine->add_flag("--standardize,!--no-standardize", opt.standardize,
                      "z-standardize columns first (default on)");

    auto* bench = app.add_subcommand("bench", "benchmark algorithms over labeled datasets");
    bench->add_option("--data", data_files, "feature CSV (repeatable; may carry a label column)")
        ->required();
    bench->add_option("--truth", truth_files, "label CSV per --data file");
    bench->add_option("--algos", opt.algos, "comma-separated algorithm list");
    bench->add_option("--seeds", opt.seeds, "comma-separated seed list");
    bench->add_option("--contamination", opt.contamination, "outlier fraction");
    bench->add_option("--k", opt.k, "neighbor count (0 = algorithm default)");
    bench->add_option("--output", opt.output, "also write the table as CSV");
    bench->add_option("--threads", opt.threads, "worker threads (0 = all cores)");

    auto* plot = app.add_subcommand("plot", "emit an SVG scatter of truth vs prediction");
    plot->add_option("--input", opt.input, "2-feature CSV")->required();
    plot->add_option("--truth", opt.truth, "ground-truth label CSV")->required();
    plot->add_option("--pred", opt.pred, "predicted label CSV")->required();
    plot->add_option("--output", opt.output, "output SVG path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgument;
    }

    try {
        if (generate->parsed()) return cmd_generate(opt);
        if (fit->parsed()) return cmd_fit(opt);
        if (score->parsed()) return cmd_score(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (combine->parsed()) return cmd_combine(opt);
        if (bench->parsed()) return cmd_bench(opt, data_files, truth_files);
        if (plot->parsed()) return cmd_plot(opt);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitArgument;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
    return kExitOk;
}
