#include "oddkit/model_io.hpp"

#include <fstream>

#include <json.hpp>

#include "oddkit/errors.hpp"

namespace oddkit {

namespace {

using nlohmann::json;

json matrix_to_json(const DataMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"values", m.values()}};
}

DataMatrix matrix_from_json(const json& j) {
    return DataMatrix(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                      j.at("values").get<std::vector<double>>());
}

json state_to_json(const Detector& det) {
    json j;
    const auto& state = det.state();

    if (const auto* knn =
            std::get_if<std::pair<KnnParams, std::shared_ptr<const NeighborIndex>>>(&state)) {
        j["kind"] = "knn";
        j["k"] = knn->first.k;
        j["mode"] = knn->first.mode == KnnMode::largest ? "largest"
                    : knn->first.mode == KnnMode::mean  ? "mean"
                                                        : "median";
        j["train"] = matrix_to_json(knn->second->points());
    } else if (const auto* lof = std::get_if<LofState>(&state)) {
        j["kind"] = "lof";
        j["k"] = lof->k;
        j["train"] = matrix_to_json(lof->index->points());
        j["k_distances"] = lof->k_distances;
        j["lrd"] = lof->lrd;
    } else if (const auto* abod =
                   std::get_if<std::pair<std::size_t, std::shared_ptr<const NeighborIndex>>>(
                       &state)) {
        j["kind"] = "abod";
        j["k"] = abod->first;
        j["train"] = matrix_to_json(abod->second->points());
    } else if (const auto* hbos = std::get_if<HbosState>(&state)) {
        j["kind"] = "hbos";
        j["bins"] = hbos->bins;
        j["alpha"] = hbos->alpha;
        j["tol"] = hbos->tol;
        json features = json::array();
        for (const auto& f : hbos->features)
            features.push_back(json{{"edges", f.edges},
                                    {"densities", f.densities},
                                    {"width", f.width},
                                    {"degenerate", f.degenerate}});
        j["features"] = std::move(features);
    } else if (const auto* pca = std::get_if<PcaState>(&state)) {
        j["kind"] = "pca";
        j["mean"] = pca->mean;
        j["eigenvalues"] = pca->eigenvalues;
        j["components"] = matrix_to_json(pca->components);
        j["dim"] = pca->dim;
    } else if (const auto* forest = std::get_if<IsoForest>(&state)) {
        j["kind"] = "iforest";
        j["psi"] = forest->psi;
        j["max_depth"] = forest->max_depth;
        j["dim"] = forest->dim;
        j["seed"] = forest->seed;
        json trees = json::array();
        for (const auto& tree : forest->trees) {
            json nodes = json::array();
            for (const auto& nd : tree.nodes)
                nodes.push_back(json{{"feature", nd.feature},
                                     {"split", nd.split},
                                     {"left", nd.left},
                                     {"right", nd.right},
                                     {"size", nd.size}});
            trees.push_back(std::move(nodes));
        }
        j["trees"] = std::move(trees);
    } else if (const auto* fb = std::get_if<FeatureBagState>(&state)) {
        j["kind"] = "fb";
        j["base_k"] = fb->base_k;
        j["combine"] = fb->combine == FbCombine::average ? "average" : "max";
        j["seed"] = fb->seed;
        j["subsets"] = fb->subsets;
        json rounds = json::array();
        for (const auto& r : fb->rounds)
            rounds.push_back(json{{"train", matrix_to_json(r.index->points())},
                                  {"k_distances", r.k_distances},
                                  {"lrd", r.lrd}});
        j["rounds"] = std::move(rounds);
    } else {
        throw std::invalid_argument("save_model: detector is not fitted");
    }
    return j;
}

json stats_to_json(const TrainStats& s) {
    return json{{"scores", s.scores},   {"labels", s.labels}, {"threshold", s.threshold},
                {"mean", s.mean},       {"std", s.stddev},    {"min", s.min},
                {"max", s.max},         {"contamination", s.contamination}};
}

TrainStats stats_from_json(const json& j) {
    TrainStats s;
    s.scores = j.at("scores").get<ScoreVector>();
    s.labels = j.at("labels").get<LabelVector>();
    s.threshold = j.at("threshold").get<double>();
    s.mean = j.at("mean").get<double>();
    s.stddev = j.at("std").get<double>();
    s.min = j.at("min").get<double>();
    s.max = j.at("max").get<double>();
    s.contamination = j.at("contamination").get<double>();
    return s;
}

json params_to_json(const DetectorParams& p) {
    return json{{"contamination", p.contamination},
                {"k", p.k},
                {"bins", p.bins},
                {"alpha", p.alpha},
                {"tol", p.tol},
                {"trees", p.trees},
                {"psi", p.psi},
                {"rounds", p.rounds},
                {"fb_combine", p.fb_combine == FbCombine::average ? "average" : "max"},
                {"seed", p.seed}};
}

DetectorParams params_from_json(Algo algo, const json& j) {
    DetectorParams p;
    p.algo = algo;
    p.contamination = j.at("contamination").get<double>();
    p.k = j.at("k").get<std::size_t>();
    p.bins = j.at("bins").get<std::size_t>();
    p.alpha = j.at("alpha").get<double>();
    p.tol = j.at("tol").get<double>();
    p.trees = j.at("trees").get<std::size_t>();
    p.psi = j.at("psi").get<std::size_t>();
    p.rounds = j.at("rounds").get<std::size_t>();
    p.fb_combine = j.at("fb_combine").get<std::string>() == "max" ? FbCombine::max
                                                                  : FbCombine::average;
    p.seed = j.at("seed").get<std::uint64_t>();
    return p;
}

Detector::State state_from_json(Algo algo, const json& j) {
    switch (algo) {
        case Algo::knn:
        case Algo::avgknn:
        case Algo::medknn: {
            KnnParams kp;
            kp.k = j.at("k").get<std::size_t>();
            const std::string mode = j.at("mode").get<std::string>();
            kp.mode = mode == "largest" ? KnnMode::largest
                      : mode == "mean"  ? KnnMode::mean
                                        : KnnMode::median;
            auto index = std::make_shared<const NeighborIndex>(matrix_from_json(j.at("train")));
            return std::make_pair(kp, std::move(index));
        }
        case Algo::lof: {
            LofState state;
            state.k = j.at("k").get<std::size_t>();
            state.index = std::make_shared<const NeighborIndex>(matrix_from_json(j.at("train")));
            state.k_distances = j.at("k_distances").get<std::vector<double>>();
            state.lrd = j.at("lrd").get<std::vector<double>>();
            if (state.k_distances.size() != state.index->size() ||
                state.lrd.size() != state.index->size())
                throw DataError("model file: lof aux arrays do not match train size");
            return state;
        }
        case Algo::abod: {
            auto index = std::make_shared<const NeighborIndex>(matrix_from_json(j.at("train")));
            return std::make_pair(j.at("k").get<std::size_t>(), std::move(index));
        }
        case Algo::hbos: {
            HbosState state;
            state.bins = j.at("bins").get<std::size_t>();
            state.alpha = j.at("alpha").get<double>();
            state.tol = j.at("tol").get<double>();
            for (const auto& fj : j.at("features")) {
                HbosFeature f;
                f.edges = fj.at("edges").get<std::vector<double>>();
                f.densities = fj.at("densities").get<std::vector<double>>();
                f.width = fj.at("width").get<double>();
                f.degenerate = fj.at("degenerate").get<bool>();
                state.features.push_back(std::move(f));
            }
            return state;
        }
        case Algo::pca: {
            PcaState state;
            state.mean = j.at("mean").get<std::vector<double>>();
            state.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
            state.components = matrix_from_json(j.at("components"));
            state.dim = j.at("dim").get<std::size_t>();
            return state;
        }
        case Algo::iforest: {
            IsoForest forest;
            forest.psi = j.at("psi").get<std::size_t>();
            forest.max_depth = j.at("max_depth").get<std::size_t>();
            forest.dim = j.at("dim").get<std::size_t>();
            forest.seed = j.at("seed").get<std::uint64_t>();
            for (const auto& tj : j.at("trees")) {
                IsoTree tree;
                for (const auto& nj : tj) {
                    IsoNode nd;
                    nd.feature = nj.at("feature").get<int>();
                    nd.split = nj.at("split").get<double>();
                    nd.left = nj.at("left").get<int>();
                    nd.right = nj.at("right").get<int>();
                    nd.size = nj.at("size").get<std::uint32_t>();
                    tree.nodes.push_back(nd);
                }
                forest.trees.push_back(std::move(tree));
            }
            return forest;
        }
        case Algo::fb: {
            FeatureBagState state;
            state.base_k = j.at("base_k").get<std::size_t>();
            state.combine = j.at("combine").get<std::string>() == "max" ? FbCombine::max
                                                                        : FbCombine::average;
            state.seed = j.at("seed").get<std::uint64_t>();
            state.subsets = j.at("subsets").get<std::vector<std::vector<std::size_t>>>();
            const json& rounds = j.at("rounds");
            if (rounds.size() != state.subsets.size())
                throw DataError("model file: fb rounds do not match subsets");
            for (std::size_t r = 0; r < state.subsets.size(); ++r) {
                LofState round;
                round.k = state.base_k;
                round.index = std::make_shared<const NeighborIndex>(
                    matrix_from_json(rounds[r].at("train")));
                round.k_distances = rounds[r].at("k_distances").get<std::vector<double>>();
                round.lrd = rounds[r].at("lrd").get<std::vector<double>>();
                if (round.k_distances.size() != round.index->size() ||
                    round.lrd.size() != round.index->size())
                    throw DataError("model file: fb aux arrays do not match train size");
                state.rounds.push_back(std::move(round));
            }
            return state;
        }
    }
    throw DataError("model file: unknown state kind");
}

}  // namespace

void save_model(const Detector& detector, const std::string& path) {
    if (!detector.fitted())
        throw std::invalid_argument("save_model: detector is not fitted");

    json j;
    j["format_version"] = kModelFormatVersion;
    j["algo"] = algo_name(detector.params().algo);
    j["params"] = params_to_json(detector.params());
    j["train_stats"] = stats_to_json(detector.train_stats());
    j["state"] = state_to_json(detector);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << j.dump(2) << '\n';
    if (!out) throw DataError("failed writing '" + path + "'");
}

Detector load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError("model file '" + path + "': " + e.what());
    }

    try {
        const int version = j.at("format_version").get<int>();
        if (version != kModelFormatVersion)
            throw DataError("model file '" + path + "': unsupported format_version " +
                            std::to_string(version));
        const auto algo = algo_from_name(j.at("algo").get<std::string>());
        if (!algo) throw DataError("model file '" + path + "': unknown algorithm");

        Detector det(params_from_json(*algo, j.at("params")));
        det.restore(state_from_json(*algo, j.at("state")), stats_from_json(j.at("train_stats")));
        return det;
    } catch (const json::exception& e) {
        throw DataError("model file '" + path + "': " + e.what());
    }
}

}  // namespace oddkit
