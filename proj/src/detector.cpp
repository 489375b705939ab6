#include "oddkit/detector.hpp"

#include <algorithm>
#include <stdexcept>

#include "oddkit/core.hpp"
#include "oddkit/stats.hpp"

namespace oddkit {

namespace {
const std::vector<std::pair<Algo, std::string>> kAlgoTable = {
    {Algo::knn, "knn"},   {Algo::avgknn, "avgknn"}, {Algo::medknn, "medknn"},
    {Algo::lof, "lof"},   {Algo::abod, "abod"},     {Algo::hbos, "hbos"},
    {Algo::pca, "pca"},   {Algo::iforest, "iforest"}, {Algo::fb, "fb"},
};
}  // namespace

std::optional<Algo> algo_from_name(std::string_view name) {
    for (const auto& [algo, text] : kAlgoTable)
        if (text == name) return algo;
    return std::nullopt;
}

std::string algo_name(Algo algo) {
    for (const auto& [a, text] : kAlgoTable)
        if (a == algo) return text;
    return "?";
}

const std::vector<std::string>& algo_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [algo, text] : kAlgoTable) out.push_back(text);
        return out;
    }();
    return names;
}

std::size_t DetectorParams::effective_k() const {
    if (k != 0) return k;
    switch (algo) {
        case Algo::lof: return 20;
        case Algo::abod: return 10;
        case Algo::fb: return 10;
        default: return 5;
    }
}

void Detector::fit(const DataMatrix& train) {
    train.validate("Detector::fit: train");
    if (!(params_.contamination > 0.0) || params_.contamination > 0.5)
        throw std::invalid_argument("Detector::fit: contamination must be in (0, 0.5]");

    const int threads = params_.threads;
    const std::size_t k = params_.effective_k();
    ScoreVector train_scores;

    switch (params_.algo) {
        case Algo::knn:
        case Algo::avgknn:
        case Algo::medknn: {
            KnnParams kp;
            kp.k = k;
            kp.mode = params_.algo == Algo::knn      ? KnnMode::largest
                      : params_.algo == Algo::avgknn ? KnnMode::mean
                                                     : KnnMode::median;
            auto index = std::make_shared<const NeighborIndex>(train);
            train_scores = knn_scores(*index, train, kp, /*exclude_self=*/true, threads);
            state_ = std::make_pair(kp, std::move(index));
            break;
        }
        case Algo::lof: {
            LofState state = lof_fit(train, k, threads);
            train_scores = lof_scores(state, train, /*exclude_self=*/true, threads);
            state_ = std::move(state);
            break;
        }
        case Algo::abod: {
            auto index = std::make_shared<const NeighborIndex>(train);
            train_scores = abod_scores(*index, train, k, /*exclude_self=*/true, threads);
            state_ = std::make_pair(k, std::move(index));
            break;
        }
        case Algo::hbos: {
            HbosState state = hbos_fit(train, params_.bins, params_.alpha, params_.tol);
            train_scores = hbos_scores(state, train, threads);
            state_ = std::move(state);
            break;
        }
        case Algo::pca: {
            PcaState state = pca_fit(train);
            train_scores = pca_scores(state, train, threads);
            state_ = std::move(state);
            break;
        }
        case Algo::iforest: {
            IsoForest forest =
                iforest_fit(train, params_.trees, params_.psi, params_.seed, threads);
            train_scores = iforest_scores(forest, train, threads);
            state_ = std::move(forest);
            break;
        }
        case Algo::fb: {
            FeatureBagParams fp;
            fp.m = params_.rounds;
            fp.base_k = k;
            fp.combine = params_.fb_combine;
            fp.seed = params_.seed;
            FeatureBagState state = fb_fit(train, fp, threads);
            train_scores = fb_scores(state, train, /*exclude_self=*/true, threads);
            state_ = std::move(state);
            break;
        }
    }
    compute_train_stats(std::move(train_scores));
}

void Detector::compute_train_stats(ScoreVector train_scores) {
    stats_.threshold = threshold_from_scores(train_scores, params_.contamination);
    stats_.labels = labels_from_scores(train_scores, stats_.threshold);
    stats_.mean = mean_of(train_scores);
    stats_.stddev = population_std(train_scores);
    stats_.min = *std::min_element(train_scores.begin(), train_scores.end());
    stats_.max = *std::max_element(train_scores.begin(), train_scores.end());
    stats_.contamination = params_.contamination;
    stats_.scores = std::move(train_scores);
}

ScoreVector Detector::decision_function(const DataMatrix& query) const {
    if (!fitted()) throw std::invalid_argument("Detector: not fitted");
    const int threads = params_.threads;

    if (const auto* knn = std::get_if<std::pair<KnnParams, std::shared_ptr<const NeighborIndex>>>(&state_))
        return knn_scores(*knn->second, query, knn->first, /*exclude_self=*/false, threads);
    if (const auto* lof = std::get_if<LofState>(&state_))
        return lof_scores(*lof, query, /*exclude_self=*/false, threads);
    if (const auto* abod = std::get_if<std::pair<std::size_t, std::shared_ptr<const NeighborIndex>>>(&state_))
        return abod_scores(*abod->second, query, abod->first, /*exclude_self=*/false, threads);
    if (const auto* hbos = std::get_if<HbosState>(&state_))
        return hbos_scores(*hbos, query, threads);
    if (const auto* pca = std::get_if<PcaState>(&state_))
        return pca_scores(*pca, query, threads);
    if (const auto* forest = std::get_if<IsoForest>(&state_))
        return iforest_scores(*forest, query, threads);
    if (const auto* fb = std::get_if<FeatureBagState>(&state_))
        return fb_scores(*fb, query, /*exclude_self=*/false, threads);
    throw std::logic_error("Detector: unknown state");
}

LabelVector Detector::predict(const DataMatrix& query) const {
    return labels_from_scores(decision_function(query), stats_.threshold);
}

ScoreVector Detector::predict_proba(const DataMatrix& query, ProbaMethod method) const {
    const ScoreVector scores = decision_function(query);
    if (method == ProbaMethod::linear)
        return proba_linear(scores, stats_.min, stats_.max);
    return proba_unify(scores, stats_.mean, stats_.stddev);
}

const TrainStats& Detector::train_stats() const {
    if (!fitted()) throw std::invalid_argument("Detector: not fitted");
    return stats_;
}

void Detector::restore(State state, TrainStats stats) {
    state_ = std::move(state);
    stats_ = std::move(stats);
}

}  // namespace oddkit
