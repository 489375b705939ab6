#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "oddkit/abod.hpp"
#include "oddkit/feature_bagging.hpp"
#include "oddkit/hbos.hpp"
#include "oddkit/iforest.hpp"
#include "oddkit/knn.hpp"
#include "oddkit/lof.hpp"
#include "oddkit/matrix.hpp"
#include "oddkit/pca.hpp"

namespace oddkit {

enum class Algo { knn, avgknn, medknn, lof, abod, hbos, pca, iforest, fb };

std::optional<Algo> algo_from_name(std::string_view name);
std::string algo_name(Algo algo);
const std::vector<std::string>& algo_names();

struct DetectorParams {
    Algo algo = Algo::knn;
    double contamination = 0.1;
    /// Neighbor count for knn/avgknn/medknn/lof/abod and the LOF inside fb;
    /// 0 picks the per-algorithm default (knn family 5, lof 20, abod 10, fb 10).
    std::size_t k = 0;
    // hbos
    std::size_t bins = 10;
    double alpha = 0.1;
    double tol = 0.5;
    // iforest
    std::size_t trees = 100;
    std::size_t psi = 256;
    // fb
    std::size_t rounds = 10;
    FbCombine fb_combine = FbCombine::average;

    std::uint64_t seed = 42;
    int threads = 0;  // <= 0: machine parallelism

    std::size_t effective_k() const;
};

/// Train-score statistics every fitted detector carries: raw scores, the
/// contamination threshold, the induced binary labels, and the moments and
/// range used by the probability conversions.
struct TrainStats {
    ScoreVector scores;
    LabelVector labels;
    double threshold = 0.0;
    double mean = 0.0;
    double stddev = 0.0;
    double min = 0.0;
    double max = 0.0;
    double contamination = 0.1;
};

enum class ProbaMethod { linear, unify };

/// The uniform detector contract: fit on a train matrix, then score, label
/// or probability-convert any query matrix. Immutable after fit; concurrent
/// scoring from multiple threads is safe.
class Detector {
public:
    using State = std::variant<std::monostate,
                               std::pair<KnnParams, std::shared_ptr<const NeighborIndex>>,
                               LofState,
                               std::pair<std::size_t, std::shared_ptr<const NeighborIndex>>,
                               HbosState, PcaState, IsoForest, FeatureBagState>;

    explicit Detector(DetectorParams params) : params_(std::move(params)) {}

    /// Computes algorithm state plus train statistics: self-excluded scores
    /// for the neighbor-based detectors, direct scores otherwise.
    void fit(const DataMatrix& train);

    /// Raw outlier scores for unseen data; larger = more anomalous.
    ScoreVector decision_function(const DataMatrix& query) const;

    /// Binary labels from raw scores via the fitted threshold.
    LabelVector predict(const DataMatrix& query) const;

    /// Scores mapped into [0, 1] by train-range normalization (linear) or
    /// Unification (unify).
    ScoreVector predict_proba(const DataMatrix& query, ProbaMethod method) const;

    bool fitted() const { return !std::holds_alternative<std::monostate>(state_); }
    const TrainStats& train_stats() const;
    const DetectorParams& params() const { return params_; }

    /// Worker-thread count is a runtime setting, not part of the model:
    /// results are independent of it by contract.
    void set_threads(int threads) { params_.threads = threads; }

    // Persistence hooks (model_io.cpp).
    const State& state() const { return state_; }
    void restore(State state, TrainStats stats);

private:
    void compute_train_stats(ScoreVector train_scores);

    DetectorParams params_;
    State state_;
    TrainStats stats_;
};

}  // namespace oddkit
