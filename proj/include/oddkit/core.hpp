#pragma once

#include "oddkit/matrix.hpp"

namespace oddkit {

/// 100*(1-contamination) percentile of the scores, with linear interpolation
/// between closest order statistics. Scores above the returned value are
/// flagged as outliers.
/// Throws std::invalid_argument on empty scores or contamination outside (0, 0.5].
double threshold_from_scores(const ScoreVector& scores, double contamination);

/// Binary labels: 1 iff score > threshold, strictly. A constant score vector
/// thresholded at its own value is therefore all inliers.
LabelVector labels_from_scores(const ScoreVector& scores, double threshold);

/// Min-max scaling of raw scores into [0, 1] against the train score range.
/// Degenerate range (train_max == train_min) maps everything to 0.
/// Throws std::invalid_argument if train_max < train_min.
ScoreVector proba_linear(const ScoreVector& query_scores, double train_min, double train_max);

/// Unification: prob = max(0, erf((s - mean) / (std * sqrt(2)))). Zero std
/// maps everything to 0.
/// Throws std::invalid_argument if score_std < 0.
ScoreVector proba_unify(const ScoreVector& query_scores, double score_mean, double score_std);

/// Column-wise z-standardization with population std; zero-variance columns
/// map to all zeros. Applied to score matrices before combination so that
/// detector outputs are comparable.
ScoreMatrix zscore_standardize(const ScoreMatrix& matrix);

}  // namespace oddkit
