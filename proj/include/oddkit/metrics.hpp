#pragma once

#include <string>

#include "oddkit/matrix.hpp"

namespace oddkit {

/// ROC AUC as the Mann-Whitney rank statistic with average ranks for ties:
/// AUC = (sum of positive ranks - n+(n+1)/2) / (n+ * n-).
/// Throws std::invalid_argument on length mismatch or single-class labels.
double roc_auc(const LabelVector& y, const ScoreVector& scores);

/// Precision among the top-n ranked samples, n = number of true outliers;
/// score ties are broken by lower sample index.
/// Throws std::invalid_argument on length mismatch or when y has no positives.
double precision_at_n(const LabelVector& y, const ScoreVector& scores);

/// Fixed three-decimal rendering, rounding half away from zero. Used by the
/// evaluation line so its output is byte-stable.
std::string format_metric3(double value);

/// "<name> Performance; ROC: <r>; Precision at n: <p>" from already-computed
/// metric values.
std::string format_evaluation_line(const std::string& name, double roc, double prn);

/// Computes both metrics and renders the evaluation line.
std::string evaluate_format(const std::string& name, const LabelVector& y,
                            const ScoreVector& scores);

}  // namespace oddkit
