#pragma once

#include <string>

#include "oddkit/matrix.hpp"

namespace oddkit {

/// Static SVG scatter of a 2-D dataset with truth and prediction overlaid:
/// one marker style per (truth, predicted) class, plus a legend. Classes
/// with no points are omitted.
/// Throws std::invalid_argument unless points has exactly 2 features and the
/// label vectors match its row count; DataError on write failure.
void emit_scatter_plot(const DataMatrix& points, const LabelVector& truth,
                       const LabelVector& predicted, const std::string& out_path);

}  // namespace oddkit
