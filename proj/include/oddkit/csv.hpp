#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oddkit/data.hpp"
#include "oddkit/matrix.hpp"

namespace oddkit {

// CSV conventions, shared by every file the toolkit reads or writes:
// comma-separated UTF-8, an optional single header line auto-detected by a
// non-numeric first row, LF or CRLF accepted, LF emitted. Values are written
// with 17 significant digits so a write/read round trip is lossless.
// Malformed input raises DataError naming the 1-based line.

struct CsvTable {
    std::vector<std::string> header;  // empty when the file has no header
    DataMatrix data;
};

CsvTable read_csv_table(const std::string& path);

/// All numeric columns as features; a header line, if present, is skipped.
DataMatrix read_matrix_csv(const std::string& path);

/// Features plus ground truth. A header column named "label" or "y"
/// (case-insensitive) becomes y; without one, y is empty.
LabeledDataset read_labeled_csv(const std::string& path);

/// Single 0/1 column.
LabelVector read_labels_csv(const std::string& path);

/// The column named "score" when a header is present, else the first column.
ScoreVector read_score_column(const std::string& path);

void write_matrix_csv(const std::string& path, const DataMatrix& m,
                      const std::vector<std::string>& header = {});

void write_labels_csv(const std::string& path, const LabelVector& labels);

/// Score output: columns `score[,label][,proba]` with a header line.
void write_scores_csv(const std::string& path, const ScoreVector& scores,
                      const LabelVector* labels = nullptr,
                      const ScoreVector* probs = nullptr);

/// 17-significant-digit decimal rendering used for all CSV floats.
std::string format_csv_value(double v);

}  // namespace oddkit
