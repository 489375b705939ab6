#include "oddkit/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "oddkit/errors.hpp"

namespace oddkit {

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_fields(std::string_view line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == ',') {
            fields.emplace_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return fields;
}

bool parse_double(const std::string& field, double& out) {
    if (field.empty()) return false;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto result = std::from_chars(begin, end, out);
    return result.ec == std::errc() && result.ptr == end;
}

[[noreturn]] void bad_cell(std::size_t line_no, const std::string& field) {
    throw DataError("line " + std::to_string(line_no) + ": non-numeric cell '" + field + "'");
}

}  // namespace

CsvTable read_csv_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");

    CsvTable table;
    std::vector<double> values;
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::string line;
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && trim(line).empty() && in.peek() == EOF) break;
        const auto fields = split_fields(line);
        if (fields.size() == 1 && fields[0].empty())
            throw DataError("line " + std::to_string(line_no) + ": empty row");

        if (first_content_line) {
            first_content_line = false;
            cols = fields.size();
            // Header detection: any non-numeric cell makes this a header row.
            bool numeric = true;
            std::vector<double> parsed(fields.size());
            for (std::size_t i = 0; i < fields.size(); ++i)
                if (!parse_double(fields[i], parsed[i])) {
                    numeric = false;
                    break;
                }
            if (!numeric) {
                table.header = fields;
                continue;
            }
            values.insert(values.end(), parsed.begin(), parsed.end());
            ++rows;
            continue;
        }

        if (fields.size() != cols)
            throw DataError("line " + std::to_string(line_no) + ": expected " +
                            std::to_string(cols) + " fields, got " +
                            std::to_string(fields.size()));
        for (const auto& f : fields) {
            double v;
            if (!parse_double(f, v)) bad_cell(line_no, f);
            values.push_back(v);
        }
        ++rows;
    }

    if (rows == 0) throw DataError("'" + path + "': no data rows");
    table.data = DataMatrix(rows, cols, std::move(values));
    for (double v : table.data.values())
        if (!std::isfinite(v)) throw DataError("'" + path + "': non-finite value");
    return table;
}

DataMatrix read_matrix_csv(const std::string& path) { return read_csv_table(path).data; }

LabeledDataset read_labeled_csv(const std::string& path) {
    CsvTable table = read_csv_table(path);
    LabeledDataset out;

    std::optional<std::size_t> label_col;
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        const std::string name = lower(table.header[i]);
        if (name == "label" || name == "y") {
            label_col = i;
            break;
        }
    }
    if (!label_col) {
        out.X = std::move(table.data);
        return out;
    }

    const DataMatrix& m = table.data;
    if (m.cols() < 2) throw DataError("'" + path + "': label column but no features");
    std::vector<std::size_t> feature_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (c != *label_col) feature_cols.push_back(c);
    out.X = m.select_columns(feature_cols);
    out.y.resize(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const double v = m(r, *label_col);
        if (v != 0.0 && v != 1.0)
            throw DataError("'" + path + "': labels must be 0 or 1");
        out.y[r] = static_cast<int>(v);
    }
    return out;
}

LabelVector read_labels_csv(const std::string& path) {
    const DataMatrix m = read_matrix_csv(path);
    if (m.cols() != 1) throw DataError("'" + path + "': expected a single label column");
    LabelVector labels(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        const double v = m(r, 0);
        if (v != 0.0 && v != 1.0) throw DataError("'" + path + "': labels must be 0 or 1");
        labels[r] = static_cast<int>(v);
    }
    return labels;
}

ScoreVector read_score_column(const std::string& path) {
    CsvTable table = read_csv_table(path);
    std::size_t col = 0;
    for (std::size_t i = 0; i < table.header.size(); ++i)
        if (lower(table.header[i]) == "score") {
            col = i;
            break;
        }
    ScoreVector scores(table.data.rows());
    for (std::size_t r = 0; r < table.data.rows(); ++r) scores[r] = table.data(r, col);
    return scores;
}

std::string format_csv_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_matrix_csv(const std::string& path, const DataMatrix& m,
                      const std::vector<std::string>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    if (!header.empty()) {
        if (header.size() != m.cols())
            throw std::invalid_argument("write_matrix_csv: header size mismatch");
        for (std::size_t c = 0; c < header.size(); ++c)
            out << (c ? "," : "") << header[c];
        out << '\n';
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            out << (c ? "," : "") << format_csv_value(m(r, c));
        out << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_labels_csv(const std::string& path, const LabelVector& labels) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << "label\n";
    for (int v : labels) out << v << '\n';
    if (!out) throw DataError("failed writing '" + path + "'");
}

void write_scores_csv(const std::string& path, const ScoreVector& scores,
                      const LabelVector* labels, const ScoreVector* probs) {
    if (labels && labels->size() != scores.size())
        throw std::invalid_argument("write_scores_csv: label length mismatch");
    if (probs && probs->size() != scores.size())
        throw std::invalid_argument("write_scores_csv: proba length mismatch");

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << "score";
    if (labels) out << ",label";
    if (probs) out << ",proba";
    out << '\n';
    for (std::size_t i = 0; i < scores.size(); ++i) {
        out << format_csv_value(scores[i]);
        if (labels) out << ',' << (*labels)[i];
        if (probs) out << ',' << format_csv_value((*probs)[i]);
        out << '\n';
    }
    if (!out) throw DataError("failed writing '" + path + "'");
}

}  // namespace oddkit
