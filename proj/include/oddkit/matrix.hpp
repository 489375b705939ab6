#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddkit {

/// Dense row-major matrix of real-valued features. The single data currency
/// between detectors, combiners and I/O.
class DataMatrix {
public:
    DataMatrix() = default;

    DataMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), values_(rows * cols, 0.0) {}

    DataMatrix(std::size_t rows, std::size_t cols, std::vector<double> values)
        : rows_(rows), cols_(cols), values_(std::move(values)) {
        if (values_.size() != rows_ * cols_)
            throw std::invalid_argument("DataMatrix: value count does not match rows*cols");
    }

    static DataMatrix from_rows(std::initializer_list<std::initializer_list<double>> rows) {
        DataMatrix m;
        m.rows_ = rows.size();
        m.cols_ = rows.size() ? rows.begin()->size() : 0;
        m.values_.reserve(m.rows_ * m.cols_);
        for (const auto& r : rows) {
            if (r.size() != m.cols_)
                throw std::invalid_argument("DataMatrix::from_rows: ragged initializer");
            m.values_.insert(m.values_.end(), r.begin(), r.end());
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    double& operator()(std::size_t r, std::size_t c) { return values_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return values_[r * cols_ + c]; }

    std::span<const double> row(std::size_t r) const {
        return {values_.data() + r * cols_, cols_};
    }
    std::span<double> row(std::size_t r) { return {values_.data() + r * cols_, cols_}; }

    const std::vector<double>& values() const { return values_; }
    std::vector<double>& values() { return values_; }

    /// Enforces the type invariants: at least one row and column, all finite.
    void validate(const std::string& what = "DataMatrix") const {
        if (rows_ == 0 || cols_ == 0)
            throw std::invalid_argument(what + ": matrix must have at least one row and column");
        for (double v : values_)
            if (!std::isfinite(v))
                throw std::invalid_argument(what + ": non-finite value");
    }

    DataMatrix select_columns(std::span<const std::size_t> keep) const {
        DataMatrix out(rows_, keep.size());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t j = 0; j < keep.size(); ++j)
                out(r, j) = (*this)(r, keep[j]);
        return out;
    }

    bool operator==(const DataMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> values_;
};

/// One raw outlier score per sample. Orientation is fixed library-wide:
/// larger means more anomalous.
using ScoreVector = std::vector<double>;

/// Binary labels: 0 = inlier, 1 = outlier.
using LabelVector = std::vector<int>;

/// n samples x m detectors, input to the combination methods.
using ScoreMatrix = DataMatrix;

}  // namespace oddkit
