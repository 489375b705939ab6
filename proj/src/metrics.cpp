#include "oddkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace oddkit {

namespace {

void check_lengths(const LabelVector& y, const ScoreVector& scores, const char* what) {
    if (y.size() != scores.size())
        throw std::invalid_argument(std::string(what) + ": label/score length mismatch");
    if (y.empty()) throw std::invalid_argument(std::string(what) + ": empty input");
    for (int v : y)
        if (v != 0 && v != 1)
            throw std::invalid_argument(std::string(what) + ": labels must be 0 or 1");
}

}  // namespace

double roc_auc(const LabelVector& y, const ScoreVector& scores) {
    check_lengths(y, scores, "roc_auc");
    const std::size_t n = y.size();
    const auto n_pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    const std::size_t n_neg = n - n_pos;
    if (n_pos == 0 || n_neg == 0)
        throw std::invalid_argument("roc_auc: need both classes present");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });

    // Average ranks over tie groups (1-based).
    double positive_rank_sum = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && scores[order[j + 1]] == scores[order[i]]) ++j;
        const double avg_rank = 0.5 * static_cast<double>(i + j) + 1.0;
        for (std::size_t t = i; t <= j; ++t)
            if (y[order[t]] == 1) positive_rank_sum += avg_rank;
        i = j + 1;
    }

    const double np = static_cast<double>(n_pos);
    const double nn = static_cast<double>(n_neg);
    return (positive_rank_sum - np * (np + 1.0) / 2.0) / (np * nn);
}

double precision_at_n(const LabelVector& y, const ScoreVector& scores) {
    check_lengths(y, scores, "precision_at_n");
    const auto n_pos = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    if (n_pos == 0) throw std::invalid_argument("precision_at_n: no positive labels");

    std::vector<std::size_t> order(y.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b] || (scores[a] == scores[b] && a < b);
    });

    std::size_t hits = 0;
    for (std::size_t i = 0; i < n_pos; ++i)
        if (y[order[i]] == 1) ++hits;
    return static_cast<double>(hits) / static_cast<double>(n_pos);
}

std::string format_metric3(double value) {
    // llround rounds half away from zero; rebuilding the digits avoids any
    // double-rounding through printf.
    const long long scaled = std::llround(value * 1000.0);
    const bool negative = scaled < 0;
    const unsigned long long magnitude =
        negative ? static_cast<unsigned long long>(-scaled)
                 : static_cast<unsigned long long>(scaled);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%llu.%03llu", negative ? "-" : "", magnitude / 1000,
                  magnitude % 1000);
    return buf;
}

std::string format_evaluation_line(const std::string& name, double roc, double prn) {
    return name + " Performance; ROC: " + format_metric3(roc) +
           "; Precision at n: " + format_metric3(prn);
}

std::string evaluate_format(const std::string& name, const LabelVector& y,
                            const ScoreVector& scores) {
    return format_evaluation_line(name, roc_auc(y, scores), precision_at_n(y, scores));
}

}  // namespace oddkit
