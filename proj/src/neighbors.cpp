#include "oddkit/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "oddkit/parallel.hpp"

namespace oddkit {

namespace {
constexpr std::size_t kLeafSize = 16;

bool candidate_less(double d2a, std::size_t ia, double d2b, std::size_t ib) {
    return d2a < d2b || (d2a == d2b && ia < ib);
}
}  // namespace

double euclidean(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw std::invalid_argument("euclidean: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

// Fixed-capacity max-heap on (d2, index); the lexicographically largest
// candidate sits on top and is evicted first.
struct NeighborIndex::Candidates {
    explicit Candidates(std::size_t k) : capacity(k) { heap.reserve(k); }

    bool full() const { return heap.size() == capacity; }
    double worst_d2() const { return heap.front().first; }

    void offer(double d2, std::size_t idx) {
        if (!full()) {
            heap.emplace_back(d2, idx);
            std::push_heap(heap.begin(), heap.end(), less);
            return;
        }
        if (candidate_less(d2, idx, heap.front().first, heap.front().second)) {
            std::pop_heap(heap.begin(), heap.end(), less);
            heap.back() = {d2, idx};
            std::push_heap(heap.begin(), heap.end(), less);
        }
    }

    // True when a subtree whose points all have squared distance >= plane_d2
    // cannot contribute. Equal distances must still be explored: a tied
    // candidate with a smaller index beats the current worst.
    bool can_prune(double plane_d2) const { return full() && plane_d2 > worst_d2(); }

    NeighborResult finish() {
        std::sort(heap.begin(), heap.end(), [](const auto& a, const auto& b) {
            return candidate_less(a.first, a.second, b.first, b.second);
        });
        NeighborResult out;
        out.indices.reserve(heap.size());
        out.distances.reserve(heap.size());
        for (const auto& [d2, idx] : heap) {
            out.indices.push_back(idx);
            out.distances.push_back(std::sqrt(d2));
        }
        return out;
    }

    static bool less(const std::pair<double, std::size_t>& a,
                     const std::pair<double, std::size_t>& b) {
        return candidate_less(a.first, a.second, b.first, b.second);
    }

    std::size_t capacity;
    std::vector<std::pair<double, std::size_t>> heap;
};

NeighborIndex::NeighborIndex(DataMatrix points, IndexStrategy strategy)
    : points_(std::move(points)), strategy_(strategy) {
    points_.validate("NeighborIndex");
    if (strategy_ == IndexStrategy::kdtree) {
        order_.resize(points_.rows());
        for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = i;
        nodes_.reserve(2 * points_.rows() / kLeafSize + 4);
        build(0, order_.size(), 0);
    }
}

double NeighborIndex::dist2(std::span<const double> q, std::size_t point) const {
    const auto p = points_.row(point);
    double s = 0.0;
    for (std::size_t i = 0; i < q.size(); ++i) {
        const double d = q[i] - p[i];
        s += d * d;
    }
    return s;
}

int NeighborIndex::build(std::size_t begin, std::size_t end, std::size_t depth) {
    const int id = static_cast<int>(nodes_.size());
    nodes_.emplace_back();
    if (end - begin <= kLeafSize) {
        nodes_[id].begin = begin;
        nodes_[id].end = end;
        return id;
    }
    const std::size_t axis = depth % points_.cols();
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                     [&](std::size_t a, std::size_t b) {
                         const double va = points_(a, axis), vb = points_(b, axis);
                         return va < vb || (va == vb && a < b);
                     });
    const double split = points_(order_[mid], axis);
    const int left = build(begin, mid, depth + 1);
    const int right = build(mid, end, depth + 1);
    nodes_[id].axis = static_cast<int>(axis);
    nodes_[id].split = split;
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
}

void NeighborIndex::search(int node, std::span<const double> q,
                           std::optional<std::size_t> exclude, Candidates& best) const {
    const Node& nd = nodes_[static_cast<std::size_t>(node)];
    if (nd.axis < 0) {
        for (std::size_t i = nd.begin; i < nd.end; ++i) {
            const std::size_t idx = order_[i];
            if (exclude && idx == *exclude) continue;
            best.offer(dist2(q, idx), idx);
        }
        return;
    }
    const double diff = q[static_cast<std::size_t>(nd.axis)] - nd.split;
    const int near = diff < 0.0 ? nd.left : nd.right;
    const int far = diff < 0.0 ? nd.right : nd.left;
    search(near, q, exclude, best);
    if (!best.can_prune(diff * diff)) search(far, q, exclude, best);
}

NeighborResult NeighborIndex::query(std::span<const double> q, std::size_t k,
                                    std::optional<std::size_t> exclude) const {
    if (q.size() != points_.cols())
        throw std::invalid_argument("NeighborIndex::query: dimension mismatch");
    const std::size_t effective =
        points_.rows() - ((exclude && *exclude < points_.rows()) ? 1 : 0);
    if (k == 0 || k > effective)
        throw std::invalid_argument("NeighborIndex::query: k out of range");

    Candidates best(k);
    if (strategy_ == IndexStrategy::brute) {
        for (std::size_t i = 0; i < points_.rows(); ++i) {
            if (exclude && i == *exclude) continue;
            best.offer(dist2(q, i), i);
        }
    } else {
        search(0, q, exclude, best);
    }
    return best.finish();
}

std::vector<NeighborResult> knn_batch(const NeighborIndex& index, const DataMatrix& queries,
                                      std::size_t k, bool exclude_self, int threads) {
    if (exclude_self && queries.rows() != index.size())
        throw std::invalid_argument("knn_batch: exclude_self requires query rows == train rows");
    std::vector<NeighborResult> results(queries.rows());
    parallel_for(queries.rows(), threads, [&](std::size_t i) {
        results[i] = index.query(queries.row(i), k,
                                 exclude_self ? std::optional<std::size_t>(i) : std::nullopt);
    });
    return results;
}

}  // namespace oddkit
