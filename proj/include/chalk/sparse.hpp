#pragma once
// Sparse feature vector: sorted (column, weight) pairs, zero weights never stored.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

namespace chalk {

struct SparseVector {
    std::vector<std::pair<std::uint32_t, double>> pairs;  // strictly increasing columns

    double get(std::uint32_t col) const {
        auto it = std::lower_bound(pairs.begin(), pairs.end(), col,
                                   [](const auto& p, std::uint32_t c) { return p.first < c; });
        return (it != pairs.end() && it->first == col) ? it->second : 0.0;
    }

    void push(std::uint32_t col, double w) {
        if (w != 0.0) pairs.emplace_back(col, w);
    }

    double dot(const SparseVector& other) const {
        double s = 0.0;
        std::size_t i = 0, j = 0;
        while (i < pairs.size() && j < other.pairs.size()) {
            if (pairs[i].first < other.pairs[j].first) ++i;
            else if (pairs[i].first > other.pairs[j].first) ++j;
            else s += pairs[i++].second * other.pairs[j++].second;
        }
        return s;
    }

    double norm() const {
        double s = 0.0;
        for (const auto& [c, w] : pairs) s += w * w;
        return std::sqrt(s);
    }

    void l2_normalize() {
        double n = norm();
        if (n == 0.0) return;
        for (auto& [c, w] : pairs) w /= n;
    }

    bool empty() const { return pairs.empty(); }
    std::size_t nnz() const { return pairs.size(); }
};

// x_out = a + u * (b - a), computed over the union of nonzero columns.
inline SparseVector sparse_lerp(const SparseVector& a, const SparseVector& b, double u) {
    SparseVector out;
    std::size_t i = 0, j = 0;
    while (i < a.pairs.size() || j < b.pairs.size()) {
        std::uint32_t ca = i < a.pairs.size() ? a.pairs[i].first : UINT32_MAX;
        std::uint32_t cb = j < b.pairs.size() ? b.pairs[j].first : UINT32_MAX;
        std::uint32_t c = ca < cb ? ca : cb;
        double va = (ca == c) ? a.pairs[i++].second : 0.0;
        double vb = (cb == c) ? b.pairs[j++].second : 0.0;
        out.push(c, va + u * (vb - va));
    }
    return out;
}

inline double sparse_sq_dist(const SparseVector& a, const SparseVector& b) {
    double s = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.pairs.size() || j < b.pairs.size()) {
        std::uint32_t ca = i < a.pairs.size() ? a.pairs[i].first : UINT32_MAX;
        std::uint32_t cb = j < b.pairs.size() ? b.pairs[j].first : UINT32_MAX;
        std::uint32_t c = ca < cb ? ca : cb;
        double va = (ca == c) ? a.pairs[i++].second : 0.0;
        double vb = (cb == c) ? b.pairs[j++].second : 0.0;
        double d = va - vb;
        s += d * d;
    }
    return s;
}

}  // namespace chalk
