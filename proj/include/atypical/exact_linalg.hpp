#pragma once

#include <optional>
#include <vector>

#include "atypical/rational.hpp"

namespace atypical {

using RatVec = std::vector<Rational>;
using RatMatrix = std::vector<RatVec>;  // row major, rectangular

// Reduced row echelon form in place; returns the pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = r;
        while (sel < rows && m[sel][c] == 0) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        const Rational inv = m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] /= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            const Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rat_rank(RatMatrix m) { return rref(m).size(); }

// One solution of A x = b (free variables set to zero), or nullopt.
inline std::optional<RatVec> rat_solve(const RatMatrix& a, const RatVec& b) {
    if (a.empty()) return RatVec{};
    const std::size_t rows = a.size(), cols = a[0].size();
    RatMatrix aug(rows, RatVec(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) aug[i][j] = a[i][j];
        aug[i][cols] = b[i];
    }
    auto pivots = rref(aug);
    // Inconsistent iff a pivot lands in the augmented column.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    RatVec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
    return x;
}

// Basis of {x : A x = 0}.
inline std::vector<RatVec> rat_nullspace(RatMatrix a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    auto pivots = rref(a);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Affine dimension of a point set (points as rows).
inline std::size_t affine_dim(const RatMatrix& points) {
    if (points.size() <= 1) return 0;
    RatMatrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        dirs.push_back(std::move(d));
    }
    return rat_rank(std::move(dirs));
}

// Does the affine span of the points contain the origin?  Equivalent to
// p0 lying in the linear span of the difference vectors.
inline bool origin_in_affine_span(const RatMatrix& points) {
    if (points.empty()) return false;
    RatMatrix dirs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVec d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        dirs.push_back(std::move(d));
    }
    const std::size_t base = dirs.empty() ? 0 : rat_rank(dirs);
    dirs.push_back(points[0]);
    return rat_rank(std::move(dirs)) == base;
}

}  // namespace atypical
