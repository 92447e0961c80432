#ifndef DFSING_LINALG_HPP
#define DFSING_LINALG_HPP

#include <vector>

#include "dfsing/ratfunc.hpp"

namespace dfsing {

inline bool field_is_zero(const Rational& a) { return a == 0; }
inline bool field_is_zero(const RatFunc& a) { return a.is_zero(); }

// Row-reduce in place to reduced row echelon form; returns pivot columns.
// First nonzero candidate is chosen as pivot, so results are deterministic.
template <class F>
std::vector<int> rref(std::vector<std::vector<F>>& m) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && field_is_zero(m[p][c])) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        F inv = m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] = m[r][j] / inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || field_is_zero(m[i][c])) continue;
            F f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
        }
        pivots.push_back((int)c);
        ++r;
    }
    return pivots;
}

template <class F>
int matrix_rank(std::vector<std::vector<F>> m) {
    return (int)rref(m).size();
}

// Basis of the right kernel from the RREF: one vector per free column, with a
// 1 in the free position.  Ordered by free column index.
template <class F>
std::vector<std::vector<F>> kernel_basis(std::vector<std::vector<F>> m, size_t cols, const F& zero,
                                         const F& one) {
    std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        std::vector<F> v(cols, zero);
        v[free_c] = one;
        for (size_t i = 0; i < pivots.size(); ++i) {
            if ((size_t)pivots[i] < free_c && !field_is_zero(m[i][free_c]))
                v[pivots[i]] = zero - m[i][free_c];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
F determinant(std::vector<std::vector<F>> m, const F& zero, const F& one) {
    size_t n = m.size();
    F det = one;
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        while (p < n && field_is_zero(m[p][c])) ++p;
        if (p == n) return zero;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = zero - det;
        }
        det = det * m[c][c];
        F inv = m[c][c];
        for (size_t i = c + 1; i < n; ++i) {
            if (field_is_zero(m[i][c])) continue;
            F f = m[i][c] / inv;
            for (size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
        }
    }
    return det;
}

} // namespace dfsing

#endif
