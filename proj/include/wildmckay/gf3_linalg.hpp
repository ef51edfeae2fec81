#pragma once

// Dense linear algebra over GF(3): row reduction, rank, right-kernel bases.
// Used for linear-relation discovery and fixed-subspace dimension counts.

#include <cstdint>
#include <vector>

#include "errors.hpp"
#include "gf3.hpp"

namespace wmk {

struct MatGF3 {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<std::vector<uint8_t>> a;  // rows × cols, entries in {0,1,2}

    MatGF3() = default;
    MatGF3(size_t r, size_t c) : rows(r), cols(c), a(r, std::vector<uint8_t>(c, 0)) {}
    uint8_t& at(size_t i, size_t j) { return a[i][j]; }
    uint8_t at(size_t i, size_t j) const { return a[i][j]; }
};

// Reduced row echelon form in place; returns pivot column indices.
inline std::vector<size_t> rref_inplace(MatGF3& m) {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < m.cols && row < m.rows; ++col) {
        size_t sel = row;
        while (sel < m.rows && m.a[sel][col] == 0) ++sel;
        if (sel == m.rows) continue;
        std::swap(m.a[sel], m.a[row]);
        uint8_t inv = g3_inv(m.a[row][col]);
        if (inv != 1)
            for (size_t j = col; j < m.cols; ++j) m.a[row][j] = g3_mul(m.a[row][j], inv);
        for (size_t i = 0; i < m.rows; ++i) {
            if (i == row || m.a[i][col] == 0) continue;
            uint8_t f = m.a[i][col];
            for (size_t j = col; j < m.cols; ++j)
                m.a[i][j] = g3_sub(m.a[i][j], g3_mul(f, m.a[row][j]));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline size_t mat_rank(MatGF3 m) { return rref_inplace(m).size(); }

// Basis of { x : M x = 0 }, one vector per free column, deterministic order.
inline std::vector<std::vector<uint8_t>> nullspace(MatGF3 m) {
    std::vector<size_t> pivots = rref_inplace(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<uint8_t>> basis;
    for (size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<uint8_t> v(m.cols, 0);
        v[free_col] = 1;
        for (size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = g3_neg(m.a[k][free_col]);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wmk
