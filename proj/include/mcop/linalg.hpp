#pragma once

// Fraction-free exact linear algebra over arbitrary-precision integers.
//
// Bareiss elimination keeps every intermediate entry an exact integer (each
// division in the update is exact), so rank and determinant computations over
// 0/±1 input matrices whose minors exceed machine range stay correct.  For
// rational input the caller clears denominators first (rank is unchanged by
// scaling rows or columns).

#include <cassert>
#include <cstddef>
#include <vector>

#include "mcop/numeric.hpp"

namespace mcop {

using IntMatrix = std::vector<std::vector<Int>>;

// Rank by fraction-free Gaussian elimination with full pivoting by first
// non-zero in column order.  The input is taken by value and destroyed.
inline int bareiss_rank(IntMatrix m) {
    const size_t rows = m.size();
    const size_t cols = rows ? m[0].size() : 0;
    Int prev = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m[piv][col] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[rank]);
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c)
                m[r][c] = exact_div(m[rank][col] * m[r][c] - m[r][col] * m[rank][c], prev);
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return static_cast<int>(rank);
}

// Determinant of a square matrix by the same elimination; sign tracked
// through row swaps.  Input destroyed.
inline Int bareiss_det(IntMatrix m) {
    const size_t n = m.size();
    for (const auto& row : m) {
        assert(row.size() == n);
        (void)row;
    }
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t r = k + 1; r < n; ++r) {
            for (size_t c = k + 1; c < n; ++c)
                m[r][c] = exact_div(m[k][k] * m[r][c] - m[r][k] * m[k][c], prev);
            m[r][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

}  // namespace mcop
