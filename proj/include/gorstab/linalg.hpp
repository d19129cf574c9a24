#pragma once

#include <vector>

#include "gorstab/errors.hpp"
#include "gorstab/rational.hpp"

namespace gorstab::detail {

using Vec = std::vector<Rational>;
using Matrix = std::vector<Vec>;

inline Rational dot(const Vec& a, const Vec& b) {
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
    return sum;
}

// Rank by fraction-preserving Gaussian elimination (rows are copied).
inline int rank_of(Matrix rows) {
    const int m = static_cast<int>(rows.size());
    if (m == 0) return 0;
    const int d = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = 0; col < d && rank < m; ++col) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < m; ++r) {
            if (rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[rank][col];
            for (int c = col; c < d; ++c) rows[r][c] -= factor * rows[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Exact inverse via Gauss-Jordan; throws InvalidParameter on singularity.
inline Matrix invert(Matrix a) {
    const int n = static_cast<int>(a.size());
    Matrix inv(n, Vec(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) throw InvalidParameter("singular matrix");
        std::swap(a[col], a[pivot]);
        std::swap(inv[col], inv[pivot]);
        const Rational scale = a[col][col];
        for (int c = 0; c < n; ++c) {
            a[col][c] /= scale;
            inv[col][c] /= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            const Rational factor = a[r][col];
            for (int c = 0; c < n; ++c) {
                a[r][c] -= factor * a[col][c];
                inv[r][c] -= factor * inv[col][c];
            }
        }
    }
    return inv;
}

}  // namespace gorstab::detail
