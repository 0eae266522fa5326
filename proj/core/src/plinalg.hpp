#pragma once

// Internal dense linear algebra over GF(p) with raw int64 entries. The generic
// Mat-of-FieldElem layer is convenient but allocation-heavy; restriction of
// scalars (semilinear fixed spaces, tower embeddings) produces matrices of a
// few hundred rows over the prime field, where this is the right tool.

#include <cstdint>
#include <vector>

namespace frobwitt::detail {

using PRow = std::vector<std::int64_t>;
using PMat = std::vector<PRow>;

inline std::int64_t p_inv(std::int64_t a, std::int64_t p) {
    // extended Euclid; a nonzero mod p
    std::int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        std::int64_t qq = r / nr;
        std::int64_t tmp = t - qq * nt; t = nt; nt = tmp;
        tmp = r - qq * nr; r = nr; nr = tmp;
    }
    if (t < 0) t += p;
    return t;
}

// In-place row echelon form with deterministic pivoting (first row with a
// nonzero entry, scanning top-down). Returns pivot column list.
inline std::vector<int> p_echelon(PMat& m, std::int64_t p) {
    std::vector<int> pivots;
    if (m.empty()) return pivots;
    int rows = (int)m.size(), cols = (int)m[0].size();
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int sel = -1;
        for (int i = rank; i < rows; ++i)
            if (m[i][col] % p != 0) { sel = i; break; }
        if (sel < 0) continue;
        std::swap(m[rank], m[sel]);
        std::int64_t iv = p_inv(((m[rank][col] % p) + p) % p, p);
        for (int j = col; j < cols; ++j) m[rank][j] = (m[rank][j] % p) * iv % p;
        for (int i = 0; i < rows; ++i) {
            if (i == rank) continue;
            std::int64_t fac = ((m[i][col] % p) + p) % p;
            if (fac == 0) continue;
            for (int j = col; j < cols; ++j) {
                m[i][j] = ((m[i][j] - fac * m[rank][j]) % p + p) % p;
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    // normalize residues
    for (auto& row : m)
        for (auto& v : row) v = ((v % p) + p) % p;
    return pivots;
}

// Kernel basis of m (as column vectors), deterministic: one basis vector per
// free column, with that free coordinate set to 1.
inline PMat p_kernel(PMat m, std::int64_t p) {
    if (m.empty()) return {};
    int cols = (int)m[0].size();
    std::vector<int> pivots = p_echelon(m, p);
    std::vector<int> pivot_of_col(cols, -1);
    for (int r = 0; r < (int)pivots.size(); ++r) pivot_of_col[pivots[r]] = r;
    PMat basis;
    for (int col = 0; col < cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        PRow v(cols, 0);
        v[col] = 1;
        for (int r = 0; r < (int)pivots.size(); ++r) {
            // row r: x_{pivots[r]} + sum over free columns = 0
            v[pivots[r]] = (p - m[r][col] % p) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

inline int p_rank(PMat m, std::int64_t p) { return (int)p_echelon(m, p).size(); }

}  // namespace frobwitt::detail
