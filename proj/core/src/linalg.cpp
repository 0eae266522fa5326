#include "frobwitt/linalg.hpp"

#include <cassert>

namespace frobwitt {

Mat::Mat(const FieldCtx& k, int r, int c) : field(&k), rows(r), cols(c) {
    a.assign((size_t)r * c, k.zero());
}

Mat Mat::identity(const FieldCtx& k, int n) {
    Mat m(k, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = k.one();
    return m;
}

Mat Mat::from_columns(const FieldCtx& k, const std::vector<Vec>& cols) {
    int nc = (int)cols.size();
    int nr = nc ? (int)cols[0].size() : 0;
    Mat m(k, nr, nc);
    for (int j = 0; j < nc; ++j) {
        assert((int)cols[j].size() == nr);
        for (int i = 0; i < nr; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::from_rows(const FieldCtx& k, const std::vector<Vec>& rows) {
    int nr = (int)rows.size();
    int nc = nr ? (int)rows[0].size() : 0;
    Mat m(k, nr, nc);
    for (int i = 0; i < nr; ++i) {
        assert((int)rows[i].size() == nc);
        for (int j = 0; j < nc; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Vec Mat::column(int j) const {
    Vec v;
    v.reserve(rows);
    for (int i = 0; i < rows; ++i) v.push_back(at(i, j));
    return v;
}

Vec Mat::row(int i) const {
    Vec v;
    v.reserve(cols);
    for (int j = 0; j < cols; ++j) v.push_back(at(i, j));
    return v;
}

bool Mat::is_identity() const {
    if (rows != cols) return false;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (i == j) {
                if (at(i, j) != field->one()) return false;
            } else if (!at(i, j).is_zero()) {
                return false;
            }
        }
    return true;
}

bool Mat::is_zero() const {
    for (const auto& x : a)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::operator==(const Mat& o) const {
    return field == o.field && rows == o.rows && cols == o.cols && a == o.a;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    if (x.field != y.field) throw ContextMismatchError("matrix product across fields");
    if (x.cols != y.rows) throw Error("matrix product shape mismatch");
    const FieldCtx& k = *x.field;
    Mat r(k, x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int l = 0; l < x.cols; ++l) {
            const FieldElem& xl = x.at(i, l);
            if (xl.is_zero()) continue;
            for (int j = 0; j < y.cols; ++j) {
                if (y.at(l, j).is_zero()) continue;
                r.at(i, j) = r.at(i, j) + xl * y.at(l, j);
            }
        }
    return r;
}

Mat mat_add(const Mat& x, const Mat& y) {
    if (x.field != y.field || x.rows != y.rows || x.cols != y.cols)
        throw Error("matrix sum shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] + y.a[i];
    return r;
}

Mat mat_sub(const Mat& x, const Mat& y) {
    if (x.field != y.field || x.rows != y.rows || x.cols != y.cols)
        throw Error("matrix difference shape mismatch");
    Mat r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = r.a[i] - y.a[i];
    return r;
}

Mat transpose(const Mat& m) {
    Mat r(*m.field, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
    return r;
}

Vec mat_apply(const Mat& m, const Vec& v) {
    if ((int)v.size() != m.cols) throw Error("matrix apply shape mismatch");
    Vec r((size_t)m.rows, m.field->zero());
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) {
            if (m.at(i, j).is_zero() || v[j].is_zero()) continue;
            r[i] = r[i] + m.at(i, j) * v[j];
        }
    return r;
}

Mat mat_pow(const Mat& m, unsigned long long e) {
    if (m.rows != m.cols) throw Error("matrix power of non-square matrix");
    Mat r = Mat::identity(*m.field, m.rows);
    Mat b = m;
    while (e) {
        if (e & 1) r = mat_mul(r, b);
        b = mat_mul(b, b);
        e >>= 1;
    }
    return r;
}

Mat frobenius_entrywise(const Mat& m, int i) {
    Mat r = m;
    for (auto& x : r.a) x = m.field->frobenius(x, i);
    return r;
}

Echelon echelon_form(Mat m) {
    Echelon e;
    const FieldCtx& k = *m.field;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int sel = -1;
        for (int i = rank; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) continue;
        if (sel != rank)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(rank, j), m.at(sel, j));
        FieldElem piv_inv = k.inv(m.at(rank, col));
        for (int j = col; j < m.cols; ++j) m.at(rank, j) = m.at(rank, j) * piv_inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == rank || m.at(i, col).is_zero()) continue;
            FieldElem fac = m.at(i, col);
            for (int j = col; j < m.cols; ++j)
                m.at(i, j) = m.at(i, j) - fac * m.at(rank, j);
        }
        e.pivot_cols.push_back(col);
        ++rank;
    }
    e.rank = rank;
    e.r = std::move(m);
    return e;
}

LinearSolution solve_linear_system(const Mat& m, const Vec& b) {
    if ((int)b.size() != m.rows) throw Error("right-hand side length mismatch");
    const FieldCtx& k = *m.field;
    // eliminate on the augmented matrix
    Mat aug(k, m.rows, m.cols + 1);
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols) = b[i];
    }
    Echelon e = echelon_form(std::move(aug));
    LinearSolution sol;
    sol.consistent = true;
    for (int c : e.pivot_cols)
        if (c == m.cols) sol.consistent = false;  // pivot in the b column
    std::vector<int> pivot_of_col(m.cols, -1);
    int rank = 0;
    for (int r = 0; r < (int)e.pivot_cols.size(); ++r) {
        if (e.pivot_cols[r] < m.cols) {
            pivot_of_col[e.pivot_cols[r]] = r;
            ++rank;
        }
    }
    sol.rank = rank;
    if (sol.consistent) {
        sol.particular.assign(m.cols, k.zero());
        for (int col = 0; col < m.cols; ++col) {
            int r = pivot_of_col[col];
            if (r >= 0) sol.particular[col] = e.r.at(r, m.cols);
        }
    }
    for (int col = 0; col < m.cols; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vec v((size_t)m.cols, k.zero());
        v[col] = k.one();
        for (int pc = 0; pc < m.cols; ++pc) {
            int r = pivot_of_col[pc];
            if (r >= 0) v[pc] = k.neg(e.r.at(r, col));
        }
        sol.kernel.push_back(std::move(v));
    }
    return sol;
}

int rank_of(const Mat& m) { return echelon_form(m).rank; }

std::vector<Vec> kernel_basis(const Mat& m) {
    Vec zero((size_t)m.rows, m.field->zero());
    return solve_linear_system(m, zero).kernel;
}

std::vector<Vec> column_space_basis(const Mat& m) {
    Echelon e = echelon_form(m);
    std::vector<Vec> basis;
    for (int c : e.pivot_cols) basis.push_back(m.column(c));
    return basis;
}

bool in_span(const FieldCtx& k, const std::vector<Vec>& basis, const Vec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Mat m = Mat::from_columns(k, basis);
    return solve_linear_system(m, v).consistent;
}

std::vector<Vec> intersect_spans(const FieldCtx& k, const std::vector<Vec>& a,
                                 const std::vector<Vec>& b) {
    // Reduce both families to bases first: with independent columns the
    // projection (x, y) -> A x is injective on ker [A | -B], so the result is
    // itself a basis rather than a spanning set.
    std::vector<Vec> ab = quotient_reps(k, a, {});
    std::vector<Vec> bb = quotient_reps(k, b, {});
    if (ab.empty() || bb.empty()) return {};
    int n = (int)ab[0].size();
    Mat m(k, n, (int)(ab.size() + bb.size()));
    for (int j = 0; j < (int)ab.size(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, j) = ab[j][i];
    for (int j = 0; j < (int)bb.size(); ++j)
        for (int i = 0; i < n; ++i) m.at(i, (int)ab.size() + j) = k.neg(bb[j][i]);
    std::vector<Vec> inter;
    for (const Vec& kv : kernel_basis(m)) {
        Vec v((size_t)n, k.zero());
        for (int j = 0; j < (int)ab.size(); ++j)
            for (int i = 0; i < n; ++i) v[i] = v[i] + kv[j] * ab[j][i];
        inter.push_back(std::move(v));
    }
    return inter;
}

std::vector<Vec> quotient_reps(const FieldCtx& k, const std::vector<Vec>& outer,
                               const std::vector<Vec>& inner) {
    std::vector<Vec> span = inner;
    std::vector<Vec> reps;
    for (const Vec& v : outer) {
        if (in_span(k, span, v)) continue;
        span.push_back(v);
        reps.push_back(v);
    }
    return reps;
}

Mat mat_inverse(const Mat& m) {
    if (m.rows != m.cols) throw Error("inverse of non-square matrix");
    const FieldCtx& k = *m.field;
    int n = m.rows;
    Mat aug(k, n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = k.one();
    }
    Echelon e = echelon_form(std::move(aug));
    if (e.rank < n || e.pivot_cols[n - 1] >= n) throw Error("matrix is singular");
    Mat r(k, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(i, j) = e.r.at(i, n + j);
    return r;
}

}  // namespace frobwitt
