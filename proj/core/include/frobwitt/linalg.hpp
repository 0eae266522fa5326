#pragma once

#include <vector>

#include "frobwitt/field.hpp"

namespace frobwitt {

using Vec = std::vector<FieldElem>;

// Dense row-major matrix over a single field context.
struct Mat {
    const FieldCtx* field = nullptr;
    int rows = 0, cols = 0;
    std::vector<FieldElem> a;

    Mat() = default;
    Mat(const FieldCtx& k, int r, int c);

    FieldElem& at(int i, int j) { return a[(size_t)i * cols + j]; }
    const FieldElem& at(int i, int j) const { return a[(size_t)i * cols + j]; }

    static Mat identity(const FieldCtx& k, int n);
    static Mat from_columns(const FieldCtx& k, const std::vector<Vec>& cols);
    static Mat from_rows(const FieldCtx& k, const std::vector<Vec>& rows);

    Vec column(int j) const;
    Vec row(int i) const;
    bool is_identity() const;
    bool is_zero() const;
    bool operator==(const Mat& o) const;
};

Mat mat_mul(const Mat& x, const Mat& y);
Mat mat_add(const Mat& x, const Mat& y);
Mat mat_sub(const Mat& x, const Mat& y);
Mat transpose(const Mat& m);
Vec mat_apply(const Mat& m, const Vec& v);
Mat mat_pow(const Mat& m, unsigned long long e);

// Entry-wise map x -> x^(p^i) (used for twisted products).
Mat frobenius_entrywise(const Mat& m, int i);

// Row echelon form with deterministic pivoting: for each column, the first
// row (top-down) with a nonzero entry is chosen.
struct Echelon {
    Mat r;
    std::vector<int> pivot_cols;
    int rank = 0;
};
Echelon echelon_form(Mat m);

// Solve m*x = b. 'consistent' is a flag, not a failure. The kernel basis is
// deterministic: one vector per free column, that free coordinate set to 1.
struct LinearSolution {
    int rank = 0;
    bool consistent = false;
    Vec particular;            // empty when inconsistent
    std::vector<Vec> kernel;
};
LinearSolution solve_linear_system(const Mat& m, const Vec& b);

int rank_of(const Mat& m);
std::vector<Vec> kernel_basis(const Mat& m);
// Basis of the column space: the original columns at pivot positions.
std::vector<Vec> column_space_basis(const Mat& m);

bool in_span(const FieldCtx& k, const std::vector<Vec>& basis, const Vec& v);
// Basis of span(a) cap span(b), via the kernel of [A | -B]. The inputs may be
// arbitrary spanning families; they are reduced to bases internally.
std::vector<Vec> intersect_spans(const FieldCtx& k, const std::vector<Vec>& a,
                                 const std::vector<Vec>& b);
// Greedily extend 'inner' to a basis of span(outer ∪ inner) using vectors from
// 'outer'; returns the chosen coset representatives (used for quotient bases).
std::vector<Vec> quotient_reps(const FieldCtx& k, const std::vector<Vec>& outer,
                               const std::vector<Vec>& inner);

Mat mat_inverse(const Mat& m);  // throws on singular input

}  // namespace frobwitt
