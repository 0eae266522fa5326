#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "frobwitt/errors.hpp"
#include "frobwitt/linalg.hpp"
#include "support/oracles.hpp"

using namespace frobwitt;
using frobwitt::testsupport::relem;
using frobwitt::testsupport::rinvertible;
using frobwitt::testsupport::rint;
using frobwitt::testsupport::rmat;
using frobwitt::testsupport::Rng;

namespace {

Vec rvec(Rng& rng, const FieldCtx& k, int n) {
    Vec v((size_t)n);
    for (auto& x : v) x = relem(rng, k);
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

TEST_CASE("echelon form has deterministic pivots and preserves rank") {
    const FieldCtx& k = FieldCtx::get(5, 1);
    Mat m(k, 2, 2);
    m.at(0, 0) = k.from_int(1);
    m.at(0, 1) = k.from_int(2);
    m.at(1, 0) = k.from_int(2);
    m.at(1, 1) = k.from_int(4);
    Echelon e = echelon_form(m);
    CHECK(e.rank == 1);
    REQUIRE(e.pivot_cols.size() == 1);
    CHECK(e.pivot_cols[0] == 0);
    CHECK(e.r.at(0, 0) == k.one());
    CHECK(e.r.at(0, 1) == k.from_int(2));
    CHECK(e.r.at(1, 0).is_zero());
    CHECK(e.r.at(1, 1).is_zero());

    std::vector<Vec> ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(ker[0][0] == k.from_int(3));
    CHECK(ker[0][1] == k.from_int(1));
}

TEST_CASE("linear solve returns a verifying particular solution and kernel") {
    Rng rng(42);
    for (auto [p, f] : {std::pair<std::int64_t, int>{3, 1}, {5, 1}, {3, 2}}) {
        const FieldCtx& k = FieldCtx::get(p, f);
        for (int it = 0; it < 25; ++it) {
            int rows = 1 + (int)rint(rng, 5);
            int cols = 1 + (int)rint(rng, 5);
            Mat a = rmat(rng, k, rows, cols);
            Vec x0 = rvec(rng, k, cols);
            Vec b = mat_apply(a, x0);
            LinearSolution sol = solve_linear_system(a, b);
            REQUIRE(sol.consistent);
            Vec check = mat_apply(a, sol.particular);
            for (int i = 0; i < rows; ++i) CHECK(check[(size_t)i] == b[(size_t)i]);
            for (const auto& kv : sol.kernel) CHECK(is_zero_vec(mat_apply(a, kv)));
            CHECK(sol.rank + (int)sol.kernel.size() == cols);
            CHECK(sol.rank == rank_of(a));
        }
    }
}

TEST_CASE("inconsistent systems are flagged, not solved") {
    const FieldCtx& k = FieldCtx::get(3, 1);
    Mat a(k, 2, 1);
    a.at(0, 0) = k.one();
    a.at(1, 0) = k.one();
    Vec b{k.one(), k.from_int(2)};
    LinearSolution sol = solve_linear_system(a, b);
    CHECK_FALSE(sol.consistent);
    CHECK(sol.particular.empty());
}

TEST_CASE("matrix inverse verifies and rejects singular input") {
    Rng rng(7);
    const FieldCtx& k = FieldCtx::get(5, 2);
    for (int it = 0; it < 15; ++it) {
        int n = 1 + (int)rint(rng, 5);
        Mat a = rinvertible(rng, k, n);
        CHECK(mat_mul(a, mat_inverse(a)).is_identity());
        CHECK(mat_mul(mat_inverse(a), a).is_identity());
    }
    Mat s(k, 2, 2);
    s.at(0, 0) = k.one();
    s.at(0, 1) = k.one();
    s.at(1, 0) = k.one();
    s.at(1, 1) = k.one();
    CHECK_THROWS_AS(mat_inverse(s), Error);
    CHECK_THROWS_AS(mat_inverse(Mat(k, 2, 3)), Error);
}

TEST_CASE("matrix power agrees with iterated product") {
    Rng rng(9);
    const FieldCtx& k = FieldCtx::get(3, 2);
    Mat a = rmat(rng, k, 4, 4);
    Mat acc = Mat::identity(k, 4);
    for (unsigned e = 0; e <= 7; ++e) {
        CHECK(mat_pow(a, e) == acc);
        acc = mat_mul(acc, a);
    }
}

TEST_CASE("entrywise frobenius is multiplicative on products") {
    Rng rng(11);
    const FieldCtx& k = FieldCtx::get(3, 2);
    Mat a = rmat(rng, k, 3, 3);
    Mat b = rmat(rng, k, 3, 3);
    CHECK(frobenius_entrywise(mat_mul(a, b), 1) ==
          mat_mul(frobenius_entrywise(a, 1), frobenius_entrywise(b, 1)));
    CHECK(frobenius_entrywise(a, k.f()) == a);
}

TEST_CASE("span intersection satisfies the dimension formula") {
    Rng rng(13);
    const FieldCtx& k = FieldCtx::get(3, 1);
    for (int it = 0; it < 30; ++it) {
        int n = 2 + (int)rint(rng, 4);
        std::vector<Vec> u, w;
        int nu = 1 + (int)rint(rng, n);
        int nw = 1 + (int)rint(rng, n);
        for (int i = 0; i < nu; ++i) u.push_back(rvec(rng, k, n));
        for (int i = 0; i < nw; ++i) w.push_back(rvec(rng, k, n));
        std::vector<Vec> inter = intersect_spans(k, u, w);
        for (const auto& v : inter) {
            CHECK(in_span(k, u, v));
            CHECK(in_span(k, w, v));
        }
        std::vector<Vec> all = u;
        all.insert(all.end(), w.begin(), w.end());
        int du = rank_of(Mat::from_columns(k, u));
        int dw = rank_of(Mat::from_columns(k, w));
        int dsum = rank_of(Mat::from_columns(k, all));
        CHECK((int)inter.size() == du + dw - dsum);
        CHECK(rank_of(Mat::from_columns(k, inter)) == (int)inter.size());
    }
}

TEST_CASE("quotient representatives extend the inner space to the full span") {
    Rng rng(17);
    const FieldCtx& k = FieldCtx::get(5, 1);
    for (int it = 0; it < 20; ++it) {
        int n = 2 + (int)rint(rng, 4);
        std::vector<Vec> outer, inner;
        for (int i = 0; i < n; ++i) outer.push_back(rvec(rng, k, n));
        for (int i = 0; i < 1 + (int)rint(rng, 2); ++i) inner.push_back(rvec(rng, k, n));
        std::vector<Vec> reps = quotient_reps(k, outer, inner);
        // each representative is one of the outer vectors, outside span(inner)
        for (const auto& r : reps) {
            bool found = false;
            for (const auto& o : outer) found = found || o == r;
            CHECK(found);
            CHECK_FALSE(in_span(k, inner, r));
        }
        std::vector<Vec> all = outer;
        all.insert(all.end(), inner.begin(), inner.end());
        std::vector<Vec> extended = inner;
        extended.insert(extended.end(), reps.begin(), reps.end());
        CHECK(rank_of(Mat::from_columns(k, extended)) ==
              rank_of(Mat::from_columns(k, all)));
        CHECK(rank_of(Mat::from_columns(k, extended)) ==
              rank_of(Mat::from_columns(k, inner)) + (int)reps.size());
    }
}

TEST_CASE("column space basis consists of original columns at pivot positions") {
    Rng rng(19);
    const FieldCtx& k = FieldCtx::get(3, 1);
    Mat a = rmat(rng, k, 4, 6);
    std::vector<Vec> cs = column_space_basis(a);
    CHECK((int)cs.size() == rank_of(a));
    for (const auto& v : cs) {
        bool found = false;
        for (int j = 0; j < a.cols; ++j) found = found || a.column(j) == v;
        CHECK(found);
    }
}

TEST_CASE("transpose and row/column accessors agree") {
    Rng rng(23);
    const FieldCtx& k = FieldCtx::get(3, 2);
    Mat a = rmat(rng, k, 3, 5);
    Mat at = transpose(a);
    CHECK(at.rows == 5);
    CHECK(at.cols == 3);
    for (int i = 0; i < 3; ++i) CHECK(a.row(i) == at.column(i));
    CHECK(transpose(at) == a);
    CHECK(rank_of(a) == rank_of(at));
}

TEST_CASE("shape and field mismatches are rejected") {
    const FieldCtx& k3 = FieldCtx::get(3, 1);
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    CHECK_THROWS_AS(mat_mul(Mat(k3, 2, 3), Mat(k3, 2, 3)), Error);
    CHECK_THROWS_AS(mat_mul(Mat(k3, 2, 2), Mat(k5, 2, 2)), ContextMismatchError);
    CHECK_THROWS_AS(mat_add(Mat(k3, 2, 2), Mat(k3, 2, 3)), Error);
    CHECK_THROWS_AS(mat_apply(Mat(k3, 2, 2), Vec{k3.one()}), Error);
    CHECK_THROWS_AS(mat_pow(Mat(k3, 2, 3), 2), Error);
}
