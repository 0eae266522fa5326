#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "frobwitt/errors.hpp"
#include "frobwitt/poly.hpp"
#include "frobwitt/variety.hpp"
#include "support/oracles.hpp"

using namespace frobwitt;
using frobwitt::testsupport::cone_count;
using frobwitt::testsupport::random_smooth_plane_curve;
using frobwitt::testsupport::Rng;

namespace {

// Independent enumeration of canonical representatives of P^n(GF(q)):
// scale by the inverse of the first nonzero coordinate.
std::vector<Vec> all_projective_points(const FieldCtx& k, int nvars) {
    std::vector<Vec> out;
    std::set<std::vector<FieldElem>> seen;
    Vec v((size_t)nvars, k.zero());
    for (;;) {
        bool nonzero = false;
        for (const auto& x : v) nonzero = nonzero || !x.is_zero();
        if (nonzero) {
            Vec canon = v;
            FieldElem lead;
            for (const auto& x : canon)
                if (!x.is_zero()) {
                    lead = x;
                    break;
                }
            FieldElem inv = k.inv(lead);
            for (auto& x : canon) x = inv * x;
            if (seen.insert(canon).second) out.push_back(canon);
        }
        int i = nvars - 1;
        while (i >= 0 && !k.next_element(v[(size_t)i])) {
            v[(size_t)i] = k.zero();
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

Vec canonicalize(const FieldCtx& k, Vec v) {
    FieldElem lead;
    for (const auto& x : v)
        if (!x.is_zero()) {
            lead = x;
            break;
        }
    FieldElem inv = k.inv(lead);
    for (auto& x : v) x = inv * x;
    return v;
}

}  // namespace

TEST_CASE("projective space sizes") {
    CHECK(projective_space_size(3, 2) == 13);
    CHECK(projective_space_size(27, 2) == 757);
    CHECK(projective_space_size(5, 4) == 781);
    CHECK(projective_space_size(2, 1) == 3);
    CHECK(projective_space_size(0, 2) == ~0ULL);           // oversized field
    CHECK(projective_space_size(1ULL << 40, 2) == ~0ULL);  // saturates
}

TEST_CASE("hypersurface construction validates its input") {
    const FieldCtx& k = FieldCtx::get(3, 1);
    CHECK_THROWS_AS(Hypersurface::make(MultiPoly::zero(k, 3)), InputError);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly(k, "X0^2 + X1", 2)), InputError);
    CHECK_THROWS_AS(Hypersurface::make(parse_poly(k, "X0^2", 1)), InputError);
    CHECK_THROWS_AS(Hypersurface::make(MultiPoly::constant(k, 3, k.one())), DegreeError);
    Hypersurface x = Hypersurface::make(build_fp(3));
    CHECK(x.N == 2);
    CHECK(x.d == 3);
}

TEST_CASE("point counts for the degree-3 cyclic hypersurface") {
    Hypersurface x = Hypersurface::make(build_fp(3));
    CHECK(count_points(x, 1).count == 6);
    CHECK(count_points(x, 2).count == 12);
    CHECK(count_points(x, 3).count == 18);
    CHECK(count_points(x, 1).e == 1);
}

TEST_CASE("point counts agree with the affine-cone oracle") {
    Hypersurface x3 = Hypersurface::make(build_fp(3));
    for (int e = 1; e <= 2; ++e) CHECK(count_points(x3, e).count == cone_count(x3, e));

    Rng rng(404);
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    Hypersurface c = random_smooth_plane_curve(rng, k5, 3, 1);
    for (int e = 1; e <= 2; ++e) CHECK(count_points(c, e).count == cone_count(c, e));

    const FieldCtx& k3 = FieldCtx::get(3, 1);
    Hypersurface q = random_smooth_plane_curve(rng, k3, 4, 1);
    for (int e = 1; e <= 2; ++e) CHECK(count_points(q, e).count == cone_count(q, e));

    // counting does not require smoothness
    Hypersurface cube = Hypersurface::make(parse_poly(k3, "X0^3", 3));
    CHECK(count_points(cube, 1).count == cone_count(cube, 1));
    CHECK(count_points(cube, 1).count == 4);  // the line X0 = 0 in P^2(GF(3))
}

TEST_CASE("a smooth conic matches the projective line") {
    const FieldCtx& k = FieldCtx::get(3, 1);
    Hypersurface x = Hypersurface::make(parse_poly(k, "X0*X1 - X2^2", 3));
    CHECK(count_points(x, 1).count == 4);
    CHECK(count_points(x, 2).count == 10);
    CHECK(count_points(x, 3).count == 28);
}

TEST_CASE("point counts are invariant under coordinate rotation") {
    Rng rng(11);
    const FieldCtx& k = FieldCtx::get(3, 1);
    Hypersurface x = random_smooth_plane_curve(rng, k, 3, 1);
    Hypersurface y = Hypersurface::make(rotate_vars(x.f, 1));
    for (int e = 1; e <= 2; ++e) CHECK(count_points(x, e).count == count_points(y, e).count);
}

TEST_CASE("the enumeration budget is enforced with the required size") {
    Hypersurface x = Hypersurface::make(build_fp(3));
    CHECK_THROWS_AS(count_points(x, 5, 100), BudgetExceededError);
    try {
        count_points(x, 5, 100);
    } catch (const BudgetExceededError& e) {
        CHECK(e.required > 100);
    }
    CHECK_THROWS_AS(count_points(x, 0), InputError);
}

TEST_CASE("smoothness probe finds no witness on smooth examples") {
    Hypersurface x = Hypersurface::make(build_fp(3));
    SmoothnessReport r = smoothness_probe(x, 3);
    CHECK(r.e_max == 3);
    CHECK_FALSE(r.witness_found);
    CHECK(r.witness_e == 0);

    const FieldCtx& k = FieldCtx::get(3, 1);
    Hypersurface q = Hypersurface::make(parse_poly(k, "X0^2 + X1*X2", 3));
    CHECK_FALSE(smoothness_probe(q, 3).witness_found);
}

TEST_CASE("smoothness probe reports a verifying witness") {
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    // nodal cubic: singular exactly at (0 : 0 : 1)
    Hypersurface nodal =
        Hypersurface::make(parse_poly(k5, "X1^2*X2 - X0^3 - X0^2*X2", 3));
    SmoothnessReport r = smoothness_probe(nodal, 2);
    REQUIRE(r.witness_found);
    CHECK(r.witness_e == 1);
    REQUIRE(r.witness.size() == 3);
    CHECK(r.witness[0].is_zero());
    CHECK(r.witness[1].is_zero());
    CHECK(r.witness[2] == k5.one());

    // the witness satisfies the defining equations, by direct evaluation
    const FieldCtx& kw = *r.witness[0].field;
    TowerEmbedding emb = TowerEmbedding::make(k5, kw);
    const TowerEmbedding* pe = (&kw == &k5) ? nullptr : &emb;
    CHECK(evaluate(nodal.f, r.witness, pe).is_zero());
    for (int i = 0; i < 3; ++i)
        CHECK(evaluate(partial_derivative(nodal.f, i), r.witness, pe).is_zero());

    // in characteristic 3, X0^3 is singular along a whole line
    const FieldCtx& k3 = FieldCtx::get(3, 1);
    Hypersurface cube = Hypersurface::make(parse_poly(k3, "X0^3", 3));
    SmoothnessReport rc = smoothness_probe(cube, 1);
    REQUIRE(rc.witness_found);
    CHECK(rc.witness[0].is_zero());

    CHECK_THROWS_AS(smoothness_probe(cube, 0), InputError);
}

TEST_CASE("cyclic action requires an invariant polynomial") {
    const FieldCtx& k = FieldCtx::get(3, 1);
    Hypersurface x = Hypersurface::make(build_fp(3));
    CyclicAction act = CyclicAction::make(x);
    CHECK(act.order == 3);
    Hypersurface bad = Hypersurface::make(parse_poly(k, "X0^2 + X1*X2", 3));
    CHECK_THROWS_AS(CyclicAction::make(bad), NotInvariantError);
    CHECK_THROWS_AS(act.apply(Vec{k.one()}), InputError);
}

TEST_CASE("sigma-fixed points match a brute-force enumeration") {
    Hypersurface x = Hypersurface::make(build_fp(3));
    CyclicAction act = CyclicAction::make(x);
    FixedPointReport rep = sigma_fixed_points(x, act, 2);

    for (int e = 1; e <= 2; ++e) {
        const FieldCtx& ke = FieldCtx::get(3, e);
        // brute force: all canonical representatives fixed by the rotation
        std::vector<Vec> fixed;
        for (const Vec& pt : all_projective_points(ke, 3)) {
            Vec rot{pt[1], pt[2], pt[0]};
            if (canonicalize(ke, rot) == pt) fixed.push_back(pt);
        }
        if (e > 1) {
            // drop points already rational at level 1
            TowerEmbedding emb = TowerEmbedding::make(FieldCtx::get(3, 1), ke);
            std::set<FieldElem> image;
            FieldElem t = FieldCtx::get(3, 1).zero();
            do {
                image.insert(emb.embed(t));
            } while (FieldCtx::get(3, 1).next_element(t));
            std::vector<Vec> fresh;
            for (const Vec& pt : fixed) {
                bool all_low = true;
                for (const auto& c : pt) all_low = all_low && image.count(c) > 0;
                if (!all_low) fresh.push_back(pt);
            }
            fixed = fresh;
        }
        std::vector<Vec> reported;
        for (const auto& fp : rep.ambient)
            if (fp.e == e) reported.push_back(fp.point);
        REQUIRE(reported.size() == fixed.size());
        for (size_t i = 0; i < fixed.size(); ++i) CHECK(reported[i] == fixed[i]);
    }

    // for this surface the one fixed point (1:1:1) misses X at every level
    REQUIRE(rep.ambient.size() == 1);
    CHECK(rep.ambient[0].e == 1);
    CHECK(rep.on_x.empty());
}

TEST_CASE("fixed points landing on the hypersurface are reported") {
    const FieldCtx& k = FieldCtx::get(3, 1);
    Hypersurface x = Hypersurface::make(parse_poly(k, "X0^3 + X1^3 + X2^3", 3));
    CyclicAction act = CyclicAction::make(x);
    FixedPointReport rep = sigma_fixed_points(x, act, 1);
    REQUIRE(rep.on_x.size() == 1);
    CHECK(rep.on_x[0].point == Vec{k.one(), k.one(), k.one()});

    // order-2 swap in the plane: (X0 - X1)^2 is swap-invariant, its zero
    // locus is the single point (1:1), and the swap fixes (1:1) and (1:4)
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    Hypersurface y = Hypersurface::make(parse_poly(k5, "X0^2 + 3*X0*X1 + X1^2", 2));
    CyclicAction act2 = CyclicAction::make(y);
    FixedPointReport rep2 = sigma_fixed_points(y, act2, 1);
    CHECK(rep2.ambient.size() == 2);
    REQUIRE(rep2.on_x.size() == 1);
    CHECK(rep2.on_x[0].point == Vec{k5.one(), k5.one()});
}

TEST_CASE("cohomology dimensions from the twisting sequence") {
    const FieldCtx& k3 = FieldCtx::get(3, 1);
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    CHECK(cohomology_dims(Hypersurface::make(build_fp(3))) == std::vector<int>{1, 1});
    CHECK(cohomology_dims(Hypersurface::make(build_fp(5))) == std::vector<int>{1, 0, 0, 1});
    CHECK(cohomology_dims(Hypersurface::make(parse_poly(k3, "X0*X1 - X2^2", 3))) ==
          std::vector<int>{1, 0});
    CHECK(cohomology_dims(Hypersurface::make(
              parse_poly(k3, "X0^4 + X1^4 + X2^4", 3))) == std::vector<int>{1, 3});
    CHECK(cohomology_dims(Hypersurface::make(
              parse_poly(k3, "X0^5 + X1^5 + X2^5", 3))) == std::vector<int>{1, 6});
    // quadric surface in P^3
    CHECK(cohomology_dims(Hypersurface::make(
              parse_poly(k5, "X0*X1 - X2*X3", 4))) == std::vector<int>{1, 0, 0});
    // quartic surface in P^3
    CHECK(cohomology_dims(Hypersurface::make(parse_poly(
              k3, "X0^4 + X1^4 + X2^4 + X3^4", 4))) == std::vector<int>{1, 0, 1});
    // three points in P^1
    CHECK(cohomology_dims(Hypersurface::make(
              parse_poly(k5, "X0^3 + X1^3", 2))) == std::vector<int>{3});
}

TEST_CASE("ambient line-bundle cohomology obeys duality and vanishing") {
    for (int n = 1; n <= 4; ++n) {
        for (int m = -8; m <= 8; ++m) {
            // middle cohomology vanishes
            for (int j = 1; j < n; ++j) CHECK(ambient_cohomology_dim(n, m, j) == 0);
            // duality between the two ends
            CHECK(ambient_cohomology_dim(n, m, n) == ambient_cohomology_dim(n, -m - n - 1, 0));
            CHECK(ambient_cohomology_dim(n, m, 0) == monomial_space_dim(n + 1, m));
        }
    }
    CHECK(monomial_space_dim(3, 2) == 6);
    CHECK(monomial_space_dim(3, 0) == 1);
    CHECK(monomial_space_dim(3, -1) == 0);
    CHECK(monomial_space_dim(2, 5) == 6);
}
