#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <set>
#include <vector>

#include "frobwitt/errors.hpp"
#include "frobwitt/field.hpp"
#include "support/oracles.hpp"

using namespace frobwitt;
using frobwitt::testsupport::Rng;
using frobwitt::testsupport::relem;
using frobwitt::testsupport::rnonzero;

TEST_CASE("field contexts are interned") {
    const FieldCtx& a = FieldCtx::get(5, 2);
    const FieldCtx& b = FieldCtx::get(5, 2);
    CHECK(&a == &b);
    CHECK(&FieldCtx::get(5, 1) != &a);
    CHECK(&make_field(5, 2) == &a);
}

TEST_CASE("defining moduli are the lex-smallest monic irreducibles") {
    using V = std::vector<std::int64_t>;
    CHECK(FieldCtx::get(3, 1).modulus() == V{0, 1});        // t
    CHECK(FieldCtx::get(3, 2).modulus() == V{1, 0, 1});     // t^2 + 1
    CHECK(FieldCtx::get(5, 2).modulus() == V{1, 1, 1});     // t^2 + t + 1
    CHECK(FieldCtx::get(3, 3).modulus() == V{1, 0, 2, 1});  // t^3 + 2t^2 + 1
    CHECK(FieldCtx::get(2, 2).modulus() == V{1, 1, 1});     // t^2 + t + 1
    CHECK(FieldCtx::get(2, 3).modulus() == V{1, 0, 1, 1});  // t^3 + t^2 + 1
    CHECK(FieldCtx::get(7, 2).modulus() == V{1, 0, 1});     // t^2 + 1 (-1 not a square mod 7)
}

TEST_CASE("moduli have no roots in the prime field") {
    for (auto [p, f] : {std::pair<std::int64_t, int>{3, 4}, {5, 3}, {11, 2}, {3, 5}}) {
        const FieldCtx& k = FieldCtx::get(p, f);
        const auto& m = k.modulus();
        REQUIRE((int)m.size() == f + 1);
        CHECK(m[f] == 1);
        for (std::int64_t a = 0; a < p; ++a) {
            std::int64_t v = 0;
            for (int i = f; i >= 0; --i) v = (v * a + m[i]) % p;
            CHECK(v != 0);
        }
    }
}

TEST_CASE("large-degree context construction stays cheap") {
    // Exercises the degree-32 search path; must return promptly.
    const FieldCtx& k = FieldCtx::get(3, 32);
    CHECK(k.f() == 32);
    unsigned long long q = 1;
    for (int i = 0; i < 32; ++i) q *= 3;
    CHECK(k.q() == q);
    CHECK(k.modulus()[0] != 0);
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldCtx::get(4, 1), NonPrimeError);
    CHECK_THROWS_AS(FieldCtx::get(1, 1), NonPrimeError);
    CHECK_THROWS_AS(FieldCtx::get(-3, 1), NonPrimeError);
    CHECK_THROWS_AS(FieldCtx::get(3, 0), DegreeError);
    CHECK_THROWS_AS(FieldCtx::get(3, -2), DegreeError);
}

TEST_CASE("field axioms hold on sampled elements") {
    Rng rng(2026);
    for (auto [p, f] : {std::pair<std::int64_t, int>{3, 2}, {5, 2}, {7, 1}, {3, 3}, {2, 4}}) {
        const FieldCtx& k = FieldCtx::get(p, f);
        for (int it = 0; it < 50; ++it) {
            FieldElem a = relem(rng, k), b = relem(rng, k), c = relem(rng, k);
            CHECK((a + b) + c == a + (b + c));
            CHECK(a + b == b + a);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + k.zero() == a);
            CHECK(a * k.one() == a);
            CHECK(a - a == k.zero());
            FieldElem u = rnonzero(rng, k);
            CHECK(u * k.inv(u) == k.one());
            CHECK(a / u * u == a);
        }
    }
}

TEST_CASE("pow matches repeated multiplication and Fermat") {
    Rng rng(7);
    const FieldCtx& k = FieldCtx::get(5, 2);
    for (int it = 0; it < 30; ++it) {
        FieldElem a = relem(rng, k);
        FieldElem acc = k.one();
        for (unsigned e = 0; e <= 8; ++e) {
            CHECK(k.pow(a, e) == acc);
            acc = acc * a;
        }
        CHECK(k.pow(a, k.q()) == a);  // x^q = x
        if (!a.is_zero()) CHECK(k.pow(a, k.q() - 1) == k.one());
    }
    CHECK(k.pow(k.zero(), 0) == k.one());
}

TEST_CASE("frobenius is a field automorphism fixing the prime field") {
    Rng rng(11);
    for (auto [p, f] : {std::pair<std::int64_t, int>{3, 3}, {5, 2}}) {
        const FieldCtx& k = FieldCtx::get(p, f);
        for (int it = 0; it < 40; ++it) {
            FieldElem a = relem(rng, k), b = relem(rng, k);
            CHECK(k.frobenius(a, 1) == k.pow(a, (unsigned long long)p));
            CHECK(k.frobenius(a + b, 1) == k.frobenius(a, 1) + k.frobenius(b, 1));
            CHECK(k.frobenius(a * b, 1) == k.frobenius(a, 1) * k.frobenius(b, 1));
            CHECK(k.frobenius(a, f) == a);                              // full orbit
            CHECK(k.frobenius(k.frobenius(a, 1), 1) == k.frobenius(a, 2));
        }
        for (std::int64_t v = 0; v < p; ++v)
            CHECK(k.frobenius(k.from_int(v), 1) == k.from_int(v));
    }
}

TEST_CASE("frobenius matrix reproduces frobenius coordinates") {
    Rng rng(13);
    const FieldCtx& k = FieldCtx::get(3, 3);
    const auto& fm = k.frobenius_matrix();  // row-major f x f over GF(p)
    int f = k.f();
    for (int it = 0; it < 25; ++it) {
        FieldElem a = relem(rng, k);
        FieldElem fa = k.frobenius(a, 1);
        for (int i = 0; i < f; ++i) {
            std::int64_t s = 0;
            for (int j = 0; j < f; ++j) s += fm[(size_t)i * f + j] * a.c[j];
            CHECK(((s % k.p()) + k.p()) % k.p() == fa.c[i]);
        }
    }
}

TEST_CASE("next_element enumerates the whole field once") {
    const FieldCtx& k = FieldCtx::get(3, 2);
    std::set<FieldElem> seen;
    FieldElem x = k.zero();
    do {
        CHECK(seen.insert(x).second);
    } while (k.next_element(x));
    CHECK(seen.size() == k.q());
}

TEST_CASE("prime-subfield membership and integer conversion") {
    const FieldCtx& k = FieldCtx::get(5, 2);
    for (std::int64_t v = -7; v <= 7; ++v) {
        FieldElem x = k.from_int(v);
        CHECK(k.in_prime_field(x));
        CHECK(k.to_int(x) == ((v % 5) + 5) % 5);
    }
    CHECK_FALSE(k.in_prime_field(k.gen()));
    CHECK_THROWS_AS(k.to_int(k.gen()), Error);
    CHECK(k.make({9, -3}) == k.make({4, 2}));  // coordinates reduced mod p
}

TEST_CASE("division by zero and foreign elements are rejected") {
    const FieldCtx& k3 = FieldCtx::get(3, 1);
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    CHECK_THROWS_AS(k3.inv(k3.zero()), ZeroVectorError);
    CHECK_THROWS_AS(k3.div(k3.one(), k3.zero()), ZeroVectorError);
    CHECK_THROWS_AS(k5.check(k3.one()), ContextMismatchError);
}

TEST_CASE("tower embedding is a ring homomorphism") {
    Rng rng(17);
    const FieldCtx& k9 = FieldCtx::get(3, 2);
    const FieldCtx& k81 = FieldCtx::get(3, 4);
    TowerEmbedding emb = TowerEmbedding::make(k9, k81);

    // gen_image is a root of the subfield modulus in the big field.
    FieldElem acc = k81.zero();
    const auto& m = k9.modulus();
    for (int i = (int)m.size() - 1; i >= 0; --i)
        acc = acc * emb.gen_image + k81.from_int(m[i]);
    CHECK(acc.is_zero());

    CHECK(emb.embed(k9.zero()) == k81.zero());
    CHECK(emb.embed(k9.one()) == k81.one());
    CHECK(emb.embed(k9.gen()) == emb.gen_image);
    std::set<FieldElem> images;
    FieldElem x = k9.zero();
    do {
        images.insert(emb.embed(x));
    } while (k9.next_element(x));
    CHECK(images.size() == k9.q());  // injective

    for (int it = 0; it < 40; ++it) {
        FieldElem a = relem(rng, k9), b = relem(rng, k9);
        CHECK(emb.embed(a + b) == emb.embed(a) + emb.embed(b));
        CHECK(emb.embed(a * b) == emb.embed(a) * emb.embed(b));
        // Frobenius commutes with any embedding in equal characteristic.
        CHECK(emb.embed(k9.frobenius(a, 1)) == k81.frobenius(emb.embed(a), 1));
    }
}

TEST_CASE("tower embedding from the prime field") {
    const FieldCtx& k5 = FieldCtx::get(5, 1);
    const FieldCtx& k25 = FieldCtx::get(5, 2);
    TowerEmbedding emb = TowerEmbedding::make(k5, k25);
    for (std::int64_t v = 0; v < 5; ++v) CHECK(emb.embed(k5.from_int(v)) == k25.from_int(v));
}

TEST_CASE("tower embedding rejects incompatible fields") {
    CHECK_THROWS_AS(TowerEmbedding::make(FieldCtx::get(3, 2), FieldCtx::get(5, 2)),
                    ContextMismatchError);
    CHECK_THROWS_AS(TowerEmbedding::make(FieldCtx::get(3, 2), FieldCtx::get(3, 3)),
                    ContextMismatchError);
}

TEST_CASE("embeddings compose consistently along a tower") {
    const FieldCtx& k3 = FieldCtx::get(3, 1);
    const FieldCtx& k9 = FieldCtx::get(3, 2);
    const FieldCtx& k81 = FieldCtx::get(3, 4);
    TowerEmbedding lo = TowerEmbedding::make(k3, k9);
    TowerEmbedding hi = TowerEmbedding::make(k9, k81);
    TowerEmbedding direct = TowerEmbedding::make(k3, k81);
    FieldElem x = k3.zero();
    do {
        CHECK(hi.embed(lo.embed(x)) == direct.embed(x));
    } while (k3.next_element(x));
}
