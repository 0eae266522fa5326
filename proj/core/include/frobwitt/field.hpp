#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frobwitt/errors.hpp"

namespace frobwitt {

class FieldCtx;

// Element of GF(p^f), stored as coordinates over the power basis
// 1, t, ..., t^{f-1} of GF(p)[t]/(modulus). Coordinates are residues in [0, p).
// Elements carry a pointer to their field so arithmetic can be written with
// operators; the contexts themselves are interned and immutable.
struct FieldElem {
    const FieldCtx* field = nullptr;
    std::vector<std::int64_t> c;

    FieldElem() = default;
    FieldElem(const FieldCtx* k, std::vector<std::int64_t> coords) : field(k), c(std::move(coords)) {}

    bool is_zero() const;

    // Coordinate-wise comparisons; used for canonical (deterministic) choices.
    bool operator==(const FieldElem& o) const { return c == o.c; }
    bool operator!=(const FieldElem& o) const { return c != o.c; }
    bool operator<(const FieldElem& o) const { return c < o.c; }

    std::string str() const;
};

// The field GF(p^f). Construction is deterministic: the modulus is the
// lexicographically smallest monic irreducible of degree f over GF(p),
// coefficients compared low-degree-first. Instances are interned: get(p, f)
// always returns the same object, so pointer equality means field equality.
class FieldCtx {
public:
    // Interned access. Throws NonPrimeError / DegreeError on bad input.
    static const FieldCtx& get(std::int64_t p, int f);

    std::int64_t p() const { return p_; }
    int f() const { return f_; }

    // p^f when it fits in 64 bits, otherwise 0 (oversized fields are only used
    // for linear algebra, never for enumeration).
    unsigned long long q() const { return q_; }

    // Monic defining polynomial, length f+1, modulus()[f] == 1.
    const std::vector<std::int64_t>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem gen() const;                    // the class of t
    FieldElem from_int(std::int64_t v) const; // prime-subfield element v mod p
    // Element with the given coordinate vector (entries reduced mod p).
    FieldElem make(std::vector<std::int64_t> coords) const;

    FieldElem add(const FieldElem& x, const FieldElem& y) const;
    FieldElem sub(const FieldElem& x, const FieldElem& y) const;
    FieldElem neg(const FieldElem& x) const;
    FieldElem mul(const FieldElem& x, const FieldElem& y) const;
    FieldElem inv(const FieldElem& x) const;  // throws ZeroVectorError on 0
    FieldElem div(const FieldElem& x, const FieldElem& y) const;
    FieldElem pow(const FieldElem& x, unsigned long long e) const;

    // x^(p^i). i may be any non-negative integer; i = f is the identity.
    FieldElem frobenius(const FieldElem& x, int i) const;

    // Subfield membership tests via coordinates / Frobenius fixedness.
    bool in_prime_field(const FieldElem& x) const;
    // For prime-subfield elements: the residue in [0, p). Throws otherwise.
    std::int64_t to_int(const FieldElem& x) const;

    // Matrix of x -> x^p as a GF(p)-linear map on the power basis,
    // row-major f x f. Precomputed at construction.
    const std::vector<std::int64_t>& frobenius_matrix() const { return frob_mat_; }

    // Lexicographic successor over coordinate vectors; returns false after the
    // last element. Start from zero() to enumerate the whole field.
    bool next_element(FieldElem& x) const;

    void check(const FieldElem& x) const;  // ContextMismatchError if foreign

private:
    FieldCtx(std::int64_t p, int f);

    std::int64_t p_;
    int f_;
    unsigned long long q_;
    std::vector<std::int64_t> modulus_;
    std::vector<std::int64_t> frob_mat_;
};

// Spec-level convenience name.
inline const FieldCtx& make_field(std::int64_t p, int f) { return FieldCtx::get(p, f); }

inline FieldElem operator+(const FieldElem& x, const FieldElem& y) { return x.field->add(x, y); }
inline FieldElem operator-(const FieldElem& x, const FieldElem& y) { return x.field->sub(x, y); }
inline FieldElem operator-(const FieldElem& x) { return x.field->neg(x); }
inline FieldElem operator*(const FieldElem& x, const FieldElem& y) { return x.field->mul(x, y); }
inline FieldElem operator/(const FieldElem& x, const FieldElem& y) { return x.field->div(x, y); }

inline FieldElem frobenius(const FieldCtx& k, const FieldElem& x, int i) { return k.frobenius(x, i); }

// Embedding GF(p^f) -> GF(p^(f*m)), determined by the lexicographically
// smallest root of the subfield modulus in the big field. Robust against the
// two fields having unrelated defining polynomials.
struct TowerEmbedding {
    const FieldCtx* sub = nullptr;
    const FieldCtx* sup = nullptr;
    FieldElem gen_image;                  // root of sub->modulus() in *sup
    std::vector<FieldElem> gen_powers;    // gen_image^0 .. gen_image^(sub->f()-1)

    static TowerEmbedding make(const FieldCtx& sub, const FieldCtx& sup);

    FieldElem embed(const FieldElem& x) const;
};

}  // namespace frobwitt
