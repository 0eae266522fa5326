#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "frobwitt/field.hpp"

namespace frobwitt {

// Exponent vector of a monomial. Entries are capped at 2^16 - 1 per variable;
// arithmetic that would push an exponent past the cap throws DegreeError.
using ExpVec = std::vector<std::uint32_t>;

inline constexpr std::uint32_t kMaxExponent = 1u << 16;

// Sparse multivariate polynomial over a fixed field context. Terms are kept in
// a map ordered lexicographically on exponent vectors, and no stored
// coefficient is ever zero, so equal polynomials compare equal structurally
// and serialize identically.
struct MultiPoly {
    const FieldCtx* field = nullptr;
    int nvars = 0;
    std::map<ExpVec, FieldElem> terms;

    MultiPoly() = default;
    MultiPoly(const FieldCtx& k, int nvars_) : field(&k), nvars(nvars_) {}

    static MultiPoly zero(const FieldCtx& k, int nvars);
    static MultiPoly constant(const FieldCtx& k, int nvars, const FieldElem& c);
    static MultiPoly variable(const FieldCtx& k, int nvars, int i);
    // Single monomial c * X^e.
    static MultiPoly monomial(const FieldCtx& k, const ExpVec& e, const FieldElem& c);

    bool is_zero() const { return terms.empty(); }
    // Adds c to the coefficient of X^e, dropping the term if the sum is zero.
    void add_term(const ExpVec& e, const FieldElem& c);
    FieldElem coefficient(const ExpVec& e) const;
    // Largest total degree among the stored terms (0 for the zero polynomial).
    int total_degree() const;
    bool is_homogeneous(int d) const;

    bool operator==(const MultiPoly& o) const {
        return field == o.field && nvars == o.nvars && terms == o.terms;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Canonical text form: terms in lex order, "c*X0^e0*X1^e1" with unit
    // coefficients and exponents elided ("0" for the zero polynomial).
    std::string str() const;
};

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly poly_neg(const MultiPoly& a);
MultiPoly poly_scale(const FieldElem& c, const MultiPoly& a);
MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b);

// a^e. Splits e into base-p digits: for each digit the factor a^{p^j} is
// produced by the characteristic-p shortcut (exponent vectors scaled by p^j,
// coefficients through Frobenius), and the residual small powers are folded by
// squaring. Agrees with naive repeated multiplication.
MultiPoly poly_pow(const MultiPoly& a, unsigned long long e);

FieldElem coeff(const MultiPoly& a, const ExpVec& e);

MultiPoly partial_derivative(const MultiPoly& a, int var);

// Evaluation at a point. All point coordinates must share one context; it must
// equal a.field unless emb maps a.field into the point's field, in which case
// coefficients are pushed through emb first.
FieldElem evaluate(const MultiPoly& a, const std::vector<FieldElem>& point,
                   const TowerEmbedding* emb = nullptr);

// The degree-p cyclic polynomial in p variables over GF(p):
//   X0...X_{p-1} + sum_i X_i^{p-1} X_{i+1 mod p}.
// Defined for odd primes only.
MultiPoly build_fp(std::int64_t p);

// Cyclic coordinate shift: variable i's exponent moves to slot (i+shift) mod nvars.
MultiPoly rotate_vars(const MultiPoly& a, int shift);

// Parses the CLI text form: terms joined by '+' or '-', each term
// "c*X0^e0*X1^e1*..." with omitted exponents = 1 and omitted coefficient = 1;
// whitespace-insensitive; integer coefficients are reduced into the field.
// nvars < 0 infers the variable count as (largest index used) + 1.
MultiPoly parse_poly(const FieldCtx& k, const std::string& text, int nvars = -1);

}  // namespace frobwitt
