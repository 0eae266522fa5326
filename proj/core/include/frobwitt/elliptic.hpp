#pragma once

#include <cstdint>

#include "frobwitt/field.hpp"
#include "frobwitt/hassewitt.hpp"
#include "frobwitt/variety.hpp"

namespace frobwitt {

// An elliptic curve y^2 = g(x), g(x) = x^3 + c2 x^2 + c1 x + c0, over GF(q)
// with q odd. p >= 5 uses the short form (c2 = 0); p = 3 uses the a2-form
// (a short-form curve in characteristic 3 is never ordinary, so the model
// must keep the x^2 term).
struct EllipticCurve {
    const FieldCtx* ctx = nullptr;
    FieldElem c2, c1, c0;

    // y^2 = x^3 + a x + b, p >= 5 only. Throws SingularCurveError when the
    // discriminant vanishes.
    static EllipticCurve short_weierstrass(const FieldCtx& k, const FieldElem& a,
                                           const FieldElem& b);
    // y^2 = x^3 + a2 x^2 + a4 x + a6, p = 3 only.
    static EllipticCurve char3_model(const FieldCtx& k, const FieldElem& a2,
                                     const FieldElem& a4, const FieldElem& a6);

    // Discriminant of the cubic g (nonzero iff the curve is nonsingular in
    // odd characteristic): 18*c2*c1*c0 - 4*c2^3*c0 + c2^2*c1^2 - 4*c1^3 - 27*c0^2.
    FieldElem discriminant() const;
};

// The plane cubic Y^2 Z - (X^3 + c2 X^2 Z + c1 X Z^2 + c0 Z^3) in P^2,
// variables (X0, X1, X2) = (X, Y, Z).
Hypersurface projectivize(const EllipticCurve& e);

// p-power Hasse invariant: the coefficient of x^{p-1} in g(x)^{(p-1)/2}.
// Zero iff supersingular.
FieldElem hasse_invariant_p(const EllipticCurve& e);

// q-power Frobenius eigenvalue on H^1(E, O_E): the twisted product
// c * c^p * ... * c^{p^{f-1}} of the p-power invariant (equal to it for f=1).
// Always lies in the prime field.
FieldElem hasse_invariant(const EllipticCurve& e);

// a_q = q + 1 - #E(GF(q)) by exhaustive affine counting plus the point at
// infinity. Asserts the Weil bound a_q^2 <= 4q.
std::int64_t trace_of_frobenius(const EllipticCurve& e,
                                unsigned long long budget = kDefaultBudget);

// GF(q)-dimension of the fixed space of the q-power Frobenius on H^1(E, O_E)
// (1 iff ordinary). Throws CapExceededError if escalation hits m_cap.
int etale_h1_dim(const EllipticCurve& e, int m_cap = 64);

struct MuReport {
    FieldElem c_p;  // p-power Hasse invariant
    FieldElem c_q;  // q-power eigenvalue; equals mu when defined
    std::int64_t a_q = 0;
    bool ordinary = false;
    bool mu_defined = false;  // false flags supersingular inapplicability
    FieldElem mu;             // = c_q when ordinary
    bool a_congruence_ok = false;  // c_q equals the image of a_q in GF(p)
    bool zeta1_ok = false;  // ordinary: zeta1(mu^{-1}) = 0; else zeta1 = 1
    int etale_h1 = 0;
    int escalation_m = 0;  // extension multiple used by the fixed-space search
    bool pass = false;
};

// Assembles the invariant pipeline: Hasse invariant, point-count trace,
// ordinarity, mu = c_q, the trace congruence, the zeta1 zero at mu^{-1}, and
// the etale h^1 dimension.
MuReport mu_elliptic(const EllipticCurve& e, int m_cap = 64,
                     unsigned long long budget = kDefaultBudget);

}  // namespace frobwitt
