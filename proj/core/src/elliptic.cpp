#include "frobwitt/elliptic.hpp"

#include <set>
#include <string>

#include "frobwitt/errors.hpp"
#include "frobwitt/linalg.hpp"
#include "frobwitt/poly.hpp"
#include "frobwitt/semilinear.hpp"

namespace frobwitt {

namespace {

EllipticCurve make_curve(const FieldCtx& k, const FieldElem& c2, const FieldElem& c1,
                         const FieldElem& c0) {
    k.check(c2);
    k.check(c1);
    k.check(c0);
    EllipticCurve e;
    e.ctx = &k;
    e.c2 = c2;
    e.c1 = c1;
    e.c0 = c0;
    if (e.discriminant().is_zero()) {
        throw SingularCurveError("curve discriminant is zero: y^2 = x^3 + (" +
                                 c2.str() + ")x^2 + (" + c1.str() + ")x + (" +
                                 c0.str() + ")");
    }
    return e;
}

}  // namespace

EllipticCurve EllipticCurve::short_weierstrass(const FieldCtx& k, const FieldElem& a,
                                               const FieldElem& b) {
    if (k.p() < 5) {
        throw BadPrimeError("short Weierstrass form requires p >= 5; got p = " +
                            std::to_string(k.p()));
    }
    return make_curve(k, k.zero(), a, b);
}

EllipticCurve EllipticCurve::char3_model(const FieldCtx& k, const FieldElem& a2,
                                         const FieldElem& a4, const FieldElem& a6) {
    if (k.p() != 3) {
        throw BadPrimeError("the a2-form model requires p = 3; got p = " +
                            std::to_string(k.p()));
    }
    return make_curve(k, a2, a4, a6);
}

FieldElem EllipticCurve::discriminant() const {
    const FieldCtx& k = *ctx;
    FieldElem c2sq = k.mul(c2, c2);
    FieldElem c1sq = k.mul(c1, c1);
    FieldElem d = k.mul(k.from_int(18), k.mul(c2, k.mul(c1, c0)));
    d = k.sub(d, k.mul(k.from_int(4), k.mul(k.mul(c2sq, c2), c0)));
    d = k.add(d, k.mul(c2sq, c1sq));
    d = k.sub(d, k.mul(k.from_int(4), k.mul(c1sq, c1)));
    d = k.sub(d, k.mul(k.from_int(27), k.mul(c0, c0)));
    return d;
}

Hypersurface projectivize(const EllipticCurve& e) {
    const FieldCtx& k = *e.ctx;
    // f = Y^2 Z - X^3 - c2 X^2 Z - c1 X Z^2 - c0 Z^3 in (X, Y, Z).
    MultiPoly f = MultiPoly::monomial(k, {0, 2, 1}, k.one());
    f = poly_add(f, MultiPoly::monomial(k, {3, 0, 0}, k.neg(k.one())));
    f = poly_add(f, MultiPoly::monomial(k, {2, 0, 1}, k.neg(e.c2)));
    f = poly_add(f, MultiPoly::monomial(k, {1, 0, 2}, k.neg(e.c1)));
    f = poly_add(f, MultiPoly::monomial(k, {0, 0, 3}, k.neg(e.c0)));
    return Hypersurface::make(std::move(f));
}

FieldElem hasse_invariant_p(const EllipticCurve& e) {
    const FieldCtx& k = *e.ctx;
    MultiPoly g = MultiPoly::monomial(k, {3}, k.one());
    g = poly_add(g, MultiPoly::monomial(k, {2}, e.c2));
    g = poly_add(g, MultiPoly::monomial(k, {1}, e.c1));
    g = poly_add(g, MultiPoly::constant(k, 1, e.c0));
    unsigned long long h = static_cast<unsigned long long>(k.p() - 1) / 2;
    MultiPoly gh = poly_pow(g, h);
    return coeff(gh, {static_cast<std::uint32_t>(k.p() - 1)});
}

FieldElem hasse_invariant(const EllipticCurve& e) {
    const FieldCtx& k = *e.ctx;
    FieldElem c = hasse_invariant_p(e);
    FieldElem out = k.one();
    for (int i = 0; i < k.f(); ++i) {
        out = k.mul(out, frobenius(k, c, i));
    }
    return out;
}

std::int64_t trace_of_frobenius(const EllipticCurve& e, unsigned long long budget) {
    const FieldCtx& k = *e.ctx;
    unsigned long long q = k.q();
    if (q == 0 || 2 * q > budget || 2 * q < q) {
        throw BudgetExceededError(q == 0 ? ~0ULL : 2 * q);
    }
    std::set<FieldElem> squares;
    FieldElem y = k.zero();
    do {
        squares.insert(k.mul(y, y));
    } while (k.next_element(y));
    unsigned long long count = 1;  // the point at infinity
    FieldElem x = k.zero();
    do {
        FieldElem gx = k.add(k.mul(k.add(k.mul(k.add(x, e.c2), x), e.c1), x), e.c0);
        if (gx.is_zero()) {
            count += 1;
        } else if (squares.count(gx)) {
            count += 2;
        }
    } while (k.next_element(x));
    std::int64_t a = static_cast<std::int64_t>(q) + 1 - static_cast<std::int64_t>(count);
    if (a * a > static_cast<std::int64_t>(4 * q)) {
        throw Error("Frobenius trace " + std::to_string(a) +
                    " violates the Weil bound over GF(" + std::to_string(q) + ")");
    }
    return a;
}

namespace {

FixedSpaceResult h1_fixed_space(const EllipticCurve& e, int m_cap) {
    const FieldCtx& k = *e.ctx;
    Mat a(k, 1, 1);
    a.at(0, 0) = hasse_invariant(e);
    return fixed_space(SemilinearOp::make(k, k, a), m_cap);
}

}  // namespace

int etale_h1_dim(const EllipticCurve& e, int m_cap) {
    FixedSpaceResult fs = h1_fixed_space(e, m_cap);
    if (fs.cap_exceeded) {
        throw CapExceededError("fixed-space escalation exceeded m_cap = " +
                               std::to_string(m_cap));
    }
    return static_cast<int>(fs.basis.size());
}

MuReport mu_elliptic(const EllipticCurve& e, int m_cap, unsigned long long budget) {
    const FieldCtx& k = *e.ctx;
    MuReport rep;
    rep.c_p = hasse_invariant_p(e);
    rep.c_q = hasse_invariant(e);
    rep.a_q = trace_of_frobenius(e, budget);
    rep.ordinary = !rep.c_q.is_zero();
    rep.mu_defined = rep.ordinary;
    rep.mu = rep.ordinary ? rep.c_q : k.zero();

    std::int64_t r = rep.a_q % k.p();
    if (r < 0) r += k.p();
    rep.a_congruence_ok = (rep.c_q == k.from_int(r));

    ZetaModP z = zeta_mod_p(projectivize(e));
    if (rep.ordinary) {
        rep.zeta1_ok = uni_eval(z.zeta1, k.inv(rep.mu)).is_zero();
    } else {
        rep.zeta1_ok = (z.zeta1 == UniPoly{k.one()});
    }

    FixedSpaceResult fs = h1_fixed_space(e, m_cap);
    if (fs.cap_exceeded) {
        throw CapExceededError("fixed-space escalation exceeded m_cap = " +
                               std::to_string(m_cap));
    }
    rep.etale_h1 = static_cast<int>(fs.basis.size());
    rep.escalation_m = fs.extension_multiple;
    rep.pass = rep.a_congruence_ok && rep.zeta1_ok &&
               rep.etale_h1 == (rep.ordinary ? 1 : 0);
    return rep;
}

}  // namespace frobwitt
