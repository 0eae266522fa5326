#pragma once

#include <string>
#include <vector>

#include "frobwitt/linalg.hpp"
#include "frobwitt/poly.hpp"
#include "frobwitt/variety.hpp"

namespace frobwitt {

// Monomial basis of top coherent cohomology of a degree-d hypersurface in P^N:
// all exponent vectors with every entry >= 1 summing to d, in lex order.
// Size C(d-1, N).
struct HWBasis {
    int d = 0;
    int N = 0;
    std::vector<ExpVec> monomials;
};

HWBasis hw_basis(int d, int N);

// Matrices of the p-power and q-power Frobenius on that basis over GF(q).
//
// Entry rule: A_p[u][w] = coeff(f^{p-1}, p*w - u), zero when any component of
// p*w - u is negative. With this orientation the f-fold twisted product
// A_p * A_p^[p] * ... * A_p^[p^{f-1}] equals direct extraction from f^{q-1}
// (entry [u][w] = coeff(f^{q-1}, q*w - u)), which is the invariant that pins
// the convention; the Katz congruence against raw point counts is the
// empirical cross-check.
struct HWMatrix {
    HWBasis basis;
    Mat a_p;
    Mat a_q;  // f-fold twisted product of a_p; equal to a_p when f = 1
};

HWMatrix hw_matrix(const Hypersurface& x);

// Dense univariate polynomial over a field, index = degree in T.
using UniPoly = std::vector<FieldElem>;

UniPoly uni_one(const FieldCtx& k);
UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
FieldElem uni_eval(const UniPoly& a, const FieldElem& x);
std::string uni_str(const UniPoly& a);

// det(1 - A*T) via sums of principal minors (elementary symmetric functions
// of A). Desk scale: dimension capped at 12.
UniPoly det_one_minus_t(const Mat& a);

// The two mod-p zeta factors of Eq. (zeta) = zeta0/zeta1 split by cohomological
// parity: H^0 contributes (1 - T) to zeta0; H^{N-1} contributes
// det(1 - A_q T) to zeta1 for odd N-1, zeta0 for even.
struct ZetaModP {
    UniPoly zeta0;
    UniPoly zeta1;
};

// Requires the (1, 0, ..., 0, h^{N-1}) cohomology profile with N >= 2.
ZetaModP zeta_mod_p(const Hypersurface& x);

struct KatzRow {
    int e = 0;
    unsigned long long n_e = 0;          // exact point count over GF(q^e)
    std::int64_t n_e_mod_p = 0;
    std::int64_t trace_side = 0;         // (1 + (-1)^{N-1} Tr(M_e)) mod p
    bool trace_in_prime_field = false;
    bool pass = false;
};

struct KatzReport {
    std::vector<KatzRow> rows;
    bool all_pass = false;
};

// Verifies N_e === sum_i (-1)^i Tr(F^e | H^i) (mod p) for e = 1..e_max, where
// the H^0 trace is 1 and F on H^{N-1} is the q-power Frobenius matrix A_q.
KatzReport katz_check(const Hypersurface& x, int e_max,
                      unsigned long long budget = kDefaultBudget);

}  // namespace frobwitt
