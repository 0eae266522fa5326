#pragma once

#include <vector>

#include "frobwitt/field.hpp"
#include "frobwitt/linalg.hpp"

namespace frobwitt {

// A q-power semilinear operator phi(x) = A * x^[q] on ctx^r, where x^[q]
// raises each coordinate to the q-th power, q = p^{f_t} for the sub-context
// `twist` of `ctx`. Additive, and phi(a*x) = a^q * phi(x).
struct SemilinearOp {
    const FieldCtx* ctx;    // field of the matrix entries, GF(p^{f_c})
    const FieldCtx* twist;  // GF(q) defining the twist; f_t divides f_c
    Mat a;

    // Validates: same characteristic, twist degree divides ctx degree, A square.
    static SemilinearOp make(const FieldCtx& ctx, const FieldCtx& twist, Mat a);

    int dim() const { return a.rows; }
    // phi(v) = A * v^[q]; v may live over ctx or any extension the entries
    // of A embed into (the caller passes the extended operator for that).
    Vec apply_op(const Vec& v) const;
};

// The same operator with entries pushed into the extension `sup` of op.ctx.
SemilinearOp extend_to(const SemilinearOp& op, const FieldCtx& sup);

// M_e = A * A^[q] * A^[q^2] * ... * A^[q^{e-1}], the matrix of phi^e.
// M_1 = A and M_{e+1} = A * (M_e)^[q].
Mat twisted_power(const SemilinearOp& op, int e);

// Fixed vectors of phi over an extension GF(q^m) of ctx, as a GF(q)-vector
// space (the fixed set is closed under GF(q) scaling only). `basis` is a
// GF(q)-basis with coordinates in field_used = GF(q^{extension_multiple}).
struct FixedSpaceResult {
    std::vector<Vec> basis;
    const FieldCtx* field_used = nullptr;
    int extension_multiple = 0;
    bool cap_exceeded = false;
};

// Fitting decomposition ctx^r = V_s (+) V_eta: phi bijective on the stable
// part V_s = im(phi^r), nilpotent on V_eta = ker(phi^r).
struct FittingDecomp {
    std::vector<Vec> stable_basis;
    std::vector<Vec> nilpotent_basis;
    int nilpotency_index = 0;  // least N with phi^N = 0 on V_eta
    Mat stable_matrix;         // matrix of phi restricted to V_s in stable_basis
    // Filled by full_decomposition: a GF(q)-basis of fixed vectors.
    std::vector<Vec> fixed_basis;
    int extension_degree_used = 0;
    bool cap_exceeded = false;
};

FittingDecomp fitting_decomposition(const SemilinearOp& op);

// Fixed space via restriction of scalars to GF(p): over GF(q^m) the map
// x -> A*x^[q] is GF(p)-linear on a (r*f_t*m)-dimensional GF(p)-space, and
// the fixed set is the kernel of (that map - identity). The working extension
// multiple m starts at f_c/f_t and grows until the fixed space reaches
// dim V_s, which happens exactly when the twisted power of the stable part
// becomes the identity; m_cap bounds the search. On cap exhaustion the result
// carries the (possibly deficient) fixed space at the largest multiple tried
// and cap_exceeded = true.
FixedSpaceResult fixed_space(const SemilinearOp& op, int m_cap = 64);

// fitting_decomposition plus fixed_space, with the fixed fields filled in.
FittingDecomp full_decomposition(const SemilinearOp& op, int m_cap = 64);

// For v spanning a phi-invariant line: the scalar lam with phi(v) = lam * v.
// Well defined in GF(q) when v has GF(q) coordinates. Throws ZeroVectorError /
// NotInvariantError.
FieldElem rank_one_eigenvalue(const SemilinearOp& op, const Vec& v);

}  // namespace frobwitt
