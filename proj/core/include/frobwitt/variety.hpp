#pragma once

#include <vector>

#include "frobwitt/field.hpp"
#include "frobwitt/linalg.hpp"
#include "frobwitt/poly.hpp"

namespace frobwitt {

// Enumeration budget: maximum number of point evaluations a single request may
// spend. Requests that would exceed it throw BudgetExceededError carrying the
// required size.
inline constexpr unsigned long long kDefaultBudget = 100'000'000ULL;

// Number of points of P^N over a field of size qe, saturating at 2^64-1
// (qe = 0 means "does not fit in 64 bits" and also saturates).
unsigned long long projective_space_size(unsigned long long qe, int N);

// A projective hypersurface X = {f = 0} in P^N over GF(q), f homogeneous of
// degree d in N+1 variables.
struct Hypersurface {
    int N = 0;
    int d = 0;
    MultiPoly f;

    // Derives N and d from f; rejects the zero and non-homogeneous cases.
    static Hypersurface make(MultiPoly f);
    const FieldCtx& field() const { return *f.field; }
};

struct PointCount {
    int e;
    unsigned long long count;  // #X(GF(q^e))
};

// Exact count over GF(q^e) by enumerating canonical projective representatives
// (first nonzero coordinate normalized to 1) in lexicographic order.
PointCount count_points(const Hypersurface& x, int e,
                        unsigned long long budget = kDefaultBudget);

struct SmoothnessReport {
    int e_max = 0;
    bool witness_found = false;
    int witness_e = 0;  // level of the witness when found
    Vec witness;        // singular point: f and all partials vanish
};

// Searches P^N(GF(q^e)) for e = 1..e_max for common zeros of f and all its
// partials. Finding none is bounded corroboration, never a smoothness proof.
// The witness returned is the lexicographically first at the smallest level.
SmoothnessReport smoothness_probe(const Hypersurface& x, int e_max,
                                  unsigned long long budget = kDefaultBudget);

// The cyclic coordinate shift sigma(x_0 : ... : x_{n-1}) = (x_1 : ... : x_0)
// acting on a hypersurface with sigma-invariant f.
struct CyclicAction {
    int order = 0;  // n = number of variables

    // Validates invariance of x.f under the shift.
    static CyclicAction make(const Hypersurface& x);
    Vec apply(const Vec& point) const;
};

struct SigmaFixedPoint {
    int e;      // smallest level at which this point is rational
    Vec point;  // canonical representative over GF(q^e)
};

struct FixedPointReport {
    int e_max = 0;
    std::vector<SigmaFixedPoint> ambient;  // fixed points of sigma in P^N
    std::vector<SigmaFixedPoint> on_x;     // the subset lying on X
};

// Enumerates sigma-fixed points of P^N(GF(q^e)) for e = 1..e_max and
// intersects with X. Points rational over a proper sub-level are reported
// once, at their minimal level.
FixedPointReport sigma_fixed_points(const Hypersurface& x, const CyclicAction& act,
                                    int e_max, unsigned long long budget = kDefaultBudget);

// (h^0, ..., h^{N-1}) for H^i(X, O_X), assembled from the long exact sequence
// of 0 -> O_P(-d) -> O_P -> O_X -> 0 and the standard line-bundle cohomology
// of projective space.
std::vector<int> cohomology_dims(const Hypersurface& x);

// dim H^j(P^N, O(m)): monomial-space dimensions at j = 0 and j = N, zero in
// between. Exposed for the twisting-sequence assembly and its tests.
int ambient_cohomology_dim(int N, int m, int j);

// Number of monomials of degree m in nvars variables (0 for m < 0).
int monomial_space_dim(int nvars, int m);

}  // namespace frobwitt
