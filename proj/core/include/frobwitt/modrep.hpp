#pragma once

#include <string>
#include <vector>

#include "frobwitt/field.hpp"
#include "frobwitt/linalg.hpp"

namespace frobwitt {

// A finite-dimensional module over k[C], C cyclic of order p = char(k),
// given by the matrix of the generator. sigma^p = 1 is enforced; sigma - 1 is
// then automatically nilpotent (verified anyway).
struct CyclicModule {
    const FieldCtx* ctx = nullptr;
    int dim = 0;
    Mat sigma;

    static CyclicModule make(const FieldCtx& k, Mat sigma);
};

CyclicModule trivial_module(const FieldCtx& k, int copies = 1);
// The regular representation k[C]^copies, sigma permuting the group basis.
CyclicModule free_module(const FieldCtx& k, int copies = 1);
// Block-diagonal unipotent Jordan blocks of the given sizes (each in [1, p]).
CyclicModule jordan_module(const FieldCtx& k, const std::vector<int>& blocks);
CyclicModule direct_sum(const CyclicModule& a, const CyclicModule& b);
// Dual module Hom(M, k) with the action (c f)(m) = f(c^{-1} m):
// sigma_dual = inverse transpose.
CyclicModule dual_module(const CyclicModule& m);

// Matrix of Tr_C = sum of sigma^j, j = 0..p-1 (equals (sigma-1)^{p-1} in
// characteristic p).
Mat trace_map(const CyclicModule& m);

// Multiset of Jordan block sizes (each in [1, p]), sorted descending,
// computed from the ranks of (sigma - 1)^j.
std::vector<int> jordan_type(const CyclicModule& m);

struct TateResult {
    int dimension = 0;
    std::vector<Vec> representatives;  // coset representatives of the quotient
};

// Tate cohomology of C with coefficients in M, period 2:
// even i: M^C / Tr_C(M); odd i: ker(Tr_C) / (sigma-1)M.
TateResult tate_cohomology(const CyclicModule& m, long long i);

// dim Ext^m_{k[C]}(M, k) for m >= 1, via Tate cohomology of the dual module.
int ext_dim(const CyclicModule& m, int degree);

// The spliced periodic complex 0 -> k -> P_0 -> ... -> P_n -> M -> 0 with
// free P_i and boundaries alternating (sigma - 1) (even index) and Tr_C (odd
// index); the left kernel is exactly the invariant line spanned by
// unit_image.
struct ChainComplexKC {
    const FieldCtx* ctx = nullptr;
    int n = 0;
    std::vector<CyclicModule> modules;  // P_0 .. P_n
    std::vector<Mat> boundaries;        // boundaries[i] : P_i -> P_{i+1}
    Vec unit_image;                     // spans ker(boundaries[0]) = embedded k
};

ChainComplexKC build_periodic_complex(const FieldCtx& k, int n);

// Equivariance, d.d = 0, interior exactness, and the end homology ranks.
// Throws NotExactError naming the first failed condition.
void validate_complex(const ChainComplexKC& cx);

// coker(boundaries[n-1]) with the induced sigma action.
CyclicModule end_module(const ChainComplexKC& cx);

struct LLPrimeResult {
    int dim_l = 0;
    int dim_lprime = 0;
    std::vector<Vec> l_reps;       // in P_n
    std::vector<Vec> lprime_reps;  // in the internal extension P_{n+1}
};

// The two subquotients
//   L  = (im d_{n-1} /\ P_n^C)     / d_{n-1}(P_{n-1}^C)
//   L' = (im d_n     /\ P_{n+1}^C) / d_n(P_n^C)
// where the complex is extended one periodic step for L'. Both are
// 1-dimensional for every exact complex of this shape.
LLPrimeResult compute_L_Lprime(const ChainComplexKC& cx);

struct CheckLine {
    std::string name;
    long long expected = 0;
    long long got = 0;
    bool pass = false;
};

struct Prop3435Report {
    int n = 0;                 // parity carrier
    std::vector<int> jordan;
    bool has_special = false;  // a non-free indecomposable summand is present
    std::vector<CheckLine> checks;
    bool all_pass = false;
};

// Replays the dimension bookkeeping for a module of the shape
// (special block) (+) free, where the special block has size 1 for odd n and
// p-1 for even n. Throws DecompositionMismatchError when the Jordan type has
// any other shape (free-only modules are accepted; the special-part
// quantities are all 0).
Prop3435Report verify_prop34_35(const CyclicModule& m, int n);

}  // namespace frobwitt
