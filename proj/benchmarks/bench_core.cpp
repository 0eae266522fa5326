// Microbenchmarks for the hot paths: polynomial powers, point enumeration,
// Hasse-Witt assembly, semilinear decomposition, and the elliptic pipeline.

#include <benchmark/benchmark.h>

#include <cstdint>

#include "frobwitt/elliptic.hpp"
#include "frobwitt/field.hpp"
#include "frobwitt/hassewitt.hpp"
#include "frobwitt/modrep.hpp"
#include "frobwitt/poly.hpp"
#include "frobwitt/semilinear.hpp"
#include "frobwitt/variety.hpp"

namespace {

using namespace frobwitt;

void BM_PolyPow(benchmark::State& state) {
    MultiPoly f = build_fp(3);
    auto e = (unsigned long long)state.range(0);
    for (auto _ : state) {
        MultiPoly r = poly_pow(f, e);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_PolyPow)->Arg(2)->Arg(26)->Arg(242);

void BM_CountPoints(benchmark::State& state) {
    Hypersurface x = Hypersurface::make(build_fp(3));
    int e = (int)state.range(0);
    for (auto _ : state) {
        PointCount c = count_points(x, e);
        benchmark::DoNotOptimize(c.count);
    }
}
BENCHMARK(BM_CountPoints)->Arg(1)->Arg(2)->Arg(3);

void BM_HWMatrix(benchmark::State& state) {
    const FieldCtx& k = FieldCtx::get(3, 2);
    // Fermat quartic plane curve over GF(9)
    MultiPoly f = poly_add(
        poly_add(MultiPoly::monomial(k, {4, 0, 0}, k.one()),
                 MultiPoly::monomial(k, {0, 4, 0}, k.one())),
        MultiPoly::monomial(k, {0, 0, 4}, k.one()));
    Hypersurface x = Hypersurface::make(f);
    for (auto _ : state) {
        HWMatrix hw = hw_matrix(x);
        benchmark::DoNotOptimize(hw.a_q);
    }
}
BENCHMARK(BM_HWMatrix);

void BM_FullDecomposition(benchmark::State& state) {
    const FieldCtx& k = FieldCtx::get(5, 1);
    int r = (int)state.range(0);
    Mat a(k, r, r);
    // permutation cycle with unit weights on the first half, strictly upper
    // triangular tail on the second half
    int t = r / 2 + 1;
    for (int i = 0; i < t; ++i) a.at((i + 1) % t, i) = k.from_int(2);
    for (int i = t; i < r; ++i)
        for (int j = i + 1; j < r; ++j) a.at(i, j) = k.from_int(3);
    SemilinearOp op = SemilinearOp::make(k, k, a);
    for (auto _ : state) {
        FittingDecomp d = full_decomposition(op);
        benchmark::DoNotOptimize(d.fixed_basis);
    }
}
BENCHMARK(BM_FullDecomposition)->Arg(2)->Arg(4)->Arg(6);

void BM_MuElliptic(benchmark::State& state) {
    const FieldCtx& k = FieldCtx::get(11, 1);
    EllipticCurve e = EllipticCurve::short_weierstrass(k, k.one(), k.one());
    for (auto _ : state) {
        MuReport r = mu_elliptic(e);
        benchmark::DoNotOptimize(r.pass);
    }
}
BENCHMARK(BM_MuElliptic);

void BM_ExtDim(benchmark::State& state) {
    const FieldCtx& k = FieldCtx::get(5, 1);
    CyclicModule m = jordan_module(k, {4, 3, 1, 5});
    int deg = (int)state.range(0);
    for (auto _ : state) {
        int d = ext_dim(m, deg);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_ExtDim)->Arg(1)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
