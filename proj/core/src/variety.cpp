#include "frobwitt/variety.hpp"

#include <limits>

#include "frobwitt/errors.hpp"

namespace frobwitt {

namespace {

constexpr unsigned long long kSat = std::numeric_limits<unsigned long long>::max();

unsigned long long sat_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSat / b) return kSat;
    return a * b;
}

unsigned long long sat_add(unsigned long long a, unsigned long long b) {
    return (a > kSat - b) ? kSat : a + b;
}

unsigned long long sat_pow(unsigned long long b, int e) {
    unsigned long long r = 1;
    for (int i = 0; i < e; ++i) r = sat_mul(r, b);
    return r;
}

// Field of definition of GF(q^e)-points for a hypersurface over GF(q).
const FieldCtx& level_field(const FieldCtx& base, int e) {
    return FieldCtx::get(base.p(), base.f() * e);
}

unsigned long long level_size(const Hypersurface& x, int e) {
    unsigned long long qe = x.field().q() == 0 ? 0 : sat_pow(x.field().q(), e);
    return projective_space_size(qe, x.N);
}

void charge_budget(unsigned long long required, unsigned long long budget) {
    if (required > budget) throw BudgetExceededError(required);
}

// Visits the canonical representatives of P^N(K) in lexicographic order on
// coordinate tuples (x_0 most significant): for i = N down to 0, the block
// x_0 = ... = x_{i-1} = 0, x_i = 1, trailing coordinates free. Stops early if
// fn returns false.
template <typename Fn>
void for_each_projective_point(const FieldCtx& k, int n_plus_1, Fn&& fn) {
    int n = n_plus_1 - 1;
    Vec pt((size_t)n_plus_1, k.zero());
    for (int i = n; i >= 0; --i) {
        for (int j = 0; j < n_plus_1; ++j) pt[(size_t)j] = k.zero();
        pt[(size_t)i] = k.one();
        while (true) {
            if (!fn(static_cast<const Vec&>(pt))) return;
            // odometer on the free coordinates, last fastest
            int j = n;
            for (; j > i; --j) {
                if (k.next_element(pt[(size_t)j])) break;
                pt[(size_t)j] = k.zero();
            }
            if (j == i) break;
        }
    }
}

// First-nonzero-to-1 normalization of a projective coordinate tuple.
Vec canonicalize(const FieldCtx& k, Vec v) {
    for (const auto& x : v) {
        if (x.is_zero()) continue;
        FieldElem s = k.inv(x);
        for (auto& y : v) y = y * s;
        return v;
    }
    throw ZeroVectorError("projective point with all coordinates zero");
}

bool point_rational_over_sublevel(const FieldCtx& k, const FieldCtx& base, int e, const Vec& pt) {
    for (int sub = 1; sub < e; ++sub) {
        if (e % sub != 0) continue;
        bool all = true;
        for (const auto& x : pt)
            if (k.frobenius(x, base.f() * sub) != x) { all = false; break; }
        if (all) return true;
    }
    return false;
}

}  // namespace

unsigned long long projective_space_size(unsigned long long qe, int N) {
    if (qe == 0) return kSat;
    unsigned long long total = 0, power = 1;
    for (int i = 0; i <= N; ++i) {
        total = sat_add(total, power);
        power = sat_mul(power, qe);
    }
    return total;
}

Hypersurface Hypersurface::make(MultiPoly f) {
    if (f.is_zero()) throw InputError("hypersurface polynomial must be nonzero");
    if (f.nvars < 2) throw InputError("hypersurface needs at least two variables");
    Hypersurface x;
    x.d = f.total_degree();
    if (x.d < 1) throw DegreeError("hypersurface polynomial must have degree at least 1");
    if (!f.is_homogeneous(x.d)) throw InputError("hypersurface polynomial must be homogeneous");
    x.N = f.nvars - 1;
    x.f = std::move(f);
    return x;
}

PointCount count_points(const Hypersurface& x, int e, unsigned long long budget) {
    if (e < 1) throw InputError("extension degree must be at least 1");
    charge_budget(level_size(x, e), budget);
    const FieldCtx& k = level_field(x.field(), e);
    TowerEmbedding emb = TowerEmbedding::make(x.field(), k);
    const TowerEmbedding* embp = (&k == &x.field()) ? nullptr : &emb;
    unsigned long long count = 0;
    for_each_projective_point(k, x.N + 1, [&](const Vec& pt) {
        if (evaluate(x.f, pt, embp).is_zero()) ++count;
        return true;
    });
    return PointCount{e, count};
}

SmoothnessReport smoothness_probe(const Hypersurface& x, int e_max, unsigned long long budget) {
    if (e_max < 1) throw InputError("extension bound must be at least 1");
    unsigned long long required = 0;
    for (int e = 1; e <= e_max; ++e) required = sat_add(required, level_size(x, e));
    charge_budget(required, budget);
    std::vector<MultiPoly> partials;
    for (int i = 0; i <= x.N; ++i) partials.push_back(partial_derivative(x.f, i));
    SmoothnessReport rep;
    rep.e_max = e_max;
    for (int e = 1; e <= e_max && !rep.witness_found; ++e) {
        const FieldCtx& k = level_field(x.field(), e);
        TowerEmbedding emb = TowerEmbedding::make(x.field(), k);
        const TowerEmbedding* embp = (&k == &x.field()) ? nullptr : &emb;
        for_each_projective_point(k, x.N + 1, [&](const Vec& pt) {
            if (!evaluate(x.f, pt, embp).is_zero()) return true;
            for (const auto& df : partials)
                if (!evaluate(df, pt, embp).is_zero()) return true;
            rep.witness_found = true;
            rep.witness_e = e;
            rep.witness = pt;
            return false;
        });
    }
    return rep;
}

CyclicAction CyclicAction::make(const Hypersurface& x) {
    if (rotate_vars(x.f, 1) != x.f)
        throw NotInvariantError("polynomial is not invariant under the coordinate shift");
    return CyclicAction{x.N + 1};
}

Vec CyclicAction::apply(const Vec& point) const {
    if ((int)point.size() != order) throw InputError("point length mismatch");
    Vec out;
    out.reserve(point.size());
    for (int i = 0; i < order; ++i) out.push_back(point[(size_t)((i + 1) % order)]);
    return out;
}

FixedPointReport sigma_fixed_points(const Hypersurface& x, const CyclicAction& act,
                                    int e_max, unsigned long long budget) {
    if (e_max < 1) throw InputError("extension bound must be at least 1");
    if (act.order != x.N + 1) throw InputError("action order does not match variable count");
    unsigned long long required = 0;
    for (int e = 1; e <= e_max; ++e) required = sat_add(required, level_size(x, e));
    charge_budget(required, budget);
    FixedPointReport rep;
    rep.e_max = e_max;
    for (int e = 1; e <= e_max; ++e) {
        const FieldCtx& k = level_field(x.field(), e);
        TowerEmbedding emb = TowerEmbedding::make(x.field(), k);
        const TowerEmbedding* embp = (&k == &x.field()) ? nullptr : &emb;
        for_each_projective_point(k, x.N + 1, [&](const Vec& pt) {
            if (canonicalize(k, act.apply(pt)) != pt) return true;
            if (point_rational_over_sublevel(k, x.field(), e, pt)) return true;
            rep.ambient.push_back(SigmaFixedPoint{e, pt});
            if (evaluate(x.f, pt, embp).is_zero()) rep.on_x.push_back(SigmaFixedPoint{e, pt});
            return true;
        });
    }
    return rep;
}

int monomial_space_dim(int nvars, int m) {
    if (m < 0) return 0;
    // C(m + nvars - 1, nvars - 1) by the additive recurrence, small numbers only
    std::vector<long long> row((size_t)m + 1, 1);  // one variable: one monomial per degree
    for (int v = 2; v <= nvars; ++v)
        for (int i = 1; i <= m; ++i) row[(size_t)i] += row[(size_t)i - 1];
    return (int)row[(size_t)m];
}

int ambient_cohomology_dim(int N, int m, int j) {
    if (j == 0) return monomial_space_dim(N + 1, m);
    if (j == N) return monomial_space_dim(N + 1, -m - N - 1);
    return 0;
}

std::vector<int> cohomology_dims(const Hypersurface& x) {
    // Long exact sequence of 0 -> O_P(-d) -> O_P -> O_X -> 0:
    //   h^i(X) = coker(H^i(P,O(-d)) -> H^i(P,O)) + ker(H^{i+1}(P,O(-d)) -> H^{i+1}(P,O)).
    // With d >= 1 every connecting-position map has zero source or zero
    // target (O(-d) has only top cohomology, O only bottom), so the ranks
    // add up directly.
    std::vector<int> h;
    for (int i = 0; i < x.N; ++i) {
        int coker = ambient_cohomology_dim(x.N, 0, i);      // maps into it are from 0
        int kerr = ambient_cohomology_dim(x.N, -x.d, i + 1);  // maps out of it go to 0
        h.push_back(coker + kerr);
    }
    return h;
}

}  // namespace frobwitt
