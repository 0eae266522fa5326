#include "frobwitt/semilinear.hpp"

#include <cassert>

#include "frobwitt/errors.hpp"
#include "plinalg.hpp"

namespace frobwitt {

namespace {

using detail::PMat;
using detail::PRow;

// GF(p)-matrix (f x f, row-major flattened into PMat rows) of multiplication
// by alpha on the power basis of K.
PMat mult_matrix(const FieldCtx& k, const FieldElem& alpha) {
    int f = k.f();
    PMat m((size_t)f, PRow((size_t)f, 0));
    FieldElem col = alpha;  // alpha * t^j, incrementally
    for (int j = 0; j < f; ++j) {
        for (int i = 0; i < f; ++i) m[(size_t)i][(size_t)j] = col.c[(size_t)i];
        if (j + 1 < f) col = col * k.gen();
    }
    return m;
}

// GF(p)-matrix of x -> x^(p^i) on the power basis of K.
PMat frobenius_power_matrix(const FieldCtx& k, int i) {
    int f = k.f();
    PMat m((size_t)f, PRow((size_t)f, 0));
    FieldElem tj = k.one();
    for (int j = 0; j < f; ++j) {
        FieldElem img = k.frobenius(tj, i);
        for (int r = 0; r < f; ++r) m[(size_t)r][(size_t)j] = img.c[(size_t)r];
        if (j + 1 < f) tj = tj * k.gen();
    }
    return m;
}

PMat pmat_mul(const PMat& a, const PMat& b, std::int64_t p) {
    size_t n = a.size(), m = b[0].size(), l = b.size();
    PMat r(n, PRow(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < l; ++k) {
            std::int64_t x = a[i][k];
            if (!x) continue;
            for (size_t j = 0; j < m; ++j) r[i][j] = (r[i][j] + x * b[k][j]) % p;
        }
    return r;
}

// Incremental GF(p) row space for span-membership queries.
struct SpanTracker {
    std::int64_t p;
    PMat rows;               // echelonized: each row has a leading 1
    std::vector<int> leads;  // leading column of each row

    explicit SpanTracker(std::int64_t p_) : p(p_) {}

    // Reduces r in place against the stored rows; returns the column of the
    // first surviving nonzero entry, or -1 if r reduced to zero.
    int reduce(PRow& r) const {
        for (size_t i = 0; i < rows.size(); ++i) {
            std::int64_t c = r[(size_t)leads[i]];
            if (!c) continue;
            for (size_t j = 0; j < r.size(); ++j)
                r[j] = ((r[j] - c * rows[i][j]) % p + p) % p;
        }
        for (size_t j = 0; j < r.size(); ++j)
            if (r[j]) return (int)j;
        return -1;
    }

    bool contains(PRow r) const { return reduce(r) < 0; }

    // Inserts r if it is outside the current span; returns true if inserted.
    bool insert(PRow r) {
        int lead = reduce(r);
        if (lead < 0) return false;
        std::int64_t inv = detail::p_inv(r[(size_t)lead], p);
        for (auto& x : r) x = x * inv % p;
        rows.push_back(std::move(r));
        leads.push_back(lead);
        return true;
    }
};

PRow flatten(const Vec& v) {
    PRow r;
    for (const auto& x : v) r.insert(r.end(), x.c.begin(), x.c.end());
    return r;
}

}  // namespace

SemilinearOp SemilinearOp::make(const FieldCtx& ctx, const FieldCtx& twist, Mat a) {
    if (twist.p() != ctx.p() || ctx.f() % twist.f() != 0)
        throw ContextMismatchError("twist field is not a subfield of the coefficient field");
    if (a.field != &ctx) throw ContextMismatchError("matrix entries not in the stated field");
    if (a.rows != a.cols) throw InputError("semilinear operator matrix must be square");
    return SemilinearOp{&ctx, &twist, std::move(a)};
}

Vec SemilinearOp::apply_op(const Vec& v) const {
    if ((int)v.size() != a.rows) throw InputError("vector length mismatch");
    const FieldCtx* k = v.empty() ? a.field : v[0].field;
    Vec tw;
    tw.reserve(v.size());
    for (const auto& x : v) tw.push_back(k->frobenius(x, twist->f()));
    if (k == a.field) return mat_apply(a, tw);
    // operator extended along an embedding: caller guarantees entries embed
    Mat ext = extend_to(*this, *k).a;
    return mat_apply(ext, tw);
}

SemilinearOp extend_to(const SemilinearOp& op, const FieldCtx& sup) {
    if (&sup == op.ctx) return op;
    TowerEmbedding emb = TowerEmbedding::make(*op.ctx, sup);
    Mat ext(sup, op.a.rows, op.a.cols);
    for (int i = 0; i < op.a.rows; ++i)
        for (int j = 0; j < op.a.cols; ++j) ext.at(i, j) = emb.embed(op.a.at(i, j));
    return SemilinearOp{&sup, op.twist, std::move(ext)};
}

Mat twisted_power(const SemilinearOp& op, int e) {
    if (e < 1) throw InputError("twisted power needs e >= 1");
    Mat m = op.a;
    for (int i = 1; i < e; ++i)
        m = mat_mul(op.a, frobenius_entrywise(m, op.twist->f()));
    return m;
}

FittingDecomp fitting_decomposition(const SemilinearOp& op) {
    const FieldCtx& k = *op.ctx;
    int r = op.dim();
    FittingDecomp d;
    d.stable_matrix = Mat(k, 0, 0);
    if (r == 0) return d;
    Mat mr = twisted_power(op, r);
    d.stable_basis = column_space_basis(mr);
    // ker(phi^r) = ker(M_r composed with the q^r twist) = twist-preimage of
    // ker(M_r); untwist each kernel vector entrywise by q^{-r}.
    int back = op.twist->f() * r % k.f();
    int fwd = back == 0 ? 0 : k.f() - back;
    for (Vec v : kernel_basis(mr)) {
        for (auto& x : v) x = k.frobenius(x, fwd);
        d.nilpotent_basis.push_back(std::move(v));
    }
    // nilpotency index: iterate phi on the nilpotent basis until it dies
    std::vector<Vec> cur = d.nilpotent_basis;
    while (!cur.empty()) {
        std::vector<Vec> next;
        for (const Vec& v : cur) {
            Vec w = op.apply_op(v);
            bool zero = true;
            for (const auto& x : w)
                if (!x.is_zero()) { zero = false; break; }
            if (!zero) next.push_back(std::move(w));
        }
        ++d.nilpotency_index;
        cur = std::move(next);
        if (d.nilpotency_index > r) throw DecompositionMismatchError("nilpotency index exceeded rank");
    }
    if (d.nilpotent_basis.empty()) d.nilpotency_index = 0;
    // matrix of phi on V_s: solve C * B_j = phi(c_j) column by column
    int t = (int)d.stable_basis.size();
    if (t > 0) {
        Mat c = Mat::from_columns(k, d.stable_basis);
        Mat b(k, t, t);
        for (int j = 0; j < t; ++j) {
            LinearSolution sol = solve_linear_system(c, op.apply_op(d.stable_basis[(size_t)j]));
            if (!sol.consistent)
                throw DecompositionMismatchError("stable part is not invariant");
            for (int i = 0; i < t; ++i) b.at(i, j) = sol.particular[(size_t)i];
        }
        d.stable_matrix = std::move(b);
    }
    return d;
}

namespace {

// GF(q)-basis extraction from a GF(p)-spanning set of a GF(q)-subspace: keep a
// vector iff it is outside the GF(q)-span of those already kept.
std::vector<Vec> gfq_basis(const FieldCtx& big, const FieldCtx& twist,
                           const std::vector<Vec>& vectors) {
    TowerEmbedding embq = TowerEmbedding::make(twist, big);
    SpanTracker span(big.p());
    std::vector<Vec> basis;
    for (const Vec& v : vectors) {
        if (span.contains(flatten(v))) continue;
        basis.push_back(v);
        for (const FieldElem& beta : embq.gen_powers) {
            Vec w;
            w.reserve(v.size());
            for (const auto& x : v) w.push_back(beta * x);
            span.insert(flatten(w));
        }
    }
    return basis;
}

// Fixed vectors of x -> A x^[q] - computed as the GF(p)-kernel of the
// linearized map minus identity, with coordinates ordered
// (vector coordinate, field basis coordinate) row-major.
std::vector<Vec> fixed_vectors_at(const SemilinearOp& big_op) {
    const FieldCtx& k = *big_op.ctx;
    int r = big_op.dim();
    int f = k.f();
    int dim = r * f;
    PMat frobq = frobenius_power_matrix(k, big_op.twist->f());
    PMat l((size_t)dim, PRow((size_t)dim, 0));
    for (int i = 0; i < r; ++i)
        for (int i2 = 0; i2 < r; ++i2) {
            const FieldElem& a = big_op.a.at(i, i2);
            if (a.is_zero()) continue;
            PMat block = pmat_mul(mult_matrix(k, a), frobq, k.p());
            for (int x = 0; x < f; ++x)
                for (int y = 0; y < f; ++y)
                    l[(size_t)(i * f + x)][(size_t)(i2 * f + y)] = block[(size_t)x][(size_t)y];
        }
    for (int i = 0; i < dim; ++i) l[(size_t)i][(size_t)i] = (l[(size_t)i][(size_t)i] - 1 + k.p()) % k.p();
    PMat ker = detail::p_kernel(l, k.p());
    std::vector<Vec> out;
    for (const PRow& kv : ker) {
        Vec v;
        v.reserve((size_t)r);
        for (int i = 0; i < r; ++i) {
            std::vector<std::int64_t> coords(kv.begin() + i * f, kv.begin() + (i + 1) * f);
            v.push_back(k.make(std::move(coords)));
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

FixedSpaceResult fixed_space(const SemilinearOp& op, int m_cap) {
    if (m_cap < 1) throw InputError("extension cap must be at least 1");
    const FieldCtx& k = *op.ctx;
    int ft = op.twist->f();
    int m1 = k.f() / ft;  // smallest multiple m with ctx inside GF(q^m)
    FittingDecomp fit = fitting_decomposition(op);
    int t = (int)fit.stable_basis.size();

    FixedSpaceResult res;
    if (t == 0) {
        res.field_used = &k;
        res.extension_multiple = m1;
        return res;
    }
    // Full fixed space exists over GF(q^m) iff the m-fold twisted power of
    // the stable part is the identity (Hilbert 90 for GL_t); the test is
    // basis-independent exactly at multiples of m1.
    SemilinearOp stable = SemilinearOp{&k, op.twist, fit.stable_matrix};
    int m0 = -1;
    int last = m1;
    Mat tw = stable.a;  // M_e at the top of iteration e
    for (int e = 1; e <= m_cap; ++e) {
        if (e % m1 == 0) {
            last = e;
            if (tw.is_identity()) { m0 = e; break; }
        }
        if (e < m_cap) tw = mat_mul(stable.a, frobenius_entrywise(tw, ft));
    }
    int m_used = (m0 > 0) ? m0 : last;
    const FieldCtx& big = FieldCtx::get(k.p(), ft * m_used);
    SemilinearOp big_op = extend_to(op, big);
    std::vector<Vec> fixed = fixed_vectors_at(big_op);
    res.basis = gfq_basis(big, *op.twist, fixed);
    res.field_used = &big;
    res.extension_multiple = m_used;
    res.cap_exceeded = (m0 < 0);
    if (m0 > 0 && (int)res.basis.size() != t)
        throw DecompositionMismatchError("fixed space dimension disagrees with stable rank");
    return res;
}

FittingDecomp full_decomposition(const SemilinearOp& op, int m_cap) {
    FittingDecomp d = fitting_decomposition(op);
    FixedSpaceResult fs = fixed_space(op, m_cap);
    d.fixed_basis = fs.basis;
    d.extension_degree_used = fs.extension_multiple;
    d.cap_exceeded = fs.cap_exceeded;
    return d;
}

FieldElem rank_one_eigenvalue(const SemilinearOp& op, const Vec& v) {
    int pivot = -1;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) { pivot = (int)i; break; }
    if (pivot < 0) throw ZeroVectorError("eigenvalue of the zero vector");
    Vec w = op.apply_op(v);
    FieldElem lam = w[(size_t)pivot] / v[(size_t)pivot];
    for (size_t i = 0; i < v.size(); ++i)
        if (w[i] != lam * v[i])
            throw NotInvariantError("vector does not span an invariant line");
    return lam;
}

}  // namespace frobwitt
