#include "frobwitt/hassewitt.hpp"

#include <sstream>

#include "frobwitt/errors.hpp"
#include "frobwitt/semilinear.hpp"

namespace frobwitt {

namespace {

void positive_compositions(int d, int parts, ExpVec& prefix, std::vector<ExpVec>& out) {
    if (parts == 1) {
        if (d >= 1) {
            prefix.push_back((std::uint32_t)d);
            out.push_back(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (int first = 1; first <= d - (parts - 1); ++first) {
        prefix.push_back((std::uint32_t)first);
        positive_compositions(d - first, parts - 1, prefix, out);
        prefix.pop_back();
    }
}

// Plain determinant by elimination, tracking row swaps.
FieldElem det(Mat m) {
    const FieldCtx& k = *m.field;
    if (m.rows != m.cols) throw Error("determinant of non-square matrix");
    FieldElem d = k.one();
    for (int col = 0; col < m.cols; ++col) {
        int sel = -1;
        for (int i = col; i < m.rows; ++i)
            if (!m.at(i, col).is_zero()) { sel = i; break; }
        if (sel < 0) return k.zero();
        if (sel != col) {
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(col, j), m.at(sel, j));
            d = k.neg(d);
        }
        d = d * m.at(col, col);
        FieldElem inv = k.inv(m.at(col, col));
        for (int i = col + 1; i < m.rows; ++i) {
            if (m.at(i, col).is_zero()) continue;
            FieldElem fac = m.at(i, col) * inv;
            for (int j = col; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - fac * m.at(col, j);
        }
    }
    return d;
}

// Sum of the k x k principal minors of a.
FieldElem principal_minor_sum(const Mat& a, int k) {
    const FieldCtx& kf = *a.field;
    int n = a.rows;
    std::vector<int> idx((size_t)k);
    for (int i = 0; i < k; ++i) idx[(size_t)i] = i;
    FieldElem sum = kf.zero();
    while (true) {
        Mat sub(kf, k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub.at(i, j) = a.at(idx[(size_t)i], idx[(size_t)j]);
        sum = sum + det(std::move(sub));
        // next k-subset of {0..n-1} in lex order
        int pos = k - 1;
        while (pos >= 0 && idx[(size_t)pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[(size_t)pos];
        for (int i = pos + 1; i < k; ++i) idx[(size_t)i] = idx[(size_t)i - 1] + 1;
    }
    return sum;
}

}  // namespace

HWBasis hw_basis(int d, int N) {
    if (d < 1) throw InputError("degree must be at least 1");
    HWBasis b;
    b.d = d;
    b.N = N;
    ExpVec prefix;
    positive_compositions(d, N + 1, prefix, b.monomials);
    return b;
}

HWMatrix hw_matrix(const Hypersurface& x) {
    const FieldCtx& k = x.field();
    std::int64_t p = k.p();
    HWMatrix hw;
    hw.basis = hw_basis(x.d, x.N);
    int r = (int)hw.basis.monomials.size();
    MultiPoly fp1 = poly_pow(x.f, (unsigned long long)(p - 1));
    hw.a_p = Mat(k, r, r);
    ExpVec gamma((size_t)x.N + 1, 0);
    for (int u = 0; u < r; ++u)
        for (int w = 0; w < r; ++w) {
            const ExpVec& eu = hw.basis.monomials[(size_t)u];
            const ExpVec& ew = hw.basis.monomials[(size_t)w];
            bool ok = true;
            for (size_t i = 0; i < gamma.size(); ++i) {
                std::int64_t g = p * (std::int64_t)ew[i] - (std::int64_t)eu[i];
                if (g < 0) { ok = false; break; }
                gamma[i] = (std::uint32_t)g;
            }
            if (ok) hw.a_p.at(u, w) = fp1.coefficient(gamma);
        }
    if (k.f() == 1) {
        hw.a_q = hw.a_p;
    } else {
        SemilinearOp op = SemilinearOp::make(k, FieldCtx::get(p, 1), hw.a_p);
        hw.a_q = twisted_power(op, k.f());
    }
    return hw;
}

UniPoly uni_one(const FieldCtx& k) { return UniPoly{k.one()}; }

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    const FieldCtx& k = *a[0].field;
    UniPoly r(a.size() + b.size() - 1, k.zero());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
    while (r.size() > 1 && r.back().is_zero()) r.pop_back();
    return r;
}

FieldElem uni_eval(const UniPoly& a, const FieldElem& x) {
    const FieldCtx& k = *x.field;
    FieldElem acc = k.zero();
    for (size_t i = a.size(); i-- > 0;) acc = acc * x + a[i];
    return acc;
}

std::string uni_str(const UniPoly& a) {
    if (a.empty()) return "0";
    std::ostringstream out;
    bool printed = false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero() && !(a.size() == 1 && i == 0)) continue;
        if (printed) out << " + ";
        printed = true;
        bool unit = (a[i] == a[i].field->one());
        if (i == 0 || !unit) {
            bool needs_parens = a[i].field->f() > 1 && a[i].str().find('+') != std::string::npos;
            if (needs_parens) out << "(" << a[i].str() << ")";
            else out << a[i].str();
            if (i > 0) out << "*";
        }
        if (i == 1) out << "T";
        else if (i > 1) out << "T^" << i;
    }
    if (!printed) return "0";
    return out.str();
}

UniPoly det_one_minus_t(const Mat& a) {
    if (a.rows != a.cols) throw Error("determinant of non-square matrix");
    const FieldCtx& k = *a.field;
    if (a.rows > 12) throw Error("matrix too large for minor expansion (cap 12)");
    UniPoly c((size_t)a.rows + 1, k.zero());
    c[0] = k.one();
    // det(1 - AT) = sum_k (-1)^k e_k(A) T^k, e_k = sum of principal k-minors
    FieldElem sign = k.one();
    for (int deg = 1; deg <= a.rows; ++deg) {
        sign = k.neg(sign);
        c[(size_t)deg] = sign * principal_minor_sum(a, deg);
    }
    while (c.size() > 1 && c.back().is_zero()) c.pop_back();
    return c;
}

ZetaModP zeta_mod_p(const Hypersurface& x) {
    if (x.N < 2)
        throw UnsupportedCohomologyProfileError(
            "zeta factorization needs ambient dimension at least 2");
    std::vector<int> h = cohomology_dims(x);
    if (h[0] != 1)
        throw UnsupportedCohomologyProfileError("structure sheaf has h^0 != 1");
    for (int i = 1; i + 1 < (int)h.size(); ++i)
        if (h[(size_t)i] != 0)
            throw UnsupportedCohomologyProfileError("unexpected middle cohomology");
    const FieldCtx& k = x.field();
    HWMatrix hw = hw_matrix(x);
    UniPoly one_minus_t{k.one(), k.neg(k.one())};
    UniPoly top = det_one_minus_t(hw.a_q);
    ZetaModP z;
    z.zeta0 = one_minus_t;  // the H^0 factor: F acts trivially there
    z.zeta1 = uni_one(k);
    int n = x.N - 1;
    if (n % 2 == 0) z.zeta0 = uni_mul(z.zeta0, top);
    else z.zeta1 = uni_mul(z.zeta1, top);
    return z;
}

KatzReport katz_check(const Hypersurface& x, int e_max, unsigned long long budget) {
    if (e_max < 1) throw InputError("extension bound must be at least 1");
    const FieldCtx& k = x.field();
    std::int64_t p = k.p();
    HWMatrix hw = hw_matrix(x);
    int n = x.N - 1;
    KatzReport rep;
    rep.all_pass = true;
    Mat m = hw.a_q;  // M_e, twisted with twist q (entries in GF(q) so plain powers)
    for (int e = 1; e <= e_max; ++e) {
        KatzRow row;
        row.e = e;
        row.n_e = count_points(x, e, budget).count;
        row.n_e_mod_p = (std::int64_t)(row.n_e % (unsigned long long)p);
        FieldElem tr = k.zero();
        for (int i = 0; i < m.rows; ++i) tr = tr + m.at(i, i);
        row.trace_in_prime_field = k.in_prime_field(tr);
        if (row.trace_in_prime_field) {
            std::int64_t t = k.to_int(tr);
            std::int64_t side = (n % 2 == 0) ? (1 + t) : (1 - t + p);
            row.trace_side = side % p;
            row.pass = (row.trace_side == row.n_e_mod_p);
        }
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
        if (e < e_max) m = mat_mul(hw.a_q, frobenius_entrywise(m, k.f()));
    }
    return rep;
}

}  // namespace frobwitt
