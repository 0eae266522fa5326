#include "frobwitt/field.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "plinalg.hpp"

namespace frobwitt {

namespace {

// ---- dense polynomial arithmetic over GF(p), used only for field setup ----

using PPoly = std::vector<std::int64_t>;  // coefficients, low degree first

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul_mod(const PPoly& a, const PPoly& b, const PPoly& g, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce modulo monic g
    int dg = (int)g.size() - 1;
    for (int i = (int)r.size() - 1; i >= dg; --i) {
        std::int64_t lead = r[i] % p;
        if (lead == 0) continue;
        for (int j = 0; j <= dg; ++j)
            r[i - dg + j] = ((r[i - dg + j] - lead * g[j]) % p + p) % p;
    }
    r.resize(dg);
    return r;
}

PPoly ppow_mod(PPoly base, unsigned long long e, const PPoly& g, std::int64_t p) {
    PPoly r = {1};
    while (e) {
        if (e & 1) r = pmul_mod(r, base, g, p);
        base = pmul_mod(base, base, g, p);
        e >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::int64_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        std::int64_t binv = detail::p_inv(b.back(), p);
        for (int i = (int)a.size() - 1; i >= (int)b.size() - 1; --i) {
            std::int64_t lead = a[i] % p;
            if (lead == 0) continue;
            std::int64_t fac = lead * binv % p;
            for (size_t j = 0; j < b.size(); ++j)
                a[i - (b.size() - 1) + j] = ((a[i - (b.size() - 1) + j] - fac * b[j]) % p + p) % p;
        }
        ptrim(a);
        std::swap(a, b);
    }
    return a;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Irreducibility of monic g of degree f over GF(p): x^(p^f) == x mod g and
// gcd(x^(p^(f/l)) - x, g) = 1 for every prime l dividing f.
bool is_irreducible(const PPoly& g, std::int64_t p) {
    int f = (int)g.size() - 1;
    if (f == 1) return true;
    // table of x^(p^j) mod g
    std::vector<PPoly> xq(f + 1);
    xq[0] = {0, 1};  // x
    for (int j = 1; j <= f; ++j) xq[j] = ppow_mod(xq[j - 1], (unsigned long long)p, g, p);
    {
        PPoly d = xq[f];
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        ptrim(d);
        if (!d.empty()) return false;  // x^(p^f) != x
    }
    for (int l = 2; l <= f; ++l) {
        if (f % l != 0 || !is_prime(l)) continue;
        PPoly d = xq[f / l];
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        ptrim(d);
        PPoly h = pgcd(d, g, p);
        if ((int)h.size() - 1 != 0) return false;
    }
    return true;
}

// Lexicographically smallest monic irreducible of degree f over GF(p),
// comparing coefficient vectors low-degree-first.
PPoly smallest_irreducible(std::int64_t p, int f) {
    PPoly g(f + 1, 0);
    g[f] = 1;
    // Odometer over (c_0, ..., c_{f-1}) in lexicographic order: the last
    // coordinate is the fastest digit, so the first hit is the lex minimum.
    // For f >= 2 every polynomial with c_0 = 0 is divisible by x, so the scan
    // starts at (1, 0, ..., 0); without this jump the odometer would have to
    // step through all p^{f-1} vectors of the c_0 = 0 block one at a time.
    std::vector<std::int64_t> c(f, 0);
    if (f >= 2) c[0] = 1;
    for (;;) {
        for (int i = 0; i < f; ++i) g[i] = c[i];
        // Cheap pre-filter: reject candidates with a root in GF(p) before the
        // Frobenius-chain test (for f >= 2 a root means a linear factor).
        bool has_root = false;
        if (f >= 2) {
            for (std::int64_t a = 0; a < p && !has_root; ++a) {
                std::int64_t v = 0;
                for (int i = f; i >= 0; --i) v = (v * a + g[i]) % p;
                has_root = (v == 0);
            }
        }
        if (!has_root && is_irreducible(g, p)) return g;
        int i = f - 1;
        while (i >= 0 && ++c[i] == p) c[i--] = 0;
        if (i < 0) break;
    }
    throw Error("no irreducible polynomial found (unreachable)");
}

}  // namespace

// ---- FieldCtx ----

FieldCtx::FieldCtx(std::int64_t p, int f) : p_(p), f_(f) {
    modulus_ = smallest_irreducible(p, f);
    // q = p^f, saturating to 0 on overflow
    unsigned long long q = 1;
    for (int i = 0; i < f; ++i) {
        if (q > ~0ull / (unsigned long long)p) {
            q = 0;
            break;
        }
        q *= (unsigned long long)p;
    }
    q_ = q;
    // Frobenius matrix: column j holds the coordinates of (t^j)^p.
    frob_mat_.assign((size_t)f * f, 0);
    PPoly tp = ppow_mod({0, 1}, (unsigned long long)p, modulus_, p);  // t^p
    PPoly col = {1};
    for (int j = 0; j < f; ++j) {
        for (size_t i = 0; i < col.size(); ++i) frob_mat_[i * f + j] = col[i];
        if (j + 1 < f) col = pmul_mod(col, tp, modulus_, p);
    }
}

const FieldCtx& FieldCtx::get(std::int64_t p, int f) {
    if (!is_prime(p)) throw NonPrimeError("p = " + std::to_string(p) + " is not prime");
    if (f < 1) throw DegreeError("extension degree must be >= 1, got " + std::to_string(f));
    static std::mutex mtx;
    static std::map<std::pair<std::int64_t, int>, std::unique_ptr<FieldCtx>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = registry[{p, f}];
    if (!slot) slot.reset(new FieldCtx(p, f));
    return *slot;
}

void FieldCtx::check(const FieldElem& x) const {
    if (x.field != this)
        throw ContextMismatchError("element does not belong to GF(" + std::to_string(p_) + "^" +
                                   std::to_string(f_) + ")");
}

FieldElem FieldCtx::zero() const { return FieldElem(this, std::vector<std::int64_t>(f_, 0)); }

FieldElem FieldCtx::one() const { return from_int(1); }

FieldElem FieldCtx::gen() const {
    std::vector<std::int64_t> c(f_, 0);
    if (f_ == 1) {
        // GF(p) with modulus t: the generator class is 0
        return FieldElem(this, std::move(c));
    }
    c[1] = 1;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::from_int(std::int64_t v) const {
    std::vector<std::int64_t> c(f_, 0);
    c[0] = ((v % p_) + p_) % p_;
    return FieldElem(this, std::move(c));
}

FieldElem FieldCtx::make(std::vector<std::int64_t> coords) const {
    coords.resize(f_, 0);
    for (auto& v : coords) v = ((v % p_) + p_) % p_;
    return FieldElem(this, std::move(coords));
}

FieldElem FieldCtx::add(const FieldElem& x, const FieldElem& y) const {
    check(x);
    check(y);
    FieldElem r(this, std::vector<std::int64_t>(f_));
    for (int i = 0; i < f_; ++i) r.c[i] = (x.c[i] + y.c[i]) % p_;
    return r;
}

FieldElem FieldCtx::sub(const FieldElem& x, const FieldElem& y) const {
    check(x);
    check(y);
    FieldElem r(this, std::vector<std::int64_t>(f_));
    for (int i = 0; i < f_; ++i) r.c[i] = ((x.c[i] - y.c[i]) % p_ + p_) % p_;
    return r;
}

FieldElem FieldCtx::neg(const FieldElem& x) const {
    check(x);
    FieldElem r(this, std::vector<std::int64_t>(f_));
    for (int i = 0; i < f_; ++i) r.c[i] = (p_ - x.c[i]) % p_;
    return r;
}

FieldElem FieldCtx::mul(const FieldElem& x, const FieldElem& y) const {
    check(x);
    check(y);
    if (f_ == 1) return FieldElem(this, {x.c[0] * y.c[0] % p_});
    PPoly r = pmul_mod(x.c, y.c, modulus_, p_);
    r.resize(f_, 0);
    return FieldElem(this, std::move(r));
}

FieldElem FieldCtx::inv(const FieldElem& x) const {
    check(x);
    if (x.is_zero()) throw ZeroVectorError("division by zero field element");
    if (f_ == 1) return FieldElem(this, {detail::p_inv(x.c[0], p_)});
    // extended Euclid in GF(p)[t], tracking s with s*x == r (mod modulus)
    PPoly r0 = modulus_, r1 = x.c;
    ptrim(r1);
    PPoly s0 = {}, s1 = {1};
    while (r1.size() > 1) {
        // divide r0 by r1: r0 = q*r1 + rem
        PPoly q(r0.size() - r1.size() + 1, 0);
        PPoly rem = r0;
        std::int64_t linv = detail::p_inv(r1.back(), p_);
        for (int i = (int)rem.size() - 1; i >= (int)r1.size() - 1; --i) {
            std::int64_t lead = rem[i] % p_;
            if (lead == 0) continue;
            std::int64_t fac = lead * linv % p_;
            size_t off = i - (r1.size() - 1);
            q[off] = fac;
            for (size_t j = 0; j < r1.size(); ++j)
                rem[off + j] = ((rem[off + j] - fac * r1[j]) % p_ + p_) % p_;
        }
        ptrim(rem);
        if (rem.empty())
            throw Error("gcd(x, modulus) has positive degree: modulus not irreducible?");
        // s2 = s0 - q*s1
        PPoly qs1(q.size() + s1.size() - 1, 0);
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) qs1[i + j] = (qs1[i + j] + q[i] * s1[j]) % p_;
        }
        PPoly s2(std::max(s0.size(), qs1.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] = ((s2[i] - qs1[i]) % p_ + p_) % p_;
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant: inverse = s1 / r1[0]
    std::int64_t cinv = detail::p_inv(((r1[0] % p_) + p_) % p_, p_);
    PPoly res(f_, 0);
    for (size_t i = 0; i < s1.size() && i < (size_t)f_; ++i) res[i] = ((s1[i] * cinv) % p_ + p_) % p_;
    return FieldElem(this, std::move(res));
}

FieldElem FieldCtx::div(const FieldElem& x, const FieldElem& y) const { return mul(x, inv(y)); }

FieldElem FieldCtx::pow(const FieldElem& x, unsigned long long e) const {
    check(x);
    FieldElem r = one();
    FieldElem b = x;
    while (e) {
        if (e & 1) r = mul(r, b);
        b = mul(b, b);
        e >>= 1;
    }
    return r;
}

FieldElem FieldCtx::frobenius(const FieldElem& x, int i) const {
    check(x);
    FieldElem r = x;
    i %= f_;  // x^(p^f) = x
    if (i < 0) i += f_;
    for (int k = 0; k < i; ++k) {
        // apply the precomputed matrix of x -> x^p
        std::vector<std::int64_t> nc(f_, 0);
        for (int row = 0; row < f_; ++row) {
            std::int64_t acc = 0;
            for (int col = 0; col < f_; ++col) acc += frob_mat_[(size_t)row * f_ + col] * r.c[col];
            nc[row] = acc % p_;
        }
        r.c = std::move(nc);
    }
    return r;
}

bool FieldCtx::in_prime_field(const FieldElem& x) const {
    check(x);
    for (int i = 1; i < f_; ++i)
        if (x.c[i] != 0) return false;
    return true;
}

std::int64_t FieldCtx::to_int(const FieldElem& x) const {
    if (!in_prime_field(x)) throw Error("element not in the prime subfield: " + x.str());
    return x.c[0];
}

bool FieldCtx::next_element(FieldElem& x) const {
    check(x);
    for (int i = 0; i < f_; ++i) {
        if (++x.c[i] < p_) return true;
        x.c[i] = 0;
    }
    return false;
}

bool FieldElem::is_zero() const {
    for (auto v : c)
        if (v != 0) return false;
    return true;
}

std::string FieldElem::str() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(c[i]);
        } else {
            if (c[i] != 1) s += std::to_string(c[i]) + "*";
            s += "t";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

// ---- TowerEmbedding ----

TowerEmbedding TowerEmbedding::make(const FieldCtx& sub, const FieldCtx& sup) {
    if (sub.p() != sup.p())
        throw ContextMismatchError("tower embedding requires equal characteristic");
    if (sup.f() % sub.f() != 0)
        throw ContextMismatchError("GF(p^" + std::to_string(sub.f()) + ") does not embed in GF(p^" +
                                   std::to_string(sup.f()) + ")");
    TowerEmbedding emb;
    emb.sub = &sub;
    emb.sup = &sup;
    if (&sub == &sup) {
        emb.gen_image = sup.gen();
    } else {
        // The copy of GF(p^fs) inside sup is the kernel of x -> x^(p^fs) - x,
        // a GF(p)-linear map. Enumerate that small kernel and pick the
        // lexicographically smallest root of the subfield modulus.
        std::int64_t p = sup.p();
        int fs = sub.f(), n = sup.f();
        // matrix of frobenius^fs on sup
        detail::PMat frob((size_t)n, detail::PRow(n, 0));
        for (int j = 0; j < n; ++j) {
            std::vector<std::int64_t> e(n, 0);
            e[j] = 1;
            FieldElem x = sup.make(std::move(e));
            x = sup.frobenius(x, fs);
            for (int i = 0; i < n; ++i) frob[i][j] = x.c[i];
        }
        for (int i = 0; i < n; ++i) frob[i][i] = ((frob[i][i] - 1) % p + p) % p;
        detail::PMat ker = detail::p_kernel(frob, p);
        if ((int)ker.size() != fs) throw Error("subfield has wrong dimension (unreachable)");
        // enumerate GF(p)-combinations of the kernel basis
        std::vector<FieldElem> roots;
        std::vector<std::int64_t> digits(fs, 0);
        for (;;) {
            std::vector<std::int64_t> coords(n, 0);
            for (int b = 0; b < fs; ++b)
                for (int i = 0; i < n; ++i) coords[i] = (coords[i] + digits[b] * ker[b][i]) % p;
            FieldElem cand = sup.make(std::move(coords));
            // evaluate the subfield modulus (prime-field coefficients) at cand
            FieldElem acc = sup.zero();
            FieldElem pw = sup.one();
            for (int d = 0; d <= fs; ++d) {
                acc = acc + sup.from_int(sub.modulus()[d]) * pw;
                if (d < fs) pw = pw * cand;
            }
            if (acc.is_zero()) roots.push_back(cand);
            int i = fs - 1;
            while (i >= 0 && ++digits[i] == p) digits[i--] = 0;
            if (i < 0) break;
        }
        if (roots.empty()) throw Error("modulus has no root in the extension (unreachable)");
        emb.gen_image = *std::min_element(roots.begin(), roots.end());
    }
    emb.gen_powers.clear();
    FieldElem pw = sup.one();
    for (int i = 0; i < sub.f(); ++i) {
        emb.gen_powers.push_back(pw);
        if (i + 1 < sub.f()) pw = pw * emb.gen_image;
    }
    return emb;
}

FieldElem TowerEmbedding::embed(const FieldElem& x) const {
    sub->check(x);
    FieldElem r = sup->zero();
    for (int i = 0; i < sub->f(); ++i) {
        if (x.c[i] == 0) continue;
        r = r + sup->from_int(x.c[i]) * gen_powers[i];
    }
    return r;
}

}  // namespace frobwitt
