#include "frobwitt/poly.hpp"

#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "frobwitt/errors.hpp"

namespace frobwitt {

namespace {

void check_exponent(std::uint64_t e) {
    if (e >= kMaxExponent)
        throw DegreeError("exponent " + std::to_string(e) + " exceeds the per-variable cap");
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
    if (a.field != b.field) throw ContextMismatchError("polynomials over different fields");
    if (a.nvars != b.nvars)
        throw ContextMismatchError("polynomials in different numbers of variables");
}

}  // namespace

MultiPoly MultiPoly::zero(const FieldCtx& k, int nvars) { return MultiPoly(k, nvars); }

MultiPoly MultiPoly::constant(const FieldCtx& k, int nvars, const FieldElem& c) {
    MultiPoly r(k, nvars);
    if (!c.is_zero()) r.terms.emplace(ExpVec((size_t)nvars, 0), c);
    return r;
}

MultiPoly MultiPoly::variable(const FieldCtx& k, int nvars, int i) {
    if (i < 0 || i >= nvars) throw InputError("variable index out of range");
    MultiPoly r(k, nvars);
    ExpVec e((size_t)nvars, 0);
    e[(size_t)i] = 1;
    r.terms.emplace(std::move(e), k.one());
    return r;
}

MultiPoly MultiPoly::monomial(const FieldCtx& k, const ExpVec& e, const FieldElem& c) {
    MultiPoly r(k, (int)e.size());
    for (auto x : e) check_exponent(x);
    if (!c.is_zero()) r.terms.emplace(e, c);
    return r;
}

void MultiPoly::add_term(const ExpVec& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms.find(e);
    if (it == terms.end()) {
        terms.emplace(e, c);
        return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms.erase(it);
}

FieldElem MultiPoly::coefficient(const ExpVec& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? field->zero() : it->second;
}

int MultiPoly::total_degree() const {
    int d = 0;
    for (const auto& [e, c] : terms) {
        int s = (int)std::accumulate(e.begin(), e.end(), std::uint64_t{0});
        if (s > d) d = s;
    }
    return d;
}

bool MultiPoly::is_homogeneous(int d) const {
    for (const auto& [e, c] : terms) {
        auto s = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
        if (s != (std::uint64_t)d) return false;
    }
    return true;
}

std::string MultiPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        if (!first) out << " + ";
        first = false;
        bool is_const = true;
        for (auto x : e)
            if (x) is_const = false;
        bool unit = (c == field->one());
        if (!unit || is_const) out << c.str();
        bool lead = unit && !is_const;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (!lead) out << "*";
            lead = false;
            out << "X" << i;
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

MultiPoly poly_add(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, c);
    return r;
}

MultiPoly poly_sub(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms) r.add_term(e, a.field->neg(c));
    return r;
}

MultiPoly poly_neg(const MultiPoly& a) {
    MultiPoly r = a;
    for (auto& [e, c] : r.terms) c = a.field->neg(c);
    return r;
}

MultiPoly poly_scale(const FieldElem& c, const MultiPoly& a) {
    MultiPoly r(*a.field, a.nvars);
    if (c.is_zero()) return r;
    for (const auto& [e, x] : a.terms) r.terms.emplace(e, c * x);
    return r;
}

MultiPoly poly_mul(const MultiPoly& a, const MultiPoly& b) {
    check_compatible(a, b);
    MultiPoly r(*a.field, a.nvars);
    ExpVec e((size_t)a.nvars, 0);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (size_t i = 0; i < e.size(); ++i) {
                std::uint64_t s = (std::uint64_t)ea[i] + eb[i];
                check_exponent(s);
                e[i] = (std::uint32_t)s;
            }
            r.add_term(e, ca * cb);
        }
    return r;
}

namespace {

// a^{p^j} in characteristic p: scale every exponent by p^j and push every
// coefficient through j steps of Frobenius. No products are formed.
MultiPoly frobenius_power(const MultiPoly& a, std::int64_t p, int j) {
    std::uint64_t scale = 1;
    for (int i = 0; i < j; ++i) {
        scale *= (std::uint64_t)p;
        if (scale >= kMaxExponent) check_exponent(scale);  // throws
    }
    MultiPoly r(*a.field, a.nvars);
    ExpVec e((size_t)a.nvars, 0);
    for (const auto& [ea, ca] : a.terms) {
        for (size_t i = 0; i < e.size(); ++i) {
            std::uint64_t s = ea[i] * scale;
            check_exponent(s);
            e[i] = (std::uint32_t)s;
        }
        r.terms.emplace(e, a.field->frobenius(ca, j));
    }
    return r;
}

MultiPoly small_pow(const MultiPoly& a, std::uint64_t e) {
    MultiPoly r = MultiPoly::constant(*a.field, a.nvars, a.field->one());
    MultiPoly base = a;
    while (e) {
        if (e & 1) r = poly_mul(r, base);
        e >>= 1;
        if (e) base = poly_mul(base, base);
    }
    return r;
}

}  // namespace

MultiPoly poly_pow(const MultiPoly& a, unsigned long long e) {
    const FieldCtx& k = *a.field;
    if (e == 0) return MultiPoly::constant(k, a.nvars, k.one());
    std::uint64_t p = (std::uint64_t)k.p();
    // base-p digits of e, least significant first
    std::vector<std::uint64_t> digits;
    for (std::uint64_t m = e; m; m /= p) digits.push_back(m % p);
    MultiPoly r = MultiPoly::constant(k, a.nvars, k.one());
    for (int j = 0; j < (int)digits.size(); ++j) {
        if (!digits[j]) continue;
        r = poly_mul(r, small_pow(frobenius_power(a, k.p(), j), digits[j]));
    }
    return r;
}

FieldElem coeff(const MultiPoly& a, const ExpVec& e) {
    if ((int)e.size() != a.nvars) throw InputError("exponent vector length mismatch");
    return a.coefficient(e);
}

MultiPoly partial_derivative(const MultiPoly& a, int var) {
    if (var < 0 || var >= a.nvars) throw InputError("variable index out of range");
    const FieldCtx& k = *a.field;
    MultiPoly r(k, a.nvars);
    for (const auto& [e, c] : a.terms) {
        if (!e[(size_t)var]) continue;
        FieldElem d = c * k.from_int(e[(size_t)var]);
        if (d.is_zero()) continue;
        ExpVec e2 = e;
        --e2[(size_t)var];
        r.add_term(e2, d);
    }
    return r;
}

FieldElem evaluate(const MultiPoly& a, const std::vector<FieldElem>& point,
                   const TowerEmbedding* emb) {
    if ((int)point.size() != a.nvars) throw InputError("evaluation point length mismatch");
    const FieldCtx* target = a.field;
    if (emb) {
        if (emb->sub != a.field)
            throw ContextMismatchError("embedding does not start at the coefficient field");
        target = emb->sup;
    }
    for (const auto& x : point)
        if (x.field != target)
            throw ContextMismatchError("evaluation point in the wrong field");
    FieldElem acc = target->zero();
    for (const auto& [e, c] : a.terms) {
        FieldElem t = emb ? emb->embed(c) : c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            if (point[i].is_zero()) {
                t = target->zero();
                break;
            }
            t = t * target->pow(point[i], e[i]);
        }
        acc = acc + t;
    }
    return acc;
}

MultiPoly build_fp(std::int64_t p) {
    if (p == 2) throw BadPrimeError("the cyclic family is defined for odd primes only");
    const FieldCtx& k = FieldCtx::get(p, 1);  // validates primality
    int n = (int)p;
    MultiPoly r(k, n);
    r.terms.emplace(ExpVec((size_t)n, 1), k.one());  // X0...X_{p-1}
    for (int i = 0; i < n; ++i) {
        ExpVec e((size_t)n, 0);
        e[(size_t)i] = (std::uint32_t)(p - 1);
        e[(size_t)((i + 1) % n)] += 1;
        r.add_term(e, k.one());
    }
    return r;
}

MultiPoly rotate_vars(const MultiPoly& a, int shift) {
    int n = a.nvars;
    if (n == 0) return a;
    shift = ((shift % n) + n) % n;
    if (shift == 0) return a;
    MultiPoly r(*a.field, n);
    ExpVec e2((size_t)n, 0);
    for (const auto& [e, c] : a.terms) {
        for (int i = 0; i < n; ++i) e2[(size_t)((i + shift) % n)] = e[(size_t)i];
        r.terms.emplace(e2, c);
    }
    return r;
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    explicit PolyLexer(const std::string& text) : s(text) { skip(); }
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    char take() {
        char c = s[i++];
        skip();
        return c;
    }
    std::int64_t integer() {
        size_t start = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == start) throw ParseInputError("expected a number at position " + std::to_string(i));
        std::int64_t v = 0;
        for (size_t j = start; j < i; ++j) {
            v = v * 10 + (s[j] - '0');
            if (v > (std::int64_t)1 << 40)
                throw ParseInputError("numeric literal too large");
        }
        skip();
        return v;
    }
};

}  // namespace

MultiPoly parse_poly(const FieldCtx& k, const std::string& text, int nvars) {
    PolyLexer lx(text);
    struct RawTerm {
        std::int64_t coeff;
        std::map<int, std::uint64_t> exps;
    };
    std::vector<RawTerm> raw;
    int max_index = -1;
    bool first = true;
    while (!lx.done()) {
        std::int64_t sign = 1;
        if (lx.peek() == '+' || lx.peek() == '-') {
            if (lx.take() == '-') sign = -1;
        } else if (!first) {
            throw ParseInputError("expected '+' or '-' between terms");
        }
        first = false;
        if (lx.done()) throw ParseInputError("dangling sign at end of input");
        RawTerm t{sign, {}};
        bool saw_factor = false;
        while (true) {
            if (!lx.done() && std::isdigit((unsigned char)lx.peek())) {
                t.coeff *= lx.integer();
                saw_factor = true;
            } else if (!lx.done() && (lx.peek() == 'X' || lx.peek() == 'x')) {
                lx.take();
                int idx = (int)lx.integer();
                std::uint64_t e = 1;
                if (!lx.done() && lx.peek() == '^') {
                    lx.take();
                    e = (std::uint64_t)lx.integer();
                }
                check_exponent(t.exps[idx] + e);
                t.exps[idx] += e;
                if (idx > max_index) max_index = idx;
                saw_factor = true;
            } else {
                break;
            }
            if (!lx.done() && lx.peek() == '*') {
                lx.take();
                if (lx.done()) throw ParseInputError("dangling '*' at end of input");
                continue;
            }
            break;
        }
        if (!saw_factor)
            throw ParseInputError("unexpected character '" + std::string(1, lx.peek()) +
                                  "' at position " + std::to_string(lx.i));
        raw.push_back(std::move(t));
    }
    if (nvars < 0) nvars = max_index + 1;
    if (max_index >= nvars)
        throw ParseInputError("variable X" + std::to_string(max_index) + " out of range for " +
                              std::to_string(nvars) + " variables");
    MultiPoly r(k, nvars);
    for (const auto& t : raw) {
        ExpVec e((size_t)nvars, 0);
        for (const auto& [idx, ex] : t.exps) e[(size_t)idx] = (std::uint32_t)ex;
        r.add_term(e, k.from_int(t.coeff));
    }
    return r;
}

}  // namespace frobwitt
