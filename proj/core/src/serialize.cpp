#include "frobwitt/serialize.hpp"

namespace frobwitt {

using nlohmann::json;

void to_json(json& j, const FieldElem& x) { j = x.c; }

void to_json(json& j, const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(m.at(i, c));
        rows.push_back(std::move(row));
    }
    j = json{{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

void to_json(json& j, const MultiPoly& a) {
    json terms = json::array();
    for (const auto& [exps, c] : a.terms) {
        terms.push_back(json{{"exps", exps}, {"coeff", c}});
    }
    j = json{{"nvars", a.nvars}, {"terms", std::move(terms)}, {"text", a.str()}};
}

void to_json(json& j, const PointCount& c) {
    j = json{{"e", c.e}, {"count", c.count}};
}

void to_json(json& j, const SmoothnessReport& r) {
    j = json{{"e_max", r.e_max},
             {"witness_found", r.witness_found},
             {"witness_e", r.witness_e},
             {"witness", r.witness}};
}

void to_json(json& j, const SigmaFixedPoint& p) {
    j = json{{"e", p.e}, {"point", p.point}};
}

void to_json(json& j, const FixedPointReport& r) {
    j = json{{"e_max", r.e_max}, {"ambient", r.ambient}, {"on_x", r.on_x}};
}

void to_json(json& j, const HWBasis& b) {
    j = json{{"d", b.d}, {"N", b.N}, {"monomials", b.monomials}};
}

void to_json(json& j, const HWMatrix& m) {
    j = json{{"basis", m.basis}, {"a_p", m.a_p}, {"a_q", m.a_q}};
}

void to_json(json& j, const ZetaModP& z) {
    j = json{{"zeta0", z.zeta0},
             {"zeta1", z.zeta1},
             {"zeta0_text", uni_str(z.zeta0)},
             {"zeta1_text", uni_str(z.zeta1)}};
}

void to_json(json& j, const KatzRow& r) {
    j = json{{"e", r.e},
             {"n_e", r.n_e},
             {"n_e_mod_p", r.n_e_mod_p},
             {"trace_side", r.trace_side},
             {"trace_in_prime_field", r.trace_in_prime_field},
             {"pass", r.pass}};
}

void to_json(json& j, const KatzReport& r) {
    j = json{{"rows", r.rows}, {"all_pass", r.all_pass}};
}

void to_json(json& j, const FixedSpaceResult& r) {
    j = json{{"basis", r.basis},
             {"dimension", r.basis.size()},
             {"field_used", r.field_used ? field_json(*r.field_used) : json()},
             {"extension_multiple", r.extension_multiple},
             {"cap_exceeded", r.cap_exceeded}};
}

void to_json(json& j, const FittingDecomp& d) {
    j = json{{"stable_basis", d.stable_basis},
             {"stable_dim", d.stable_basis.size()},
             {"nilpotent_basis", d.nilpotent_basis},
             {"nilpotent_dim", d.nilpotent_basis.size()},
             {"nilpotency_index", d.nilpotency_index},
             {"stable_matrix", d.stable_matrix},
             {"fixed_basis", d.fixed_basis},
             {"fixed_dim", d.fixed_basis.size()},
             {"extension_degree_used", d.extension_degree_used},
             {"cap_exceeded", d.cap_exceeded}};
}

void to_json(json& j, const TateResult& t) {
    j = json{{"dimension", t.dimension}, {"representatives", t.representatives}};
}

void to_json(json& j, const LLPrimeResult& r) {
    j = json{{"dim_l", r.dim_l},
             {"dim_lprime", r.dim_lprime},
             {"l_reps", r.l_reps},
             {"lprime_reps", r.lprime_reps}};
}

void to_json(json& j, const CheckLine& c) {
    j = json{{"name", c.name}, {"expected", c.expected}, {"got", c.got}, {"pass", c.pass}};
}

void to_json(json& j, const Prop3435Report& r) {
    j = json{{"n", r.n},
             {"jordan", r.jordan},
             {"has_special", r.has_special},
             {"checks", r.checks},
             {"all_pass", r.all_pass}};
}

void to_json(json& j, const MuReport& r) {
    j = json{{"c_p", r.c_p},
             {"c_q", r.c_q},
             {"a_q", r.a_q},
             {"ordinary", r.ordinary},
             {"mu_defined", r.mu_defined},
             {"mu", r.mu},
             {"a_congruence_ok", r.a_congruence_ok},
             {"zeta1_ok", r.zeta1_ok},
             {"etale_h1", r.etale_h1},
             {"escalation_m", r.escalation_m},
             {"pass", r.pass}};
}

json field_json(const FieldCtx& k) { return json{{"p", k.p()}, {"f", k.f()}}; }

}  // namespace frobwitt
