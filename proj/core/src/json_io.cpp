#include "idem/json_io.hpp"

namespace idem {

using nlohmann::json;

json field_to_json(const FieldDesc& f) {
    return f.is_rationals() ? json("q") : json(std::to_string(f.p()));
}

FieldDesc field_from_json(const json& j) {
    std::string s = j.get<std::string>();
    if (s == "q" || s == "Q") return FieldDesc::rationals();
    return FieldDesc::prime(std::stoull(s));
}

json scalar_to_json(const FieldScalar& c) { return c.to_string(); }

json poly_to_json(const Poly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) arr.push_back(c.to_string());
    return arr;
}

Poly poly_from_json(const FieldDesc& f, const json& j) {
    std::vector<FieldScalar> cs;
    for (const auto& item : j)
        cs.push_back(FieldScalar::parse(f, item.get<std::string>()));
    return Poly::from_coeffs(f, std::move(cs));
}

json nf_to_json(const NFElem& x) {
    return json{{"unit", scalar_to_json(x.unit_coeff())},
                {"sigma", poly_to_json(x.c_sigma())},
                {"a", poly_to_json(x.c_a())},
                {"b", poly_to_json(x.c_b())},
                {"ab", poly_to_json(x.c_ab())}};
}

NFElem nf_from_json(const FieldDesc& f, const json& j) {
    return NFElem::make(FieldScalar::parse(f, j.at("unit").get<std::string>()),
                        poly_from_json(f, j.at("sigma")),
                        poly_from_json(f, j.at("a")),
                        poly_from_json(f, j.at("b")),
                        poly_from_json(f, j.at("ab")));
}

json free_to_json(const FreeElem& x) {
    json obj = json::object();
    for (const auto& [w, c] : x.terms()) obj[w.name()] = c.to_string();
    return obj;
}

json q_to_json(const QElem& x) {
    return json{{"unit", poly_to_json(x.unit_coeff())},
                {"sigma", poly_to_json(x.c_sigma())},
                {"a", poly_to_json(x.c_a())},
                {"b", poly_to_json(x.c_b())},
                {"ab", poly_to_json(x.c_ab())}};
}

json mat2_to_json(const Mat2& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < 2; ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json factorization_to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& fp : f.factors)
        factors.push_back(json{{"base", poly_to_json(fp.base)},
                               {"exponent", fp.exponent}});
    return json{{"unit", scalar_to_json(f.unit)}, {"factors", factors}};
}

json witness_to_json(const IdealWitness& w) {
    json gens = json::array();
    for (const auto& g : w.generators) gens.push_back(q_to_json(g));
    json basis = json::array();
    for (const auto& b : w.module_basis) basis.push_back(q_to_json(b));
    return json{{"generators", gens},
                {"module_basis", basis},
                {"nilpotency_index", w.nilpotency_index},
                {"quotient_commutative", w.quotient_commutative}};
}

json block_to_json(const Block& b) {
    json j{{"kind", block_kind_name(b.kind)},
           {"g", poly_to_json(b.g)},
           {"k", b.k},
           {"modulus", poly_to_json(b.modulus())},
           {"trusted", b.trusted}};
    if (b.kind != BlockKind::Zero) j["join"] = poly_to_json(b.join_coeff);
    if (b.units) {
        j["units"] = json{{"e11", q_to_json(b.units->e11)},
                          {"e12", q_to_json(b.units->e12)},
                          {"e21", q_to_json(b.units->e21)},
                          {"e22", q_to_json(b.units->e22)}};
    }
    if (b.witness) j["witness"] = witness_to_json(*b.witness);
    return j;
}

json decomposition_to_json(const Decomposition& d) {
    json blocks = json::array();
    for (const auto& b : d.blocks) blocks.push_back(block_to_json(b));
    return json{{"field", field_to_json(d.field)},
                {"minpoly", poly_to_json(d.minpoly)},
                {"factorization", factorization_to_json(d.factorization)},
                {"blocks", blocks}};
}

json report_to_json(const Report& r) {
    json mismatches = json::array();
    for (const auto& m : r.mismatches)
        mismatches.push_back(json{{"trial", m.trial},
                                  {"kind", m.kind},
                                  {"detail", m.detail}});
    return json{{"suite", r.suite},
                {"field", r.field},
                {"seed", r.seed},
                {"trials", r.trials},
                {"params", r.params},
                {"mismatches", mismatches},
                {"certificates", r.certificates},
                {"ok", r.ok()}};
}

}  // namespace idem
