#pragma once

/**
 * @file io.hpp
 * @brief JSON forms of cuts, ideals and lattices. Big integers travel as decimal strings.
 */

#include <string>
#include <vector>

#include <json.hpp>

#include "dedekind/chains.hpp"
#include "dedekind/cuts.hpp"
#include "dedekind/error.hpp"
#include "dedekind/lattice.hpp"
#include "dedekind/quad_ideals.hpp"

namespace dedekind::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

inline std::string text_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw ParseError(std::string("field '") + key + "' must be a string or integer");
}

inline BigInt bigint_field(const json& j, const char* key) { return parse_bigint(text_field(j, key)); }

}  // namespace detail

// --- cuts -------------------------------------------------------------------

inline json to_json(const Cut& c) {
    if (c.is_rational()) return {{"kind", "rational"}, {"value", c.rational_value().str()}};
    const auto& a = c.algebraic_value();
    json coeffs = json::array();
    for (const auto& k : a.poly.coeffs()) coeffs.push_back(k.get_str());
    return {{"kind", "algebraic"}, {"coeffs", coeffs}, {"lo", a.lo.str()}, {"hi", a.hi.str()}};
}

inline Cut cut_from_json(const json& j) {
    std::string kind = detail::text_field(j, "kind");
    if (kind == "rational") return Cut::rational(parse_rational(detail::text_field(j, "value")));
    if (kind != "algebraic") throw ParseError("unknown cut kind '" + kind + "'");
    const json& cs = detail::field(j, "coeffs");
    if (!cs.is_array()) throw ParseError("coeffs must be an array");
    std::vector<BigInt> coeffs;
    for (const auto& c : cs) coeffs.push_back(parse_bigint(c.is_string() ? c.get<std::string>() : c.dump()));
    return Cut::algebraic(IntPolynomial(std::move(coeffs)), parse_rational(detail::text_field(j, "lo")),
                          parse_rational(detail::text_field(j, "hi")));
}

/// Same variant and same stored data (stronger than EQ under cut_cmp).
inline bool same_representation(const Cut& x, const Cut& y) {
    if (x.is_rational() != y.is_rational()) return false;
    if (x.is_rational()) return x.rational_value() == y.rational_value();
    const auto& a = x.algebraic_value();
    const auto& b = y.algebraic_value();
    return a.poly == b.poly && a.lo == b.lo && a.hi == b.hi;
}

inline json to_json(const Bracket& b) { return {{"lo", b.lo.str()}, {"hi", b.hi.str()}, {"width", (b.hi - b.lo).str()}}; }

// --- ideals -----------------------------------------------------------------

inline json to_json(const Ideal& I) {
    return {{"d", I.ring().d.get_str()},
            {"a", I.a().get_str()},
            {"b", I.b().get_str()},
            {"c", I.c().get_str()},
            {"norm", I.norm().get_str()},
            {"ring", I.ring().tag()},
            {"text", I.str()}};
}

inline Ideal ideal_from_json(const json& j) {
    return Ideal::make(ring_of(detail::bigint_field(j, "d")), detail::bigint_field(j, "a"), detail::bigint_field(j, "b"),
                       detail::bigint_field(j, "c"));
}

inline json to_json(const QuadInt& z) { return {{"x", z.x.get_str()}, {"y", z.y.get_str()}, {"text", z.str()}}; }

inline json to_json(const IdealFactorization& f) {
    json out = json::array();
    for (const auto& [P, e] : f) out.push_back({{"prime", to_json(P)}, {"exponent", e}});
    return out;
}

// --- lattices ---------------------------------------------------------------

inline json to_json(const OperationTables& t) {
    return {{"n", t.size()}, {"labels", t.labels}, {"join", t.join}, {"meet", t.meet}};
}

inline json to_json(const FiniteLattice& L) { return to_json(L.tables()); }

/// Shape-checked tables; no lattice axioms are required.
inline OperationTables tables_from_json(const json& j) {
    OperationTables t;
    try {
        std::size_t n = detail::field(j, "n").get<std::size_t>();
        t.labels = detail::field(j, "labels").get<std::vector<std::string>>();
        t.join = detail::field(j, "join").get<OpTable>();
        t.meet = detail::field(j, "meet").get<OpTable>();
        if (t.labels.size() != n) throw ParseError("labels do not match n");
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad lattice document: ") + e.what());
    }
    validate_shape(t);
    return t;
}

inline FiniteLattice lattice_from_json(const json& j) { return FiniteLattice::from_tables(tables_from_json(j)); }

inline json to_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    return {{"a", w->a}, {"b", w->b}, {"c", w->c}, {"op", w->op}};
}

inline json to_json(const AxiomReport& r) {
    return {{"ok", r.ok()},
            {"commutative", {{"holds", r.commutative}, {"witness", to_json(r.commutative_witness)}}},
            {"associative", {{"holds", r.associative}, {"witness", to_json(r.associative_witness)}}},
            {"absorptive", {{"holds", r.absorptive}, {"witness", to_json(r.absorptive_witness)}}}};
}

// --- chains -----------------------------------------------------------------

inline json to_json(const SisReport& r) {
    auto v = [](const AxiomVerdict& a) { return json{{"holds", a.holds}, {"witness", a.witness}}; };
    return {{"ok", r.ok()}, {"alpha", v(r.alpha)}, {"beta", v(r.beta)}, {"gamma", v(r.gamma)}, {"delta", v(r.delta)}};
}

}  // namespace dedekind::io
