#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "sympbw/straighten.hpp"
#include "sympbw/verify.hpp"

namespace sympbw::io {

using nlohmann::json;

// Integers and rationals travel as decimal strings so no precision is lost.

inline json root(int n, const Root& a) { return {{"i", a.i}, {"j", a.j}, {"label", to_string(n, a)}}; }

inline Root parse_root(int n, const json& j) {
    if (!j.is_object() || !j.contains("i") || !j.contains("j")) throw DomainError("root needs integer fields i and j");
    Root a{j.at("i").get<int>(), j.at("j").get<int>()};
    if (a.j == n + 1) a.j = n;  // alpha_{i,nbar} is stored as alpha_{i,n}
    require_root(n, a);
    return a;
}

inline json multi_exponent(int n, const MultiExponent& p) {
    json out = json::array();
    for (const auto& [a, e] : p)
        if (e) out.push_back({{"root", root(n, a)}, {"exp", e}});
    return out;
}

inline MultiExponent parse_multi_exponent(int n, const json& j) {
    if (!j.is_array()) throw DomainError("multi-exponent must be an array of {root, exp}");
    MultiExponent p;
    for (const json& e : j) {
        const int v = e.at("exp").get<int>();
        if (v < 0) throw DomainError("negative exponent");
        if (v) p[parse_root(n, e.at("root"))] += v;
    }
    return p;
}

inline json inequality(int n, const FFLVInequality& q) {
    json support = json::array();
    for (const Root& a : q.support) support.push_back(root(n, a));
    return {{"support", support}, {"rhs", q.rhs}};
}

inline json tableau(const Tableau& t) { return {{"shape", t.shape}, {"columns", t.columns}}; }

inline Tableau parse_tableau(int n, const json& j) {
    Tableau t{j.at("shape").get<std::vector<int>>(), j.at("columns").get<std::vector<Column>>()};
    require_tableau(2 * n, t);
    return t;
}

inline json weight(const DominantWeight& w) { return {{"m", w.m}, {"partition", w.partition()}}; }

inline json pluecker_index(const PlueckerIndex& x) { return {{"k", x.k()}, {"J", x.J}}; }

inline json polynomial(const Polynomial& p) {
    json out = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json vars = json::array();
        for (auto v = it->first.vars.rbegin(); v != it->first.vars.rend(); ++v) vars.push_back(pluecker_index(*v));
        out.push_back({{"coeff", it->second.get_str()},
                       {"s_deg", p.has_s ? json(it->first.s_degree) : json(nullptr)},
                       {"vars", vars}});
    }
    return out;
}

/// Variables may list J in any order; reordering signs are absorbed.
inline Polynomial parse_polynomial(int n, const json& j, Ring ring) {
    if (!j.is_array()) throw DomainError("polynomial must be an array of terms");
    bool has_s = false;
    for (const json& term : j)
        if (term.contains("s_deg") && !term.at("s_deg").is_null()) has_s = true;
    Polynomial out(ring, has_s);
    for (const json& term : j) {
        Int c;
        const json& cj = term.at("coeff");
        if (cj.is_string()) {
            if (c.set_str(cj.get<std::string>(), 10) != 0) throw DomainError("coefficient is not a decimal integer");
        } else {
            c = cj.get<long>();
        }
        Polynomial t = Polynomial::constant(c, ring);
        for (const json& v : term.at("vars")) {
            const std::vector<int> seq = v.at("J").get<std::vector<int>>();
            if (v.contains("k") && v.at("k").get<int>() != static_cast<int>(seq.size()))
                throw DomainError("variable level does not match |J|");
            Polynomial x = Polynomial::from_sequence(seq, ring);
            if (!x.is_zero()) require_index(n, x.terms().begin()->first.vars.front());
            t = t * x;
        }
        const int s = has_s && !term.at("s_deg").is_null() ? term.at("s_deg").get<int>() : 0;
        if (s < 0) throw DomainError("negative power of s");
        for (const auto& [m, v] : t.terms()) out.add_term(Monomial{m.vars, s}, v);
    }
    return out;
}

inline json relation(int n, const Relation& r) {
    json out = {{"kind", to_string(r.kind)}, {"text", to_string(n, r.poly)}, {"poly", polynomial(r.poly)}};
    if (r.minor) out["minor"] = {{"I2", r.minor->I2}, {"I1", r.minor->I1}};
    if (!r.L.empty()) out["exchange"] = {{"L", r.L}, {"J", r.J}, {"t", r.t}};
    return out;
}

inline json flag_point(const FlagPoint& pt) {
    json levels = json::array();
    for (const auto& level : pt.levels) {
        json coords = json::array();
        for (const auto& [x, v] : level)
            if (v != 0) coords.push_back({{"J", x.J}, {"value", v.get_str()}});
        levels.push_back(coords);
    }
    json params = json::array();
    for (const auto& [a, c] : pt.parameters) params.push_back({{"root", root(pt.n, a)}, {"value", c.get_str()}});
    return {{"n", pt.n},
            {"provenance", to_string(pt.provenance)},
            {"seed", pt.seed},
            {"parameters", params},
            {"levels", levels}};
}

inline json straighten_result(int n, const StraightenResult& r, bool with_trace) {
    json combo = json::array();
    for (const auto& [t, c] : r.combination) combo.push_back({{"coeff", c.get_str()}, {"tableau", tableau(t)}});
    json out = {{"ring", to_string(r.polynomial.ring)},
                {"text", to_string(n, r.polynomial)},
                {"poly", polynomial(r.polynomial)},
                {"combination", combo}};
    if (with_trace) {
        json steps = json::array();
        for (const RewriteStep& s : r.trace) {
            json produced = json::array();
            for (const Monomial& m : s.produced) {
                Polynomial p(r.polynomial.ring);
                p.add_term(m, 1);
                produced.push_back(to_string(n, p));
            }
            Polynomial src(r.polynomial.ring);
            src.add_term(s.source, 1);
            steps.push_back({{"kind", s.kind == RewriteStep::Kind::symplectic ? "symplectic" : "pluecker"},
                             {"source", to_string(n, src)},
                             {"relation", s.relation},
                             {"preferred", s.preferred},
                             {"minor_order_descends", s.minor_order_descends},
                             {"produced", produced}});
        }
        out["trace"] = steps;
    }
    return out;
}

}  // namespace sympbw::io
