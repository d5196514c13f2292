#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sympbw/polynomial.hpp"

namespace sympbw {

enum class RelationKind { pluecker, symplectic, pluecker_degenerate, symplectic_degenerate, s_family };

inline const char* to_string(RelationKind k) {
    switch (k) {
        case RelationKind::pluecker: return "pluecker";
        case RelationKind::symplectic: return "symplectic";
        case RelationKind::pluecker_degenerate: return "pluecker_degenerate";
        case RelationKind::symplectic_degenerate: return "symplectic_degenerate";
        case RelationKind::s_family: return "s_family";
    }
    return "?";
}

/// A generator together with the parameters it was built from: (L, J, t) for
/// exchange relations, the minor for symplectic ones.
struct Relation {
    RelationKind kind = RelationKind::pluecker;
    std::vector<int> L, J;
    int t = 0;
    std::optional<Minor> minor;
    Polynomial poly;
};

/// X_L X_J minus the sum over all r1 < ... < rt of X_{L'} X_{J'}, where L' puts
/// j_1..j_t into slots r1..rt of L and J' puts l_{r1}..l_{rt} into slots 1..t of J.
/// Sequences may be unsorted; every variable goes through normalize_index.
inline Polynomial exchange_relation(const std::vector<int>& L, const std::vector<int>& J, int t) {
    const int p = static_cast<int>(L.size());
    const int q = static_cast<int>(J.size());
    if (t < 1 || t > q || q > p) throw DomainError("exchange needs 1 <= t <= |J| <= |L|");
    Polynomial rel = Polynomial::from_sequence(L) * Polynomial::from_sequence(J);
    std::vector<int> slots;
    std::function<void(int)> choose = [&](int from) {
        if (static_cast<int>(slots.size()) == t) {
            std::vector<int> l2 = L, j2 = J;
            for (int s = 0; s < t; ++s) std::swap(l2[slots[s]], j2[s]);
            rel -= Polynomial::from_sequence(l2) * Polynomial::from_sequence(j2);
            return;
        }
        for (int r = from; r < p; ++r) {
            slots.push_back(r);
            choose(r + 1);
            slots.pop_back();
        }
    };
    choose(0);
    return rel;
}

inline Relation pluecker_relation(int n, const std::vector<int>& L, const std::vector<int>& J, int t) {
    const int p = static_cast<int>(L.size());
    const int q = static_cast<int>(J.size());
    if (!(n >= p && p >= q && q >= 1)) throw DomainError("pluecker_relation needs n >= |L| >= |J| >= 1");
    if (t < 1 || t > q) throw DomainError("pluecker_relation needs 1 <= t <= |J|");
    for (const auto* s : {&L, &J})
        for (size_t r = 0; r < s->size(); ++r) {
            if ((*s)[r] < 1 || (*s)[r] > 2 * n) throw DomainError("index value out of range");
            if (r && (*s)[r - 1] >= (*s)[r]) throw DomainError("pluecker_relation needs sorted L and J");
        }
    return Relation{RelationKind::pluecker, L, J, t, std::nullopt, exchange_relation(L, J, t)};
}

/// The data chosen when expanding a minor that is not reverse-admissible:
/// head = sum over terms of coefficient * minor, all coefficients (-1)^{|Gamma'|}.
struct SymplecticExpansion {
    Minor head;
    int h0 = 0;
    int b = 0;
    std::vector<int> witness;      // T_{h0+1} = (lambda_{h0+1}, ..., lambda_t)
    std::vector<int> gamma_tilde;  // (gamma_{h0}, ..., gamma_b)
    std::vector<int> fixed;        // F = Gamma \ Gamma~
    int coefficient = 0;
    std::vector<Minor> terms;
};

namespace detail {
inline bool strictly_below(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t r = 0; r < a.size(); ++r)
        if (a[r] >= b[r]) return false;
    return true;
}

inline void subsets(const std::vector<int>& pool, size_t size, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t from) {
        if (cur.size() == size) {
            f(cur);
            return;
        }
        for (size_t r = from; r < pool.size(); ++r) {
            cur.push_back(pool[r]);
            rec(r + 1);
            cur.pop_back();
        }
    };
    rec(0);
}
}  // namespace detail

inline SymplecticExpansion symplectic_expansion(int n, const Minor& m) {
    require_minor(n, m);
    if (is_reverse_admissible(n, m)) throw DomainError("minor is reverse-admissible; no relation applies");
    const std::vector<int> gamma = gamma_of(m);
    const std::vector<int> free = detail::free_values(n, m);
    const int t = static_cast<int>(gamma.size());
    auto tail = [&](int h) { return std::vector<int>(gamma.begin() + h, gamma.end()); };  // gamma_{h+1..t}

    SymplecticExpansion e;
    e.head = m;
    for (int h = 1; h <= t && !e.h0; ++h) {
        const std::vector<int> target = tail(h);
        if (free.size() >= target.size() &&
            detail::strictly_below(std::vector<int>(free.begin(), free.begin() + static_cast<long>(target.size())), target))
            e.h0 = h;
    }
    if (!e.h0) throw InvariantError("no h0 found for a non-reverse-admissible minor");

    // T_{h0+1}: the componentwise-maximal witness below gamma_{h0+1..t}.
    const std::vector<int> target = tail(e.h0);
    std::vector<std::vector<int>> witnesses;
    detail::subsets(free, target.size(), [&](const std::vector<int>& s) {
        if (detail::strictly_below(s, target)) witnesses.push_back(s);
    });
    std::vector<std::vector<int>> maximal;
    for (const auto& w : witnesses) {
        bool dominated = false;
        for (const auto& v : witnesses) {
            if (v == w) continue;
            bool ge = true;
            for (size_t r = 0; r < v.size(); ++r) ge = ge && v[r] >= w[r];
            dominated = dominated || ge;
        }
        if (!dominated) maximal.push_back(w);
    }
    if (maximal.size() != 1) throw InvariantError("maximal witness T_{h0+1} is not unique");
    e.witness = maximal.front();

    // b: longest prefix with lambda_{h0+r} < gamma_{h0+r-1}.
    e.b = e.h0;
    while (e.b < t && e.witness[e.b - e.h0] < gamma[e.b - 1]) ++e.b;

    e.gamma_tilde.assign(gamma.begin() + (e.h0 - 1), gamma.begin() + e.b);
    e.fixed = detail::set_difference(gamma, e.gamma_tilde);
    e.coefficient = e.gamma_tilde.size() % 2 ? -1 : 1;

    const std::vector<int> a = detail::set_difference(m.I1, gamma);
    const std::vector<int> bset = detail::set_difference(m.I2, gamma);
    detail::subsets(free, e.gamma_tilde.size(), [&](const std::vector<int>& g) {
        const std::vector<int> inter = detail::set_union(e.fixed, g);
        e.terms.push_back(Minor{detail::set_union(bset, inter), detail::set_union(a, inter)});
    });
    return e;
}

/// S = X_{(I2,I1)} - sum (-1)^{|Gamma~|} X_{(I2',I1')}, each X taken on the computed row order.
inline Relation symplectic_relation(int n, const Minor& m) {
    const SymplecticExpansion e = symplectic_expansion(n, m);
    Polynomial s = Polynomial::from_sequence(computed_minor(n, m));
    for (const Minor& term : e.terms) s -= Int(e.coefficient) * Polynomial::from_sequence(computed_minor(n, term));
    // Scaled so the head variable has coefficient +1.
    const Monomial head{{normalize_index(computed_minor(n, m)).index}, 0};
    if (s.coefficient(head) < 0) s = Int(-1) * s;
    return Relation{RelationKind::symplectic, {}, {}, 0, m, s};
}

/// "(2',2,1',1) = -(3',3,1',1) - (4',4,1',1)"; unicode mode uses overbars and U+2212.
inline std::string format_expansion(int n, const SymplecticExpansion& e, bool ascii = true) {
    auto minor = [&](const Minor& m) {
        std::string s = "(";
        const std::vector<int> seq = computed_minor(n, m);
        for (size_t r = 0; r < seq.size(); ++r) s += (r ? "," : "") + letter(n, seq[r], ascii);
        return s + ")";
    };
    const std::string minus = ascii ? "-" : "−";
    std::string out = minor(e.head) + " =";
    for (size_t r = 0; r < e.terms.size(); ++r) {
        if (e.coefficient < 0)
            out += r ? " " + minus + " " : " " + minus;
        else
            out += r ? " + " : " ";
        out += minor(e.terms[r]);
    }
    return out;
}

/// Terms of minimal total PBW-degree, retagged as degenerate.
inline Polynomial degenerate_component(const Polynomial& p) {
    const int d = p.min_pbw_degree();
    Polynomial out(Ring::degenerate, p.has_s);
    for (const auto& [m, c] : p.terms())
        if (m.pbw_degree() == d) out.add_term(m, c);
    return out;
}

/// Every term times s^{deg(term) - min deg}.
inline Polynomial s_deformed(const Polynomial& p) {
    const int d = p.min_pbw_degree();
    Polynomial out(Ring::classical, true);
    for (const auto& [m, c] : p.terms()) out.add_term(Monomial{m.vars, m.pbw_degree() - d}, c);
    return out;
}

/// Substitute s = 1 (classical) or s = 0 (degenerate).
inline Polynomial specialize_s(const Polynomial& p, int s) {
    if (s != 0 && s != 1) throw DomainError("only s = 0 and s = 1 are supported");
    Polynomial out(s ? Ring::classical : Ring::degenerate);
    for (const auto& [m, c] : p.terms())
        if (s == 1 || m.s_degree == 0) out.add_term(Monomial{m.vars, 0}, c);
    return out;
}

enum class IdealKind { classical, degenerate, s_family };

inline Relation degenerate_of(const Relation& r) {
    Relation d = r;
    d.kind = r.kind == RelationKind::pluecker ? RelationKind::pluecker_degenerate : RelationKind::symplectic_degenerate;
    d.poly = degenerate_component(r.poly);
    return d;
}

inline Relation s_family_of(const Relation& r) {
    Relation d = r;
    d.kind = RelationKind::s_family;
    d.poly = s_deformed(r.poly);
    return d;
}

/// Classical generators: R^t_{L,J} over sorted L, J with n >= |L| >= |J| and all t,
/// then S over every minor that is not reverse-admissible. Zero relations are
/// dropped and relations equal up to sign are kept once, in generation order.
inline std::vector<Relation> generate_ideal(int n, IdealKind kind) {
    if (n < 1 || n > 5) throw DomainError("generate_ideal supports 1 <= n <= 5");
    std::vector<Relation> out;
    std::set<Polynomial> seen;
    auto keep = [&](Relation r) {
        if (kind == IdealKind::degenerate) r = degenerate_of(r);
        if (kind == IdealKind::s_family) r = s_family_of(r);
        if (r.poly.is_zero()) return;
        if (seen.insert(r.poly.sign_normalized()).second) out.push_back(std::move(r));
    };
    std::vector<std::vector<std::vector<int>>> subsets(n + 1);
    std::vector<int> letters_all;
    for (int v = 1; v <= 2 * n; ++v) letters_all.push_back(v);
    for (int k = 1; k <= n; ++k)
        detail::subsets(letters_all, k, [&](const std::vector<int>& s) { subsets[k].push_back(s); });
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= p; ++q)
            for (const auto& L : subsets[p])
                for (const auto& J : subsets[q])
                    for (int t = 1; t <= q; ++t) {
                        Relation r = pluecker_relation(n, L, J, t);
                        if (!r.poly.is_zero()) keep(std::move(r));
                    }
    for (const Minor& m : all_minors(n))
        if (!is_reverse_admissible(n, m)) keep(symplectic_relation(n, m));
    return out;
}

}  // namespace sympbw
