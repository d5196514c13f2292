#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "sympbw/relations.hpp"

namespace sympbw {

// ---- orders -----------------------------------------------------------------

/// Total order on tableaux of one shape: scan columns from the right, each from
/// the bottom up; the first differing entry decides. Whenever T1 > T2 here, the
/// position (i0, j0) found witnesses T1 > T2 in the positional order (equal to
/// the right in row i0 and below in column j0).
inline std::strong_ordering tableau_order_compare(const Tableau& a, const Tableau& b) {
    if (a.shape != b.shape) throw DomainError("tableau_order_compare needs equal shapes");
    for (size_t c = a.columns.size(); c-- > 0;)
        for (size_t r = a.columns[c].size(); r-- > 0;)
            if (auto o = a.columns[c][r] <=> b.columns[c][r]; o != 0) return o;
    return std::strong_ordering::equal;
}

/// The positional order verbatim: some (i0, j0) where a is larger, with equal
/// entries at (i0, j) for j > j0 and at (i, j0) for i > i0.
inline bool positional_greater(const Tableau& a, const Tableau& b) {
    if (a.shape != b.shape) throw DomainError("positional_greater needs equal shapes");
    for (size_t j0 = 0; j0 < a.columns.size(); ++j0)
        for (size_t i0 = 0; i0 < a.columns[j0].size(); ++i0) {
            if (a.columns[j0][i0] <= b.columns[j0][i0]) continue;
            bool ok = true;
            for (size_t j = j0 + 1; j < a.columns.size() && ok; ++j)
                if (i0 < a.columns[j].size()) ok = a.columns[j][i0] == b.columns[j][i0];
            for (size_t i = i0 + 1; i < a.columns[j0].size() && ok; ++i) ok = a.columns[j0][i] == b.columns[j0][i];
            if (ok) return true;
        }
    return false;
}

/// L is below J iff sum(L) < sum(J), or the sums agree and the last nonzero
/// entry of L - J is positive.
inline std::strong_ordering minor_order_compare(const std::vector<int>& L, const std::vector<int>& J) {
    if (L.size() != J.size()) throw DomainError("minor_order_compare needs equal lengths");
    long sl = 0, sj = 0;
    for (size_t r = 0; r < L.size(); ++r) {
        sl += L[r];
        sj += J[r];
    }
    if (sl != sj) return sl <=> sj;
    for (size_t r = L.size(); r-- > 0;)
        if (L[r] != J[r]) return L[r] > J[r] ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// ---- tableau monomials -------------------------------------------------------

/// Bottom-up lexicographic comparison of PBW columns of equal length.
inline std::strong_ordering column_bottom_up_compare(const Column& a, const Column& b) {
    for (size_t r = a.size(); r-- > 0;)
        if (auto o = a[r] <=> b[r]; o != 0) return o;
    return std::strong_ordering::equal;
}

/// Columns of X_T arranged as a tableau: longer columns first, equal lengths in
/// decreasing bottom-up order. Any PBW-semistandard arrangement of a multiset of
/// columns is of this form, so this is the only one worth testing.
inline Tableau arrange(const std::vector<PlueckerIndex>& vars) {
    std::vector<Column> cols;
    for (const auto& x : vars) cols.push_back(pbw_column(x.J));
    std::sort(cols.begin(), cols.end(), [](const Column& a, const Column& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return column_bottom_up_compare(a, b) > 0;
    });
    Tableau t;
    for (size_t r = 0; !cols.empty() && r < cols.front().size(); ++r) {
        int len = 0;
        for (const auto& c : cols)
            if (c.size() > r) ++len;
        t.shape.push_back(len);
    }
    t.columns = std::move(cols);
    return t;
}

inline std::vector<PlueckerIndex> tableau_variables(const Tableau& t) {
    std::vector<PlueckerIndex> vars;
    for (const auto& c : t.columns) vars.push_back(normalize_index(c).index);
    std::sort(vars.begin(), vars.end());
    return vars;
}

inline bool is_standard(int n, const std::vector<PlueckerIndex>& vars) {
    return is_symplectic_pbw_semistandard(n, arrange(vars));
}

/// Termination measure: shape, then higher PBW-degree counts as smaller, then
/// tableau_order_compare. Every rewrite step strictly lowers it.
inline std::strong_ordering measure_compare(const Monomial& a, const Monomial& b) {
    const Tableau ta = arrange(a.vars), tb = arrange(b.vars);
    if (auto o = ta.shape <=> tb.shape; o != 0) return o;
    if (auto o = b.pbw_degree() <=> a.pbw_degree(); o != 0) return o;
    return tableau_order_compare(ta, tb);
}

// ---- rewriting ---------------------------------------------------------------

struct RewriteStep {
    enum class Kind { symplectic, pluecker } kind = Kind::symplectic;
    Monomial source;
    std::string relation;       // human-readable label of the relation used
    bool preferred = true;      // false when the first-violating-row exchange did not descend
    bool minor_order_descends = true;  // symplectic steps: every target column is below the source in minor order
    std::vector<Monomial> produced;
};

struct StraightenResult {
    Polynomial polynomial;                 // supported on standard monomials
    std::map<Tableau, Int> combination;    // coefficient of prod X_{sorted column}
    std::vector<RewriteStep> trace;
};

/// Rewrites Pluecker monomials into symplectic PBW-semistandard ones, in the
/// classical or the degenerate ring. One-step rules are cached per monomial;
/// the cache is guarded so a single instance may be shared between threads.
class Straightener {
public:
    Straightener(int n, Ring ring, long budget = 200000) : n_(n), ring_(ring), budget_(budget) {
        if (n < 1) throw DomainError("rank must be >= 1");
    }

    int rank() const { return n_; }
    Ring ring() const { return ring_; }

    StraightenResult straighten(const Polynomial& input, bool keep_trace = false) const {
        if (input.has_s) throw DomainError("cannot straighten a polynomial in s");
        StraightenResult res;
        res.polynomial = Polynomial(ring_);
        std::map<Monomial, Int> pending;
        auto push = [&](const Monomial& m, const Int& c) {
            if (c == 0) return;
            for (const auto& x : m.vars) require_index(n_, x);
            if (is_standard(n_, m.vars)) {
                res.polynomial.add_term(m, c);
                return;
            }
            auto [it, fresh] = pending.try_emplace(m, c);
            if (!fresh && (it->second += c) == 0) pending.erase(it);
        };
        for (const auto& [m, c] : input.terms()) push(m, c);

        long steps = 0;
        while (!pending.empty()) {
            if (++steps > budget_) throw InvariantError("straightening exceeded its step budget");
            auto top = pending.begin();
            for (auto it = std::next(pending.begin()); it != pending.end(); ++it)
                if (measure_compare(it->first, top->first) > 0) top = it;
            const Monomial m = top->first;
            const Int c = top->second;
            pending.erase(top);
            const Rule& rule = rule_for(m);
            if (keep_trace) res.trace.push_back(rule.step);
            for (const auto& [pm, pc] : rule.replacement.terms()) push(pm, c * pc);
        }
        for (const auto& [m, c] : res.polynomial.terms()) res.combination[arrange(m.vars)] += c;
        return res;
    }

    StraightenResult straighten(const Monomial& m, bool keep_trace = false) const {
        Polynomial p(ring_);
        p.add_term(m, 1);
        return straighten(p, keep_trace);
    }

private:
    struct Rule {
        Polynomial replacement;
        RewriteStep step;
    };

    const Rule& rule_for(const Monomial& m) const {
        {
            std::lock_guard lock(mutex_);
            if (auto it = cache_.find(m); it != cache_.end()) return it->second;
        }
        Rule rule = derive_rule(m);
        std::lock_guard lock(mutex_);
        return cache_.try_emplace(m, std::move(rule)).first->second;
    }

    Polynomial in_ring(const Polynomial& classical) const {
        return ring_ == Ring::classical ? classical : degenerate_component(classical);
    }

    /// Solve rel = 0 for `head` and multiply by `rest`. Returns false when the
    /// head coefficient is not a unit or some produced monomial fails to descend.
    bool solve_for(const Monomial& source, const Monomial& head, const Monomial& rest, const Polynomial& rel,
                   Polynomial& out) const {
        const Int ch = rel.coefficient(head);
        if (ch != 1 && ch != -1) return false;
        Polynomial r(ring_);
        for (const auto& [m, c] : rel.terms()) {
            if (m == head) continue;
            const Monomial pm = m * rest;
            if (measure_compare(pm, source) >= 0) return false;
            r.add_term(pm, -c * ch);
        }
        out = r;
        return true;
    }

    Rule derive_rule(const Monomial& m) const {
        const Tableau t = arrange(m.vars);
        Rule rule;
        rule.step.source = m;

        auto rest_without = [&](std::vector<size_t> skip) {
            std::vector<PlueckerIndex> vars;
            for (size_t c = 0; c < t.columns.size(); ++c)
                if (std::find(skip.begin(), skip.end(), c) == skip.end()) vars.push_back(normalize_index(t.columns[c]).index);
            return make_monomial(vars);
        };

        for (size_t c = 0; c < t.columns.size(); ++c) {
            if (is_symplectic_pbw_column(n_, t.columns[c])) continue;
            const Minor minor = minor_of_entries(n_, t.columns[c]);
            const SymplecticExpansion e = symplectic_expansion(n_, minor);
            const std::vector<int> head_seq = computed_minor(n_, minor);
            for (const Minor& term : e.terms)
                if (minor_order_compare(computed_minor(n_, term), head_seq) >= 0) rule.step.minor_order_descends = false;
            const Polynomial rel = in_ring(symplectic_relation(n_, minor).poly);
            const Monomial head{{normalize_index(t.columns[c]).index}, 0};
            if (!solve_for(m, head, rest_without({c}), rel, rule.replacement))
                throw InvariantError("symplectic rewrite does not descend");
            rule.step.kind = RewriteStep::Kind::symplectic;
            rule.step.relation = "S(" + letters(n_, head_seq) + ")";
            finish(rule);
            return rule;
        }

        for (size_t c = 0; c + 1 < t.columns.size(); ++c) {
            const int row = first_violating_row(t.columns[c], t.columns[c + 1]);
            if (!row) continue;
            const Column& L = t.columns[c];
            const Column& J = t.columns[c + 1];
            const Monomial head = make_monomial({normalize_index(L).index, normalize_index(J).index});
            const Monomial rest = rest_without({c, c + 1});

            auto attempt = [&](const Column& left, const Column& right, int tt) {
                const Polynomial rel = in_ring(exchange_relation(left, right, tt));
                if (!solve_for(m, head, rest, rel, rule.replacement)) return false;
                rule.step.kind = RewriteStep::Kind::pluecker;
                rule.step.relation = "R^" + std::to_string(tt) + "(" + letters(n_, left) + ";" + letters(n_, right) + ")";
                return true;
            };

            // Preferred: exchange the top `row` entries of the right column.
            if (attempt(L, J, row)) {
                finish(rule);
                return rule;
            }
            // Otherwise any t-subset of one column moved to the front.
            rule.step.preferred = false;
            std::vector<std::pair<Column, Column>> orders{{L, J}};
            if (L.size() == J.size()) orders.push_back({J, L});
            for (const auto& [left, right] : orders)
                for (int tt = 1; tt <= static_cast<int>(right.size()); ++tt) {
                    bool done = false;
                    std::vector<int> positions(right.size());
                    for (size_t r = 0; r < right.size(); ++r) positions[r] = static_cast<int>(r);
                    detail::subsets(positions, static_cast<size_t>(tt), [&](const std::vector<int>& chosen) {
                        if (done) return;
                        Column front;
                        for (int r : chosen) front.push_back(right[r]);
                        for (size_t r = 0; r < right.size(); ++r)
                            if (std::find(chosen.begin(), chosen.end(), static_cast<int>(r)) == chosen.end())
                                front.push_back(right[r]);
                        done = attempt(left, front, tt);
                    });
                    if (done) {
                        finish(rule);
                        return rule;
                    }
                }
            throw InvariantError("no exchange relation descends for " + to_string(n_, t));
        }
        throw InvariantError("derive_rule called on a standard monomial");
    }

    static void finish(Rule& rule) {
        for (const auto& [m, c] : rule.replacement.terms()) rule.step.produced.push_back(m);
    }

    int n_;
    Ring ring_;
    long budget_;
    mutable std::mutex mutex_;
    mutable std::map<Monomial, Rule> cache_;
};

}  // namespace sympbw
