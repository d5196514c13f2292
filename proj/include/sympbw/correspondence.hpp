#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "sympbw/fflv.hpp"
#include "sympbw/tableaux.hpp"

namespace sympbw {

/// f^p expanded into factors, largest operator first. f_{i1,j1} > f_{i2,j2}
/// iff i1 < i2, or i1 = i2 and j1 < j2 in J-order, so this is ascending Root order.
using OrderedMonomial = std::vector<Root>;

inline OrderedMonomial order_monomial(const MultiExponent& p) {
    OrderedMonomial out;
    for (const auto& [a, e] : p) {
        if (e < 0) throw DomainError("negative exponent");
        out.insert(out.end(), e, a);
    }
    return out;
}

/// Letter written in place of i by f_{i,j}: j+1 for unbarred j (n+1 = nbar), j itself if barred.
constexpr int assigned_letter(int n, const Root& a) { return a.j <= n ? a.j + 1 : a.j; }

/// phi: apply the factors smallest first; f_{i,j} rewrites the untouched entry i
/// of the leftmost column c with j >= mu_c for which the rewritten column is
/// still a symplectic PBW column.
inline Tableau monomial_to_tableau(int n, const DominantWeight& w, const MultiExponent& p) {
    require_weight(n, w);
    if (!contains(n, w, p)) throw DomainError("exponent vector lies outside the FFLV polytope");
    Tableau t = highest_weight_tableau(w);
    const OrderedMonomial factors = order_monomial(p);
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        const Root& a = *it;
        const int target = assigned_letter(n, a);
        bool acted = false;
        for (Column& col : t.columns) {
            const int mu = static_cast<int>(col.size());
            if (a.i > mu || col[a.i - 1] != a.i) continue;
            if (a.j <= n && a.j < mu) continue;
            Column next = col;
            next[a.i - 1] = target;
            if (!is_symplectic_pbw_column(n, next)) continue;
            col = std::move(next);
            acted = true;
            break;
        }
        if (!acted) throw InvariantError("no admissible column for " + to_string(n, a));
    }
    return t;
}

/// pi: entry h > mu_c in row r contributes f_{r,h-1} when h <= nbar, f_{r,h} otherwise.
inline std::pair<DominantWeight, MultiExponent> tableau_to_monomial(int n, const Tableau& t) {
    if (!is_symplectic_pbw_semistandard(n, t)) throw DomainError("tableau is not symplectic PBW-semistandard");
    if (static_cast<int>(t.shape.size()) > n) throw DomainError("tableau has more than n rows");
    std::vector<int> partition = t.shape;
    partition.resize(n, 0);
    MultiExponent p;
    for (const Column& col : t.columns) {
        const int mu = static_cast<int>(col.size());
        for (int r = 1; r <= mu; ++r) {
            const int h = col[r - 1];
            if (h <= mu) continue;
            const Root a{r, h <= n + 1 ? h - 1 : h};
            require_root(n, a);
            ++p[a];
        }
    }
    return {DominantWeight::from_partition(partition), p};
}

/// theta_1 for omega_k: each factor f_{u,v} (distinct u, v >= k or barred) rewrites entry u.
inline Column monomial_to_column(int n, int k, const MultiExponent& p) {
    if (k < 1 || k > n) throw DomainError("level out of range");
    Column c(k);
    for (int r = 0; r < k; ++r) c[r] = r + 1;
    for (const auto& [a, e] : p) {
        require_root(n, a);
        if (e != 1 || a.i > k || c[a.i - 1] != a.i || (a.j <= n && a.j < k))
            throw DomainError("monomial does not act on the fundamental column");
        c[a.i - 1] = assigned_letter(n, a);
    }
    return c;
}

/// theta_2 for omega_k, read off the entries not at their position.
inline MultiExponent column_to_monomial(int n, const Column& c) {
    if (!is_symplectic_pbw_column(n, c)) throw DomainError("not a symplectic PBW column");
    const int k = static_cast<int>(c.size());
    MultiExponent p;
    for (int r = 1; r <= k; ++r) {
        const int h = c[r - 1];
        if (h == r) continue;
        p[Root{r, h == n + 1 ? n : (h <= n ? h - 1 : h)}] += 1;
    }
    return p;
}

}  // namespace sympbw
