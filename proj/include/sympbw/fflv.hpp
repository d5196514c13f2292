#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "sympbw/liealg.hpp"

namespace sympbw {

struct DyckPath {
    std::vector<Root> roots;
    auto operator<=>(const DyckPath&) const = default;
};

/// Exponent vector p: Root -> multiplicity. Zero entries are never stored.
using MultiExponent = std::map<Root, int>;

struct FFLVInequality {
    std::vector<Root> support;
    int rhs = 0;
    auto operator<=>(const FFLVInequality&) const = default;
};

/// Endpoint rule: a simple root (alpha_{n,n} included) or alpha_{j,jbar} with j < n.
inline bool is_dyck_endpoint(int n, const Root& a) {
    return is_simple_root(a) || (a.j > n && bar(n, a.j) == a.i && a.i < n);
}

inline bool is_dyck_path(int n, const DyckPath& d) {
    if (d.roots.empty() || !is_simple_root(d.roots.front())) return false;
    if (!is_dyck_endpoint(n, d.roots.back())) return false;
    for (const Root& a : d.roots)
        if (!is_valid_root(n, a)) return false;
    for (size_t s = 1; s < d.roots.size(); ++s) {
        const Root& p = d.roots[s - 1];
        const Root& q = d.roots[s];
        const bool right = q.i == p.i && q.j == next_in_J(n, p.j);
        const bool down = q.i == p.i + 1 && q.j == p.j;
        if (!right && !down) return false;
    }
    return true;
}

inline std::vector<DyckPath> dyck_paths(int n) {
    if (n < 1) throw DomainError("rank must be >= 1");
    std::vector<DyckPath> out;
    std::vector<Root> cur;
    std::function<void()> extend = [&] {
        const Root last = cur.back();
        if (is_dyck_endpoint(n, last)) out.push_back({cur});
        for (const Root next : {Root{last.i, next_in_J(n, last.j)}, Root{last.i + 1, last.j}}) {
            if (!is_valid_root(n, next)) continue;
            cur.push_back(next);
            extend();
            cur.pop_back();
        }
    };
    for (int i = 1; i <= n; ++i) {
        cur = {Root{i, i}};
        extend();
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::vector<FFLVInequality> fflv_inequalities(int n, const DominantWeight& w) {
    require_weight(n, w);
    std::vector<FFLVInequality> out;
    for (const DyckPath& d : dyck_paths(n)) {
        const Root& first = d.roots.front();
        const Root& last = d.roots.back();
        const int end = is_simple_root(last) ? last.i : n;
        out.push_back({d.roots, w.partial_sum(first.i, end)});
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline bool contains(int n, const DominantWeight& w, const MultiExponent& p) {
    for (const auto& [a, e] : p) {
        require_root(n, a);
        if (e < 0) return false;
    }
    for (const FFLVInequality& ineq : fflv_inequalities(n, w)) {
        long sum = 0;
        for (const Root& a : ineq.support) {
            auto it = p.find(a);
            if (it != p.end()) sum += it->second;
        }
        if (sum > ineq.rhs) return false;
    }
    return true;
}

/// S(lambda) by depth-first search over the canonical root order, bounding each
/// coordinate by the smallest remaining slack among inequalities that contain it.
inline std::vector<MultiExponent> lattice_points(int n, const DominantWeight& w) {
    const std::vector<Root> roots = positive_roots(n);
    const std::vector<FFLVInequality> ineqs = fflv_inequalities(n, w);
    std::vector<std::vector<int>> touching(roots.size());
    for (size_t q = 0; q < ineqs.size(); ++q)
        for (const Root& a : ineqs[q].support) touching[root_index(n, a)].push_back(static_cast<int>(q));

    std::vector<int> slack(ineqs.size());
    for (size_t q = 0; q < ineqs.size(); ++q) slack[q] = ineqs[q].rhs;
    std::vector<int> coords(roots.size(), 0);
    std::vector<MultiExponent> out;

    std::function<void(size_t)> visit = [&](size_t c) {
        if (c == roots.size()) {
            MultiExponent p;
            for (size_t r = 0; r < roots.size(); ++r)
                if (coords[r]) p[roots[r]] = coords[r];
            out.push_back(std::move(p));
            return;
        }
        int bound = touching[c].empty() ? 0 : slack[touching[c].front()];
        for (int q : touching[c]) bound = std::min(bound, slack[q]);
        for (int v = 0; v <= bound; ++v) {
            coords[c] = v;
            for (int q : touching[c]) slack[q] -= v;
            visit(c + 1);
            for (int q : touching[c]) slack[q] += v;
        }
        coords[c] = 0;
    };
    visit(0);
    return out;
}

}  // namespace sympbw
