#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "sympbw/liealg.hpp"

namespace sympbw {

using Column = std::vector<int>;

/// Column lengths mu_1 >= mu_2 >= ... of the Young diagram of a partition.
inline std::vector<int> column_lengths(const std::vector<int>& partition) {
    std::vector<int> mu;
    const int width = partition.empty() ? 0 : partition.front();
    for (int j = 1; j <= width; ++j) {
        int len = 0;
        for (int row : partition)
            if (row >= j) ++len;
        mu.push_back(len);
    }
    return mu;
}

/// `shape` is the partition with trailing zeros removed; `columns` are listed
/// left to right, each top to bottom.
struct Tableau {
    std::vector<int> shape;
    std::vector<Column> columns;
    auto operator<=>(const Tableau&) const = default;
};

inline std::vector<int> trim_partition(std::vector<int> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

inline Tableau highest_weight_tableau(const DominantWeight& w) {
    Tableau t{trim_partition(w.partition()), {}};
    for (int len : column_lengths(t.shape)) {
        Column c(len);
        for (int r = 0; r < len; ++r) c[r] = r + 1;
        t.columns.push_back(c);
    }
    return t;
}

/// Entries in 1..alphabet and column lengths matching the shape.
inline void require_tableau(int alphabet, const Tableau& t) {
    for (size_t r = 1; r < t.shape.size(); ++r)
        if (t.shape[r] > t.shape[r - 1] || t.shape[r] < 0)
            throw DomainError("tableau shape is not a partition");
    const std::vector<int> mu = column_lengths(t.shape);
    if (mu.size() != t.columns.size()) throw DomainError("tableau column count does not match shape");
    for (size_t c = 0; c < mu.size(); ++c) {
        if (static_cast<int>(t.columns[c].size()) != mu[c])
            throw DomainError("tableau column length does not match shape");
        if (2 * mu[c] > alphabet) throw DomainError("tableau column longer than rank");
        for (int e : t.columns[c])
            if (e < 1 || e > alphabet) throw DomainError("tableau entry out of range");
    }
}

/// Column conditions shared by both types: entries <= length sit at their
/// position, every other entry exceeds all entries below it.
inline bool is_pbw_column(const Column& c) {
    const int k = static_cast<int>(c.size());
    for (int r = 0; r < k; ++r) {
        if (c[r] <= k && c[r] != r + 1) return false;
        if (c[r] != r + 1)
            for (int s = r + 1; s < k; ++s)
                if (c[r] <= c[s]) return false;
    }
    return true;
}

/// Adds: if i sits at its position, ibar may only appear above it.
inline bool is_symplectic_pbw_column(int n, const Column& c) {
    if (!is_pbw_column(c)) return false;
    const int k = static_cast<int>(c.size());
    for (int r = 0; r < k; ++r) {
        if (c[r] != r + 1 || c[r] > n) continue;
        for (int s = r + 1; s < k; ++s)
            if (c[s] == bar(n, c[r])) return false;
    }
    return true;
}

/// Inter-column condition for `right` placed directly after `left`: for every
/// row i of `right` some row i' >= i of `left` holds an entry >= right[i].
/// Returns the first failing row (1-based), or 0 when the pair is fine.
inline int first_violating_row(const Column& left, const Column& right) {
    int suffix_max = 0;
    std::vector<int> best(left.size() + 1, 0);
    for (int r = static_cast<int>(left.size()) - 1; r >= 0; --r) best[r] = suffix_max = std::max(suffix_max, left[r]);
    for (size_t r = 0; r < right.size(); ++r)
        if (r >= left.size() || best[r] < right[r]) return static_cast<int>(r) + 1;
    return 0;
}

inline bool columns_semistandard(const std::vector<Column>& cols) {
    for (size_t c = 1; c < cols.size(); ++c)
        if (first_violating_row(cols[c - 1], cols[c])) return false;
    return true;
}

inline bool is_symplectic_pbw(int n, const Tableau& t) {
    require_tableau(2 * n, t);
    for (const Column& c : t.columns)
        if (!is_symplectic_pbw_column(n, c)) return false;
    return true;
}

inline bool is_pbw_semistandard_typeA(int alphabet, const Tableau& t) {
    require_tableau(alphabet, t);
    for (const Column& c : t.columns)
        if (!is_pbw_column(c)) return false;
    return columns_semistandard(t.columns);
}

inline bool is_symplectic_pbw_semistandard(int n, const Tableau& t) {
    return is_symplectic_pbw(n, t) && columns_semistandard(t.columns);
}

/// The unique PBW column with the given entry set.
inline Column pbw_column(std::vector<int> entries) {
    const int k = static_cast<int>(entries.size());
    std::sort(entries.begin(), entries.end());
    Column c(k, 0);
    std::vector<int> rest;
    for (int e : entries) {
        if (e <= k)
            c[e - 1] = e;
        else
            rest.push_back(e);
    }
    std::sort(rest.rbegin(), rest.rend());
    size_t next = 0;
    for (int r = 0; r < k; ++r)
        if (c[r] == 0) c[r] = rest[next++];
    return c;
}

/// All PBW columns of length k over 1..2n, lexicographic.
inline std::vector<Column> enumerate_columns(int n, int k, bool symplectic) {
    std::vector<Column> out;
    std::vector<int> subset;
    std::function<void(int)> pick = [&](int from) {
        if (static_cast<int>(subset.size()) == k) {
            Column c = pbw_column(subset);
            if (!symplectic || is_symplectic_pbw_column(n, c)) out.push_back(c);
            return;
        }
        for (int v = from; v <= 2 * n; ++v) {
            subset.push_back(v);
            pick(v + 1);
            subset.pop_back();
        }
    };
    pick(1);
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {
inline std::vector<Tableau> enumerate_shape(int n, const std::vector<int>& shape, bool symplectic) {
    const std::vector<int> mu = column_lengths(shape);
    std::vector<std::vector<Column>> candidates;
    for (int len : mu) candidates.push_back(enumerate_columns(n, len, symplectic));
    std::vector<Tableau> out;
    Tableau cur{shape, {}};
    std::function<void(size_t)> fill = [&](size_t c) {
        if (c == mu.size()) {
            out.push_back(cur);
            return;
        }
        for (const Column& col : candidates[c]) {
            if (c > 0 && first_violating_row(cur.columns.back(), col)) continue;
            cur.columns.push_back(col);
            fill(c + 1);
            cur.columns.pop_back();
        }
    };
    fill(0);
    return out;
}
}  // namespace detail

/// SyST_lambda in canonical order (column 1 top to bottom, then column 2, ...).
inline std::vector<Tableau> enumerate_tableaux(int n, const DominantWeight& w) {
    require_weight(n, w);
    return detail::enumerate_shape(n, trim_partition(w.partition()), true);
}

/// Type A PBW-semistandard tableaux of the partition over the alphabet 1..2n.
inline std::vector<Tableau> enumerate_tableaux_typeA(int n, const std::vector<int>& partition) {
    return detail::enumerate_shape(n, trim_partition(partition), false);
}

/// +e_i for every unbarred i, -e_j for every barred jbar, over all columns.
inline WeightVector tableau_weight(int n, const Tableau& t) {
    require_tableau(2 * n, t);
    WeightVector w(n, 0);
    for (const Column& c : t.columns)
        for (int e : c) {
            if (is_barred(n, e))
                w[bar(n, e) - 1] -= 1;
            else
                w[e - 1] += 1;
        }
    return w;
}

/// Row-wise rendering, one line per row, entries separated by spaces.
inline std::string to_string(int n, const Tableau& t, bool ascii = true) {
    std::string out;
    for (size_t r = 0; r < t.shape.size(); ++r) {
        for (int c = 0; c < t.shape[r]; ++c) {
            if (c) out += ' ';
            out += letter(n, t.columns[c][r], ascii);
        }
        out += '\n';
    }
    return out;
}

}  // namespace sympbw
