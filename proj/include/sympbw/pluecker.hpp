#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <vector>

#include "sympbw/tableaux.hpp"

namespace sympbw {

/// Label of the Pluecker variable X_J: a strictly increasing J at level k = |J|.
/// Ordered level first, then lexicographically.
struct PlueckerIndex {
    std::vector<int> J;

    int k() const { return static_cast<int>(J.size()); }

    std::strong_ordering operator<=>(const PlueckerIndex& o) const {
        if (auto c = J.size() <=> o.J.size(); c != 0) return c;
        return J <=> o.J;
    }
    bool operator==(const PlueckerIndex&) const = default;
};

/// Sorted index with the sign of the sorting permutation; `zero` when a value repeats.
struct NormalizedIndex {
    bool zero = false;
    PlueckerIndex index;
    int sign = 1;
};

inline NormalizedIndex normalize_index(const std::vector<int>& seq) {
    NormalizedIndex out;
    int inversions = 0;
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b) {
            if (seq[a] == seq[b]) {
                out.zero = true;
                out.sign = 0;
                return out;
            }
            if (seq[a] > seq[b]) ++inversions;
        }
    out.index.J = seq;
    std::sort(out.index.J.begin(), out.index.J.end());
    out.sign = inversions % 2 ? -1 : 1;
    return out;
}

inline bool is_valid_index(int n, const PlueckerIndex& x) {
    if (x.k() < 1 || x.k() > n) return false;
    for (int r = 0; r < x.k(); ++r) {
        if (x.J[r] < 1 || x.J[r] > 2 * n) return false;
        if (r && x.J[r - 1] >= x.J[r]) return false;
    }
    return true;
}

inline void require_index(int n, const PlueckerIndex& x) {
    if (!is_valid_index(n, x)) throw DomainError("invalid Pluecker index [" + letters(n, x.J) + "]");
}

/// deg J = #{r : j_r > k}.
inline int pbw_degree_index(const PlueckerIndex& x) {
    return static_cast<int>(std::count_if(x.J.begin(), x.J.end(), [&](int v) { return v > x.k(); }));
}

/// Minor (I2, I1): I1 contributes unbarred rows, I2 barred rows. Both sorted.
struct Minor {
    std::vector<int> I2;
    std::vector<int> I1;

    int k() const { return static_cast<int>(I1.size() + I2.size()); }
    auto operator<=>(const Minor&) const = default;
};

inline void require_minor(int n, const Minor& m) {
    for (const auto* s : {&m.I1, &m.I2})
        for (size_t r = 0; r < s->size(); ++r) {
            if ((*s)[r] < 1 || (*s)[r] > n) throw DomainError("minor entry out of range");
            if (r && (*s)[r - 1] >= (*s)[r]) throw DomainError("minor sets must be strictly increasing");
        }
    if (m.k() < 1 || m.k() > n) throw DomainError("minor size must lie in 1..n");
}

namespace detail {
inline std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}
/// {1..n} minus (I1 u I2), ascending.
inline std::vector<int> free_values(int n, const Minor& m) {
    std::vector<int> out;
    const std::vector<int> used = set_union(m.I1, m.I2);
    for (int v = 1; v <= n; ++v)
        if (!std::binary_search(used.begin(), used.end(), v)) out.push_back(v);
    return out;
}
}  // namespace detail

inline std::vector<int> gamma_of(const Minor& m) { return detail::set_intersection(m.I1, m.I2); }

/// Row sequence (b1bar..bsbar, a_last..a_1, gamma_t bar, gamma_t, ..., gamma_1 bar, gamma_1)
/// with a in I1 \ Gamma, b in I2 \ Gamma, Gamma = I1 n I2.
inline std::vector<int> computed_minor(int n, const Minor& m) {
    require_minor(n, m);
    const std::vector<int> gamma = gamma_of(m);
    const std::vector<int> a = detail::set_difference(m.I1, gamma);
    const std::vector<int> b = detail::set_difference(m.I2, gamma);
    std::vector<int> seq;
    for (int v : b) seq.push_back(bar(n, v));
    for (auto it = a.rbegin(); it != a.rend(); ++it) seq.push_back(*it);
    for (auto it = gamma.rbegin(); it != gamma.rend(); ++it) {
        seq.push_back(bar(n, *it));
        seq.push_back(*it);
    }
    return seq;
}

/// Componentwise-minimal T in {1..n} \ (I1 u I2) with |T| = |Gamma| and T < Gamma,
/// if one exists. Strictness is automatic since T and Gamma are disjoint.
inline std::optional<std::vector<int>> minimal_witness(int n, const Minor& m) {
    require_minor(n, m);
    const std::vector<int> gamma = gamma_of(m);
    const std::vector<int> free = detail::free_values(n, m);
    if (free.size() < gamma.size()) return std::nullopt;
    std::vector<int> t(free.begin(), free.begin() + static_cast<long>(gamma.size()));
    for (size_t r = 0; r < t.size(); ++r)
        if (t[r] >= gamma[r]) return std::nullopt;
    return t;
}

inline bool is_reverse_admissible(int n, const Minor& m) { return minimal_witness(n, m).has_value(); }

inline bool is_admissible(int n, const Minor& m) {
    require_minor(n, m);
    const std::vector<int> gamma = gamma_of(m);
    const std::vector<int> free = detail::free_values(n, m);
    if (free.size() < gamma.size()) return false;
    const size_t off = free.size() - gamma.size();
    for (size_t r = 0; r < gamma.size(); ++r)
        if (free[off + r] <= gamma[r]) return false;
    return true;
}

inline std::vector<int> minor_entries(int n, const Minor& m) {
    std::vector<int> e = m.I1;
    for (int v : m.I2) e.push_back(bar(n, v));
    std::sort(e.begin(), e.end());
    return e;
}

/// The PBW column carrying the minor's letters. Defined for every minor; the
/// result is symplectic exactly when the minor is reverse-admissible.
inline Column minor_to_pbw_column(int n, const Minor& m) {
    require_minor(n, m);
    return pbw_column(minor_entries(n, m));
}

inline Column minor_to_column(int n, const Minor& m) {
    if (!is_reverse_admissible(n, m)) throw DomainError("minor is not reverse-admissible");
    return minor_to_pbw_column(n, m);
}

inline Minor minor_of_entries(int n, const std::vector<int>& entries) {
    Minor m;
    for (int e : entries) (is_barred(n, e) ? m.I2 : m.I1).push_back(is_barred(n, e) ? bar(n, e) : e);
    std::sort(m.I1.begin(), m.I1.end());
    std::sort(m.I2.begin(), m.I2.end());
    return m;
}

/// Barred letters give I2, unbarred letters give I1.
inline Minor column_to_minor(int n, const Column& c) {
    if (!is_symplectic_pbw_column(n, c)) throw DomainError("not a symplectic PBW column");
    return minor_of_entries(n, c);
}

/// |I2| + #{i in I1 : i > k}.
inline int pbw_degree_minor(int n, const Minor& m) {
    require_minor(n, m);
    return static_cast<int>(m.I2.size()) +
           static_cast<int>(std::count_if(m.I1.begin(), m.I1.end(), [&](int v) { return v > m.k(); }));
}

/// All minors with 1 <= k <= n, ordered by k then (I2, I1).
inline std::vector<Minor> all_minors(int n) {
    std::vector<Minor> out;
    const int full = 1 << n;
    for (int s2 = 0; s2 < full; ++s2)
        for (int s1 = 0; s1 < full; ++s1) {
            Minor m;
            for (int v = 1; v <= n; ++v) {
                if (s2 >> (v - 1) & 1) m.I2.push_back(v);
                if (s1 >> (v - 1) & 1) m.I1.push_back(v);
            }
            if (m.k() >= 1 && m.k() <= n) out.push_back(m);
        }
    std::sort(out.begin(), out.end(), [](const Minor& a, const Minor& b) {
        return std::pair(a.k(), a) < std::pair(b.k(), b);
    });
    return out;
}

}  // namespace sympbw
