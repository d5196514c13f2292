#pragma once

#include <compare>
#include <numeric>
#include <string>
#include <vector>

#include "sympbw/common.hpp"
#include "sympbw/matrix.hpp"

namespace sympbw {

/// Positive root alpha_{i,j} of sp(2n). `j` is stored in the letter encoding:
/// j <= n is unbarred, j >= n+2 is the barred letter; alpha_{i,n} = alpha_{i,nbar}
/// is stored with j = n, so j = n+1 never occurs. The derived ordering (i, then j)
/// is the canonical root order, and also the J-order within a row.
struct Root {
    int i = 0;
    int j = 0;
    auto operator<=>(const Root&) const = default;
};

inline bool is_valid_root(int n, const Root& a) {
    if (n < 1 || a.i < 1 || a.i > n) return false;
    if (a.j <= n) return a.i <= a.j;
    return a.j >= n + 2 && a.j <= 2 * n && a.i <= bar(n, a.j);
}

inline void require_root(int n, const Root& a) {
    if (!is_valid_root(n, a))
        throw DomainError("invalid root (" + std::to_string(a.i) + "," + std::to_string(a.j) +
                          ") for n=" + std::to_string(n));
}

/// Successor of j in J = {1,...,n,(n-1)bar,...,1bar}; n is followed by (n-1)bar.
constexpr int next_in_J(int n, int j) { return j == n ? n + 2 : j + 1; }

inline bool is_simple_root(const Root& a) { return a.i == a.j; }

/// The highest root alpha_{i,ibar} of the rank-(n-i+1) symplectic subalgebra.
/// For i = n this is the simple root alpha_{n,n}.
inline bool is_long_root(int n, const Root& a) {
    return (a.i == n && a.j == n) || (a.j > n && bar(n, a.j) == a.i);
}

inline std::string to_string(int n, const Root& a, bool ascii = true) {
    return "a(" + std::to_string(a.i) + "," + letter(n, a.j, ascii) + ")";
}

/// All n^2 positive roots in canonical order.
inline std::vector<Root> positive_roots(int n) {
    if (n < 1) throw DomainError("rank must be >= 1");
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= 2 * n + 1 - i; ++j)
            if (j != n + 1) out.push_back({i, j});
    return out;
}

/// Index of a root in positive_roots(n).
inline int root_index(int n, const Root& a) {
    int idx = 0;
    for (int i = 1; i < a.i; ++i) idx += 2 * (n - i) + 1;
    return idx + (a.j <= n ? a.j - a.i : a.j - a.i - 1);
}

/// Root vector f_alpha as a 2n x 2n integer matrix (E_{p,q} is 1-based).
inline Matrix<int> root_vector_matrix(int n, const Root& a) {
    require_root(n, a);
    Matrix<int> m(2 * n, 2 * n);
    auto E = [&](int p, int q, int v) { m(p - 1, q - 1) += v; };
    const int i = a.i;
    const int ib = bar(n, i);
    if (is_long_root(n, a)) {
        E(ib, i, 1);
    } else if (a.j < n) {
        E(a.j + 1, i, 1);
        E(ib, bar(n, a.j + 1), -1);
    } else {
        // alpha_{i,jbar} with i < j <= n; j = n covers alpha_{i,n}.
        const int j = a.j == n ? n : bar(n, a.j);
        E(bar(n, j), i, 1);
        E(ib, j, 1);
    }
    return m;
}

/// Psi = [[0, I'], [-I', 0]] with I' the n x n anti-diagonal identity.
inline Matrix<int> symplectic_form(int n) {
    Matrix<int> psi(2 * n, 2 * n);
    for (int i = 1; i <= n; ++i) {
        psi(i - 1, bar(n, i) - 1) = 1;
        psi(bar(n, i) - 1, i - 1) = -1;
    }
    return psi;
}

using WeightVector = std::vector<int>;

inline WeightVector add(WeightVector a, const WeightVector& b) {
    for (size_t r = 0; r < a.size(); ++r) a[r] += b[r];
    return a;
}

/// Weight of f_alpha, i.e. -alpha, in the epsilon basis:
/// alpha_{i,j} (j<n) = e_i - e_{j+1}, alpha_{i,jbar} = e_i + e_j, alpha_{i,n} = e_i + e_n.
inline WeightVector root_vector_weight(int n, const Root& a) {
    require_root(n, a);
    WeightVector w(n, 0);
    w[a.i - 1] -= 1;
    if (a.j < n)
        w[a.j] += 1;
    else
        w[(a.j == n ? n : bar(n, a.j)) - 1] -= 1;
    return w;
}

/// lambda = sum m_k omega_k; partition lambda_i = m_i + ... + m_n.
struct DominantWeight {
    std::vector<int> m;

    int rank() const { return static_cast<int>(m.size()); }

    std::vector<int> partition() const {
        std::vector<int> p(m.size(), 0);
        int acc = 0;
        for (int i = rank() - 1; i >= 0; --i) p[i] = (acc += m[i]);
        return p;
    }

    static DominantWeight from_partition(const std::vector<int>& p) {
        DominantWeight w;
        w.m.resize(p.size());
        for (size_t i = 0; i < p.size(); ++i) {
            const int next = i + 1 < p.size() ? p[i + 1] : 0;
            if (p[i] < next) throw DomainError("partition must be weakly decreasing");
            w.m[i] = p[i] - next;
        }
        return w;
    }

    static DominantWeight fundamental(int n, int k) {
        DominantWeight w{std::vector<int>(n, 0)};
        if (k >= 1 && k <= n) w.m[k - 1] = 1;
        return w;
    }

    /// m_i + ... + m_j (1-based, inclusive).
    int partial_sum(int i, int j) const {
        int s = 0;
        for (int r = i; r <= j; ++r) s += m[r - 1];
        return s;
    }

    bool operator==(const DominantWeight&) const = default;
};

inline void require_weight(int n, const DominantWeight& w) {
    if (w.rank() != n) throw DomainError("lambda must have exactly n entries");
    for (int x : w.m)
        if (x < 0) throw DomainError("lambda entries must be nonnegative");
}

/// Weyl dimension formula for C_n with rho = (n, ..., 1) and positive roots
/// e_i - e_j, e_i + e_j (i<j), 2e_i.
inline Int weyl_dimension(int n, const DominantWeight& w) {
    require_weight(n, w);
    const std::vector<int> lam = w.partition();
    std::vector<Int> l(n), r(n);
    for (int i = 0; i < n; ++i) {
        r[i] = n - i;
        l[i] = lam[i] + r[i];
    }
    Rat prod = 1;
    for (int i = 0; i < n; ++i) {
        prod *= Rat(l[i], r[i]);
        for (int j = i + 1; j < n; ++j) {
            prod *= Rat(Int(l[i] - l[j]), Int(r[i] - r[j]));
            prod *= Rat(Int(l[i] + l[j]), Int(r[i] + r[j]));
        }
    }
    prod.canonicalize();
    if (prod.get_den() != 1) throw InvariantError("Weyl dimension is not integral");
    return prod.get_num();
}

}  // namespace sympbw
