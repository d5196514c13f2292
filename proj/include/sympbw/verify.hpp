#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "sympbw/correspondence.hpp"
#include "sympbw/relations.hpp"

namespace sympbw {

enum class Provenance { classical, degenerate };

inline const char* to_string(Provenance p) { return p == Provenance::classical ? "classical" : "degenerate"; }

/// Pluecker coordinates of a flag U_1 c ... c U_n, every index of every level
/// present (zeros included), plus the column bases the coordinates came from.
struct FlagPoint {
    int n = 0;
    Provenance provenance = Provenance::classical;
    std::uint64_t seed = 0;
    std::map<Root, Rat> parameters;
    std::vector<std::map<PlueckerIndex, Rat>> levels;  // levels[k-1]
    std::vector<Matrix<Rat>> bases;                    // bases[k-1] is 2n x k

    const Rat& coordinate(const PlueckerIndex& x) const {
        if (x.k() < 1 || x.k() > n) throw DomainError("coordinate level out of range");
        auto it = levels[x.k() - 1].find(x);
        if (it == levels[x.k() - 1].end()) throw DomainError("coordinate not present");
        return it->second;
    }
};

namespace detail {
inline std::vector<PlueckerIndex> level_indices(int n, int k) {
    std::vector<int> pool;
    for (int v = 1; v <= 2 * n; ++v) pool.push_back(v);
    std::vector<PlueckerIndex> out;
    subsets(pool, static_cast<size_t>(k), [&](const std::vector<int>& s) { out.push_back(PlueckerIndex{s}); });
    return out;
}

/// Coefficients c_alpha: integers in [-bound, bound], one per root in canonical order.
inline std::map<Root, Rat> draw_parameters(int n, std::uint64_t seed, int bound) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-bound, bound);
    std::map<Root, Rat> c;
    for (const Root& a : positive_roots(n)) c[a] = dist(rng);
    return c;
}

inline void fill_coordinates_from_bases(FlagPoint& pt) {
    pt.levels.assign(pt.n, {});
    for (int k = 1; k <= pt.n; ++k)
        for (const auto& x : level_indices(pt.n, k))
            pt.levels[k - 1][x] = determinant(leading_minor_matrix(pt.bases[k - 1], x.J));
}
}  // namespace detail

/// Big-cell point: M = prod exp(c_alpha f_alpha) in canonical root order;
/// U_k is spanned by the first k columns of M.
inline FlagPoint sample_classical_flag(int n, std::uint64_t seed, int bound = 9,
                                       const std::map<Root, Rat>* fixed = nullptr) {
    FlagPoint pt;
    pt.n = n;
    pt.provenance = Provenance::classical;
    pt.seed = seed;
    pt.parameters = fixed ? *fixed : detail::draw_parameters(n, seed, bound);
    Matrix<Rat> M = Matrix<Rat>::identity(2 * n);
    for (const auto& [a, c] : pt.parameters) M = M * exp_nilpotent(c * root_vector_matrix(n, a).cast<Rat>());
    for (int k = 1; k <= n; ++k) {
        Matrix<Rat> b(2 * n, k);
        for (int r = 0; r < 2 * n; ++r)
            for (int col = 0; col < k; ++col) b(r, col) = M(r, col);
        pt.bases.push_back(b);
    }
    detail::fill_coordinates_from_bases(pt);
    return pt;
}

/// The full group element of a classical sample, for the M^T Psi M = Psi check.
inline Matrix<Rat> classical_group_element(int n, const std::map<Root, Rat>& parameters) {
    Matrix<Rat> M = Matrix<Rat>::identity(2 * n);
    for (const auto& [a, c] : parameters) M = M * exp_nilpotent(c * root_vector_matrix(n, a).cast<Rat>());
    return M;
}

/// Sparse linear map on the basis {w_J} of the k-th wedge power: column J -> image.
using WedgeOperator = std::map<PlueckerIndex, std::map<PlueckerIndex, Int>>;
using WedgeVector = std::map<PlueckerIndex, Rat>;

/// f_alpha acting on w_J as a derivation, keeping only the part that raises the
/// PBW-degree by exactly one.
inline WedgeOperator degenerate_operator(int n, int k, const Root& a) {
    if (k < 1 || k > n) throw DomainError("level out of range");
    const Matrix<int> f = root_vector_matrix(n, a);
    WedgeOperator op;
    for (const auto& x : detail::level_indices(n, k)) {
        auto& image = op[x];
        const int d = pbw_degree_index(x);
        for (int r = 0; r < k; ++r)
            for (int p = 1; p <= 2 * n; ++p) {
                const int v = f(p - 1, x.J[r] - 1);
                if (!v) continue;
                std::vector<int> seq = x.J;
                seq[r] = p;
                const NormalizedIndex ni = normalize_index(seq);
                if (ni.zero || pbw_degree_index(ni.index) != d + 1) continue;
                if ((image[ni.index] += v * ni.sign) == 0) image.erase(ni.index);
            }
        if (image.empty()) op.erase(x);
    }
    return op;
}

inline WedgeVector apply_operator(const WedgeOperator& op, const WedgeVector& v) {
    WedgeVector out;
    for (const auto& [x, c] : v) {
        auto it = op.find(x);
        if (it == op.end()) continue;
        for (const auto& [y, d] : it->second) out[y] += c * d;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

inline bool operators_commute(int n, int k, const WedgeOperator& a, const WedgeOperator& b) {
    for (const auto& x : detail::level_indices(n, k)) {
        WedgeVector e;
        e[x] = 1;
        if (apply_operator(a, apply_operator(b, e)) != apply_operator(b, apply_operator(a, e))) return false;
    }
    return true;
}

/// Degenerate point: at each level, prod exp(c_alpha D_alpha) applied to w_{1..k}
/// with shared c_alpha. The basis of U_k is (I + B_k) w_1..w_k with B_k the part of
/// sum c_alpha f_alpha mapping span(w_1..w_k) into span(w_{k+1}..w_2n); both
/// constructions are computed and must agree.
inline FlagPoint sample_degenerate_point(int n, std::uint64_t seed, int bound = 9, bool check_commuting = true,
                                         const std::map<Root, Rat>* fixed = nullptr) {
    FlagPoint pt;
    pt.n = n;
    pt.provenance = Provenance::degenerate;
    pt.seed = seed;
    pt.parameters = fixed ? *fixed : detail::draw_parameters(n, seed, bound);
    const std::vector<Root> roots = positive_roots(n);
    pt.levels.assign(n, {});
    for (int k = 1; k <= n; ++k) {
        std::vector<WedgeOperator> ops;
        for (const Root& a : roots) ops.push_back(degenerate_operator(n, k, a));
        if (check_commuting)
            for (size_t i = 0; i < ops.size(); ++i)
                for (size_t j = i + 1; j < ops.size(); ++j)
                    if (!operators_commute(n, k, ops[i], ops[j]))
                        throw InvariantError("degenerate operators do not commute");
        std::vector<int> top(k);
        for (int r = 0; r < k; ++r) top[r] = r + 1;
        WedgeVector v;
        v[PlueckerIndex{top}] = 1;
        for (size_t i = 0; i < roots.size(); ++i) {
            const Rat c = pt.parameters.at(roots[i]);
            WedgeVector term = v, sum = v;
            for (int e = 1; !term.empty(); ++e) {
                term = apply_operator(ops[i], term);
                for (auto& [x, val] : term) val *= c / e;
                for (const auto& [x, val] : term) sum[x] += val;
            }
            v = sum;
        }
        for (const auto& x : detail::level_indices(n, k)) {
            auto it = v.find(x);
            pt.levels[k - 1][x] = it == v.end() ? Rat(0) : it->second;
        }

        Matrix<Rat> basis(2 * n, k);
        for (int r = 0; r < k; ++r) basis(r, r) = 1;
        for (const Root& a : roots) {
            const Matrix<int> f = root_vector_matrix(n, a);
            for (int p = k + 1; p <= 2 * n; ++p)
                for (int q = 1; q <= k; ++q) basis(p - 1, q - 1) += pt.parameters.at(a) * f(p - 1, q - 1);
        }
        pt.bases.push_back(basis);
        for (const auto& x : detail::level_indices(n, k))
            if (determinant(leading_minor_matrix(basis, x.J)) != pt.levels[k - 1][x])
                throw InvariantError("wedge-operator and subspace constructions disagree");
    }
    return pt;
}

/// pr_{1,3}(U_k) isotropic for every k, and pr_{k+1} U_k inside U_{k+1} for k < n.
inline bool check_isotropy_projection(const FlagPoint& pt) {
    const int n = pt.n;
    const Matrix<Rat> psi = symplectic_form(n).cast<Rat>();
    for (int k = 1; k <= n; ++k) {
        Matrix<Rat> pr = pt.bases[k - 1];
        for (int r = k + 1; r <= 2 * n - k; ++r)
            for (int c = 0; c < k; ++c) pr(r - 1, c) = 0;
        if (!(transpose(pr) * psi * pr).is_zero()) return false;
        if (k == n) continue;
        Matrix<Rat> shifted = pt.bases[k - 1];
        for (int c = 0; c < k; ++c) shifted(k, c) = 0;
        const Matrix<Rat>& next = pt.bases[k];
        Matrix<Rat> joined(2 * n, 2 * k + 1);
        for (int r = 0; r < 2 * n; ++r) {
            for (int c = 0; c <= k; ++c) joined(r, c) = next(r, c);
            for (int c = 0; c < k; ++c) joined(r, k + 1 + c) = shifted(r, c);
        }
        if (rank(joined) != rank(next)) return false;
    }
    return true;
}

struct VanishingFailure {
    size_t relation = 0;
    std::string label;
    std::uint64_t seed = 0;
    Rat value;
};

struct VanishingReport {
    size_t relations = 0;
    size_t points = 0;
    size_t evaluations = 0;
    std::vector<VanishingFailure> failures;
    bool ok() const { return failures.empty(); }
};

inline VanishingReport check_vanishing(int n, const std::vector<Relation>& rels, const std::vector<FlagPoint>& points) {
    VanishingReport rep;
    rep.relations = rels.size();
    rep.points = points.size();
    for (size_t i = 0; i < rels.size(); ++i) {
        const Polynomial& p = rels[i].poly;
        if (p.has_s) throw DomainError("s-family relations need check_s_family");
        for (const FlagPoint& pt : points) {
            const bool match = (p.ring == Ring::classical) == (pt.provenance == Provenance::classical);
            if (!match) throw DomainError("relation ring does not match point provenance");
            const Rat v = p.evaluate([&](const PlueckerIndex& x) { return pt.coordinate(x); });
            ++rep.evaluations;
            if (v != 0) rep.failures.push_back({i, to_string(n, p), pt.seed, v});
        }
    }
    return rep;
}

/// Substitute y_J = s^{-deg J} x_J: the result as a Laurent polynomial in s,
/// exponent -> coefficient, zero coefficients dropped.
inline std::map<int, Rat> s_family_residual(const Polynomial& p, const FlagPoint& pt) {
    if (pt.provenance != Provenance::classical) throw DomainError("s-family bridge uses classical points");
    std::map<int, Rat> out;
    for (const auto& [m, c] : p.terms()) {
        Rat v = c;
        for (const auto& x : m.vars) v *= pt.coordinate(x);
        out[m.s_degree - m.pbw_degree()] += v;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
}

struct CountReport {
    Int weyl;
    size_t lattice = 0;
    size_t tableaux = 0;
    bool ok() const { return weyl == lattice && weyl == tableaux; }
};

inline CountReport check_counts(int n, const DominantWeight& w) {
    return CountReport{weyl_dimension(n, w), lattice_points(n, w).size(), enumerate_tableaux(n, w).size()};
}

struct RoundtripReport {
    size_t checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// phi then pi and pi then phi are identities, phi(p) is semistandard, pi(T) lies
/// in the polytope, and wt(phi(p)) = wt(f^p) + wt(t_lambda).
inline RoundtripReport check_roundtrip(int n, const DominantWeight& w) {
    RoundtripReport rep;
    const WeightVector top = tableau_weight(n, highest_weight_tableau(w));
    for (const MultiExponent& p : lattice_points(n, w)) {
        ++rep.checked;
        try {
            const Tableau t = monomial_to_tableau(n, w, p);
            if (!is_symplectic_pbw_semistandard(n, t)) rep.failures.push_back("phi image not semistandard");
            const auto [w2, p2] = tableau_to_monomial(n, t);
            if (!(w2 == w) || p2 != p) rep.failures.push_back("pi(phi(p)) != p");
            WeightVector expect = top;
            for (const auto& [a, e] : p)
                for (int r = 0; r < e; ++r) expect = add(expect, root_vector_weight(n, a));
            if (tableau_weight(n, t) != expect) rep.failures.push_back("weight not preserved");
        } catch (const std::exception& ex) {
            rep.failures.push_back(std::string("phi/pi raised: ") + ex.what());
        }
    }
    for (const Tableau& t : enumerate_tableaux(n, w)) {
        ++rep.checked;
        try {
            const auto [w2, p] = tableau_to_monomial(n, t);
            if (!contains(n, w2, p)) rep.failures.push_back("pi image outside polytope");
            if (monomial_to_tableau(n, w2, p) != t) rep.failures.push_back("phi(pi(T)) != T");
        } catch (const std::exception& ex) {
            rep.failures.push_back(std::string("pi/phi raised: ") + ex.what());
        }
    }
    return rep;
}

}  // namespace sympbw
