#include <gtest/gtest.h>

#include <random>

#include "goldens.hpp"
#include "sympbw/verify.hpp"

using namespace sympbw;

namespace {

// Oracle for classical points, independent of the root-vector construction: a
// product of symplectic transvections x -> x + c <x, v> v with random integer v.
std::map<PlueckerIndex, Rat> transvection_point(int n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(-3, 3);
    const Matrix<Rat> psi = symplectic_form(n).cast<Rat>();
    Matrix<Rat> g = Matrix<Rat>::identity(2 * n);
    for (int step = 0; step < 3 * n; ++step) {
        Matrix<Rat> v(2 * n, 1);
        for (int r = 0; r < 2 * n; ++r) v(r, 0) = dist(rng);
        const Rat c = dist(rng);
        // T = I + c v v^T Psi^T, so that <Tx, Ty> = <x, y>.
        Matrix<Rat> t = Matrix<Rat>::identity(2 * n) + c * (v * transpose(v) * transpose(psi));
        g = t * g;
    }
    EXPECT_EQ(transpose(g) * psi * g, psi);
    std::map<PlueckerIndex, Rat> out;
    for (int k = 1; k <= n; ++k) {
        Matrix<Rat> b(2 * n, k);
        for (int r = 0; r < 2 * n; ++r)
            for (int col = 0; col < k; ++col) b(r, col) = g(r, col);
        for (const auto& x : detail::level_indices(n, k)) out[x] = determinant(leading_minor_matrix(b, x.J));
    }
    return out;
}

std::map<Root, Rat> zero_parameters(int n) {
    std::map<Root, Rat> c;
    for (const Root& a : positive_roots(n)) c[a] = 0;
    return c;
}

}  // namespace

TEST(Samples, ZeroParametersGiveHighestWeightPoint) {
    for (int n = 1; n <= 3; ++n) {
        const auto c = zero_parameters(n);
        for (const FlagPoint& pt : {sample_classical_flag(n, 0, 9, &c), sample_degenerate_point(n, 0, 9, true, &c)})
            for (int k = 1; k <= n; ++k)
                for (const auto& [x, v] : pt.levels[k - 1]) {
                    std::vector<int> top(k);
                    std::iota(top.begin(), top.end(), 1);
                    EXPECT_EQ(v, x.J == top ? 1 : 0);
                }
    }
}

TEST(Samples, GroupElementIsSymplectic) {
    for (int n = 1; n <= 4; ++n) {
        const auto c = detail::draw_parameters(n, 7, 9);
        const Matrix<Rat> M = classical_group_element(n, c);
        const Matrix<Rat> psi = symplectic_form(n).cast<Rat>();
        EXPECT_EQ(transpose(M) * psi * M, psi);
    }
}

TEST(Samples, DeterministicInTheSeed) {
    EXPECT_EQ(sample_classical_flag(3, 5).levels, sample_classical_flag(3, 5).levels);
    EXPECT_NE(sample_classical_flag(3, 5).levels, sample_classical_flag(3, 6).levels);
    EXPECT_EQ(sample_degenerate_point(3, 5).levels, sample_degenerate_point(3, 5).levels);
}

TEST(Classical, RelationsVanishOnTransvectionPoints) {
    for (int n = 2; n <= 3; ++n) {
        const auto rels = generate_ideal(n, IdealKind::classical);
        for (unsigned seed = 1; seed <= 4; ++seed) {
            const auto pt = transvection_point(n, seed);
            for (const auto& r : rels) EXPECT_EQ(r.poly.evaluate(pt), 0) << to_string(n, r.poly);
        }
    }
}

TEST(Classical, RelationsVanishOnSampledPoints) {
    for (int n = 2; n <= 3; ++n) {
        std::vector<FlagPoint> pts;
        for (int s = 0; s < 5; ++s) pts.push_back(sample_classical_flag(n, s));
        const VanishingReport rep = check_vanishing(n, generate_ideal(n, IdealKind::classical), pts);
        EXPECT_TRUE(rep.ok());
        EXPECT_EQ(rep.evaluations, rep.relations * rep.points);
    }
}

TEST(Classical, PerturbedRelationDoesNotVanish) {
    Relation r = symplectic_relation(2, {{1}, {1}});
    r.poly += Polynomial::variable(PlueckerIndex{{1, 2}});
    const VanishingReport rep = check_vanishing(2, {r}, {sample_classical_flag(2, 3)});
    EXPECT_FALSE(rep.ok());
}

TEST(Classical, RingMismatchIsRejected) {
    EXPECT_THROW(check_vanishing(2, generate_ideal(2, IdealKind::degenerate), {sample_classical_flag(2, 1)}),
                 DomainError);
}

TEST(Degenerate, OperatorExample) {
    const WedgeOperator op = degenerate_operator(2, 1, Root{1, 1});
    ASSERT_TRUE(op.count(PlueckerIndex{{1}}));
    const auto& image = op.at(PlueckerIndex{{1}});
    ASSERT_EQ(image.size(), 1u);
    EXPECT_EQ(image.begin()->first, PlueckerIndex{{2}});
    EXPECT_EQ(image.begin()->second, 1);
    WedgeVector w;
    w[PlueckerIndex{{1}}] = 1;
    EXPECT_EQ(apply_operator(op, w), (WedgeVector{{PlueckerIndex{{2}}, Rat(1)}}));
}

TEST(Degenerate, OperatorsCommute) {
    for (int n = 2; n <= 3; ++n)
        for (int k = 1; k <= n; ++k) {
            std::vector<WedgeOperator> ops;
            for (const Root& a : positive_roots(n)) ops.push_back(degenerate_operator(n, k, a));
            for (size_t a = 0; a < ops.size(); ++a)
                for (size_t b = a + 1; b < ops.size(); ++b) EXPECT_TRUE(operators_commute(n, k, ops[a], ops[b]));
        }
}

TEST(Degenerate, RelationsVanishAndProjectionsAreIsotropic) {
    for (int n = 2; n <= 3; ++n) {
        std::vector<FlagPoint> pts;
        for (int s = 0; s < 5; ++s) pts.push_back(sample_degenerate_point(n, s));
        EXPECT_TRUE(check_vanishing(n, generate_ideal(n, IdealKind::degenerate), pts).ok());
        for (const FlagPoint& pt : pts) EXPECT_TRUE(check_isotropy_projection(pt));
    }
}

TEST(Degenerate, PrintedRelationVanishes) {
    const Polynomial s = parse_polynomial(2, goldens::degenerate_n2.back());
    for (int seed = 0; seed < 10; ++seed) {
        const FlagPoint pt = sample_degenerate_point(2, seed);
        EXPECT_EQ(s.evaluate([&](const PlueckerIndex& x) { return pt.coordinate(x); }), 0);
    }
}

// Classical points are not degenerate points: the projection test must catch them.
TEST(Degenerate, IsotropyFailsOnClassicalPoints) {
    for (int n = 2; n <= 3; ++n) {
        bool any_fail = false;
        for (int s = 0; s < 5; ++s) any_fail = any_fail || !check_isotropy_projection(sample_classical_flag(n, s));
        EXPECT_TRUE(any_fail);
    }
}

TEST(SFamily, ResidualVanishes) {
    for (int n = 2; n <= 3; ++n) {
        const auto fam = generate_ideal(n, IdealKind::s_family);
        for (int s = 0; s < 4; ++s) {
            const FlagPoint pt = sample_classical_flag(n, s);
            for (const auto& r : fam) EXPECT_TRUE(s_family_residual(r.poly, pt).empty()) << to_string(n, r.poly);
        }
    }
}

TEST(Reports, CountsAndRoundtrip) {
    EXPECT_TRUE(check_counts(2, DominantWeight{{1, 1}}).ok());
    EXPECT_EQ(check_counts(3, DominantWeight{{0, 0, 1}}).tableaux, 14u);
    const RoundtripReport rt = check_roundtrip(3, DominantWeight{{1, 1, 1}});
    EXPECT_TRUE(rt.ok());
    EXPECT_EQ(rt.checked, 2 * check_counts(3, DominantWeight{{1, 1, 1}}).tableaux);
}
