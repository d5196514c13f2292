#include <gtest/gtest.h>

#include "goldens.hpp"
#include "sympbw/relations.hpp"

using namespace sympbw;

TEST(Exchange, RankTwoExamples) {
    EXPECT_EQ(pluecker_relation(2, {1, 2}, {3, 4}, 1).poly,
              parse_polynomial(2, "X_{1,2}X_{2',1'} - X_{1,2'}X_{2,1'} + X_{1,1'}X_{2,2'}"));
    EXPECT_EQ(pluecker_relation(2, {1, 2}, {3}, 1).poly,
              parse_polynomial(2, "X_{1,2}X_{2'} + X_{2,2'}X_{1} - X_{1,2'}X_{2}"));
}

TEST(Exchange, FullExchangeOfEqualSizesIsZero) {
    // t = |L| = |J| swaps the whole columns back onto themselves.
    EXPECT_TRUE(exchange_relation({1, 2}, {3, 4}, 2).is_zero());
    EXPECT_TRUE(exchange_relation({1}, {2}, 1).is_zero());
}

TEST(Exchange, RejectsBadArguments) {
    EXPECT_THROW(pluecker_relation(2, {1}, {2, 3}, 1), DomainError);
    EXPECT_THROW(pluecker_relation(2, {2, 1}, {3}, 1), DomainError);
    EXPECT_THROW(pluecker_relation(2, {1, 2}, {3}, 2), DomainError);
}

TEST(Symplectic, Examples) {
    EXPECT_EQ(symplectic_relation(2, {{1}, {1}}).poly, parse_polynomial(2, "X_{1,1'} + X_{2,2'}"));
    EXPECT_EQ(symplectic_relation(3, {{1}, {1}}).poly, parse_polynomial(3, "X_{1,1'} + X_{2,2'} + X_{3,3'}"));
    const Polynomial s4 = symplectic_relation(4, {{1, 2}, {1, 2}}).poly;
    const Polynomial want = Polynomial::from_sequence({7, 2, 8, 1}) + Polynomial::from_sequence({6, 3, 8, 1}) +
                            Polynomial::from_sequence({5, 4, 8, 1});
    EXPECT_EQ(s4, want);
    EXPECT_THROW(symplectic_relation(4, {{2}, {1, 3}}), DomainError);
}

TEST(Symplectic, ExpansionText) {
    const SymplecticExpansion e = symplectic_expansion(4, {{1, 2}, {1, 2}});
    EXPECT_EQ(format_expansion(4, e), goldens::expansion_n4);
    EXPECT_EQ(format_expansion(4, e, false), goldens::expansion_n4_unicode);
    EXPECT_EQ(e.coefficient, -1);
    EXPECT_EQ(e.terms.size(), 2u);
}

// The head variable has the smallest PBW-degree among the terms of S, and coefficient +1.
TEST(Symplectic, HeadHasMinimalDegree) {
    for (int n = 1; n <= 5; ++n)
        for (const Minor& m : all_minors(n)) {
            if (is_reverse_admissible(n, m)) continue;
            const Polynomial s = symplectic_relation(n, m).poly;
            const PlueckerIndex head = normalize_index(computed_minor(n, m)).index;
            EXPECT_EQ(s.coefficient(Monomial{{head}, 0}), 1);
            EXPECT_EQ(pbw_degree_index(head), pbw_degree_minor(n, m));
            EXPECT_EQ(s.min_pbw_degree(), pbw_degree_minor(n, m));
        }
}

// Every term of an expansion is a minor of the same size, built from the same I1 \ I2 and I2 \ I1.
TEST(Symplectic, ExpansionTermsShareTheOffDiagonalPart) {
    for (int n = 2; n <= 5; ++n)
        for (const Minor& m : all_minors(n)) {
            if (is_reverse_admissible(n, m)) continue;
            const SymplecticExpansion e = symplectic_expansion(n, m);
            EXPECT_FALSE(e.terms.empty());
            for (const Minor& t : e.terms) {
                EXPECT_EQ(t.k(), m.k());
                EXPECT_EQ(detail::set_difference(t.I1, t.I2), detail::set_difference(m.I1, m.I2));
                EXPECT_EQ(detail::set_difference(t.I2, t.I1), detail::set_difference(m.I2, m.I1));
            }
        }
}

TEST(Degenerate, Components) {
    const Polynomial r = pluecker_relation(2, {1, 2}, {3}, 1).poly;
    EXPECT_EQ(degenerate_component(r), parse_polynomial(2, "X^a_{1,2}X^a_{2'} + X^a_{2,2'}X^a_{1}"));
    const Polynomial s = symplectic_relation(2, {{1}, {1}}).poly;
    EXPECT_EQ(degenerate_component(s), s.retagged(Ring::degenerate));
}

TEST(SFamily, DeformationAndSpecializations) {
    const Polynomial r = pluecker_relation(2, {1, 2}, {3}, 1).poly;
    const Polynomial d = s_deformed(r);
    EXPECT_EQ(d, parse_polynomial(2, "X_{1,2}X_{2'} - sX_{1,2'}X_{2} + X_{2,2'}X_{1}"));
    EXPECT_EQ(specialize_s(d, 1), r);
    EXPECT_EQ(specialize_s(d, 0), degenerate_component(r));
    EXPECT_THROW(specialize_s(d, 2), DomainError);
}

TEST(Ideal, RankTwoClassicalMatchesPrintedList) {
    const auto gens = generate_ideal(2, IdealKind::classical);
    EXPECT_EQ(gens.size(), 6u);
    EXPECT_EQ(goldens::normalized(gens), goldens::normalized(2, goldens::classical_n2));
}

TEST(Ideal, RankTwoDegenerateMatchesPrintedList) {
    const auto gens = generate_ideal(2, IdealKind::degenerate);
    EXPECT_EQ(gens.size(), 6u);
    EXPECT_EQ(goldens::normalized(gens), goldens::normalized(2, goldens::degenerate_n2));
    for (const auto& r : gens) EXPECT_TRUE(r.poly.is_pbw_homogeneous());
}

TEST(Ideal, SFamilySpecializesToBothIdeals) {
    for (int n = 2; n <= 3; ++n) {
        const auto fam = generate_ideal(n, IdealKind::s_family);
        std::vector<Relation> one, zero;
        for (Relation r : fam) {
            Relation a = r, b = r;
            a.poly = specialize_s(r.poly, 1);
            b.poly = specialize_s(r.poly, 0);
            one.push_back(a);
            zero.push_back(b);
        }
        EXPECT_EQ(goldens::normalized(one), goldens::normalized(generate_ideal(n, IdealKind::classical)));
        EXPECT_EQ(goldens::normalized(zero), goldens::normalized(generate_ideal(n, IdealKind::degenerate)));
    }
}

TEST(Ideal, RankOneIsEmpty) {
    EXPECT_TRUE(generate_ideal(1, IdealKind::classical).empty());
    EXPECT_THROW(generate_ideal(6, IdealKind::classical), DomainError);
}

TEST(Ideal, GeneratorsAreDistinctUpToSign) {
    const auto gens = generate_ideal(3, IdealKind::classical);
    EXPECT_EQ(goldens::normalized(gens).size(), gens.size());
    for (const auto& r : gens) EXPECT_FALSE(r.poly.is_zero());
}
