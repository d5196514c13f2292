#include <gtest/gtest.h>

#include <set>

#include "sympbw/tableaux.hpp"

using namespace sympbw;

namespace {

// Letters for n = 2: 2bar = 3, 1bar = 4.
Tableau t21(Column a, Column b) { return Tableau{{2, 1}, {std::move(a), std::move(b)}}; }

}  // namespace

TEST(Columns, PbwConditions) {
    EXPECT_TRUE(is_pbw_column({1, 2}));
    EXPECT_TRUE(is_pbw_column({4, 3}));
    EXPECT_TRUE(is_pbw_column({3, 2}));
    EXPECT_FALSE(is_pbw_column({3, 4}));  // moved entries must descend
    EXPECT_FALSE(is_pbw_column({2, 1}));  // small entries sit at their position
    EXPECT_TRUE(is_pbw_column({1, 5, 4}));
}

TEST(Columns, SymplecticConditionForbidsIBarBelowI) {
    EXPECT_TRUE(is_pbw_column({1, 4}));
    EXPECT_FALSE(is_symplectic_pbw_column(2, {1, 4}));
    EXPECT_TRUE(is_symplectic_pbw_column(2, {4, 2}));
    EXPECT_FALSE(is_symplectic_pbw_column(3, {1, 2, 5}));
    EXPECT_TRUE(is_symplectic_pbw_column(3, {5, 2, 4}));
}

TEST(Columns, PbwColumnIsUniqueArrangement) {
    EXPECT_EQ(pbw_column({3, 1}), (Column{1, 3}));
    EXPECT_EQ(pbw_column({2, 3}), (Column{3, 2}));
    EXPECT_EQ(pbw_column({6, 2, 4}), (Column{6, 2, 4}));
    for (int k = 1; k <= 4; ++k)
        for (const Column& c : enumerate_columns(4, k, false)) {
            EXPECT_TRUE(is_pbw_column(c));
            EXPECT_EQ(pbw_column(c), c);
        }
}

// Oracle: dim of the fundamental representation counts the symplectic columns.
TEST(Columns, CountsMatchFundamentalDimensions) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= n; ++k)
            EXPECT_EQ(weyl_dimension(n, DominantWeight::fundamental(n, k)),
                      static_cast<long>(enumerate_columns(n, k, true).size()));
}

TEST(Columns, RankThreeOmega3) {
    const std::vector<Column> want{{1, 2, 3}, {1, 2, 4}, {1, 4, 3}, {1, 5, 3}, {1, 5, 4},
                                   {4, 2, 3}, {5, 2, 3}, {5, 2, 4}, {5, 4, 3}, {6, 2, 3},
                                   {6, 2, 4}, {6, 4, 3}, {6, 5, 3}, {6, 5, 4}};
    EXPECT_EQ(enumerate_columns(3, 3, true), want);
}

TEST(Tableaux, RankTwoOmega1PlusOmega2) {
    const std::vector<Tableau> want{
        t21({1, 2}, {1}), t21({1, 2}, {2}), t21({1, 3}, {1}), t21({1, 3}, {2}),
        t21({1, 3}, {3}), t21({3, 2}, {1}), t21({3, 2}, {2}), t21({3, 2}, {3}),
        t21({4, 2}, {1}), t21({4, 2}, {2}), t21({4, 2}, {3}), t21({4, 2}, {4}),
        t21({4, 3}, {1}), t21({4, 3}, {2}), t21({4, 3}, {3}), t21({4, 3}, {4})};
    const auto got = enumerate_tableaux(2, DominantWeight{{1, 1}});
    EXPECT_EQ(std::set<Tableau>(got.begin(), got.end()), std::set<Tableau>(want.begin(), want.end()));
    EXPECT_EQ(got.size(), 16u);
    for (const Tableau& t : want) EXPECT_TRUE(is_symplectic_pbw_semistandard(2, t));
}

TEST(Tableaux, RankTwoRejectedByColumnCondition) {
    for (const Tableau& t : {t21({1, 2}, {3}), t21({1, 2}, {4}), t21({1, 3}, {4}), t21({3, 2}, {4})}) {
        EXPECT_TRUE(is_symplectic_pbw(2, t));
        EXPECT_FALSE(is_symplectic_pbw_semistandard(2, t));
    }
    EXPECT_EQ(first_violating_row({1, 2}, {3}), 1);
    EXPECT_EQ(first_violating_row({4, 2}, {4}), 0);
}

// Oracle: |SyST_lambda| equals the Weyl dimension.
TEST(Tableaux, CountsMatchWeylDimension) {
    for (int n = 1; n <= 3; ++n)
        for (int a = 0; a <= 2; ++a)
            for (int b = 0; b <= 2; ++b)
                for (int c = 0; c <= 1; ++c) {
                    std::vector<int> m{a, b, c};
                    m.resize(n);
                    const DominantWeight w{m};
                    EXPECT_EQ(weyl_dimension(n, w), static_cast<long>(enumerate_tableaux(n, w).size()))
                        << "n=" << n << " m=" << a << b << c;
                }
}

TEST(Tableaux, TypeAContainsSymplectic) {
    const auto a = enumerate_tableaux_typeA(2, {2, 1});
    const auto c = enumerate_tableaux(2, DominantWeight{{1, 1}});
    const std::set<Tableau> sa(a.begin(), a.end());
    for (const Tableau& t : c) EXPECT_TRUE(sa.count(t));
    EXPECT_TRUE(sa.count(t21({1, 4}, {1})));
}

TEST(Tableaux, WeightAndHighestWeight) {
    const Tableau hw = highest_weight_tableau(DominantWeight{{1, 0, 1}});
    EXPECT_EQ(hw.shape, (std::vector<int>{2, 1, 1}));
    EXPECT_EQ(hw.columns, (std::vector<Column>{{1, 2, 3}, {1}}));
    EXPECT_EQ(tableau_weight(3, hw), (WeightVector{2, 1, 1}));
    EXPECT_EQ(tableau_weight(2, t21({4, 3}, {3})), (WeightVector{-1, -2}));
}

TEST(Tableaux, RequireRejectsMalformed) {
    EXPECT_THROW(require_tableau(4, Tableau{{2, 1}, {{1, 2}}}), DomainError);
    EXPECT_THROW(require_tableau(4, Tableau{{2, 1}, {{1, 5}, {1}}}), DomainError);
    EXPECT_THROW(require_tableau(4, Tableau{{1, 2}, {{1}, {1, 2}}}), DomainError);
}

TEST(Tableaux, Rendering) {
    EXPECT_EQ(to_string(2, t21({4, 3}, {3})), "1' 2'\n2'\n");
}
