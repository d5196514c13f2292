#include <gtest/gtest.h>

#include "sympbw/straighten.hpp"
#include "sympbw/verify.hpp"

using namespace sympbw;

namespace {

std::vector<PlueckerIndex> all_indices(int n) {
    std::vector<PlueckerIndex> out;
    for (int k = 1; k <= n; ++k)
        for (const auto& x : detail::level_indices(n, k)) out.push_back(x);
    return out;
}

std::vector<FlagPoint> points(int n, Ring ring, int count) {
    std::vector<FlagPoint> out;
    for (int s = 0; s < count; ++s)
        out.push_back(ring == Ring::classical ? sample_classical_flag(n, 100 + s) : sample_degenerate_point(n, 100 + s));
    return out;
}

Rat value(const Polynomial& p, const FlagPoint& pt) {
    return p.evaluate([&](const PlueckerIndex& x) { return pt.coordinate(x); });
}

}  // namespace

TEST(Orders, MinorOrder) {
    EXPECT_EQ(minor_order_compare({1, 2}, {1, 3}), std::strong_ordering::less);
    // Equal sums: the last nonzero entry of L - J decides, positive means below.
    EXPECT_EQ(minor_order_compare({1, 4}, {2, 3}), std::strong_ordering::less);
    EXPECT_EQ(minor_order_compare({2, 3}, {2, 3}), std::strong_ordering::equal);
}

// Every strict step of the total order is witnessed in the positional order.
TEST(Orders, TableauOrderRefinesPositionalOrder) {
    const auto tabs = enumerate_tableaux_typeA(2, {2, 1});
    for (const Tableau& a : tabs)
        for (const Tableau& b : tabs)
            EXPECT_TRUE(!(tableau_order_compare(a, b) > 0) || positional_greater(a, b));
}

TEST(Arrange, LongerColumnsFirst) {
    const Tableau t = arrange({PlueckerIndex{{3}}, PlueckerIndex{{1, 4}}});
    EXPECT_EQ(t.shape, (std::vector<int>{2, 1}));
    EXPECT_EQ(t.columns, (std::vector<Column>{{1, 4}, {3}}));
    EXPECT_FALSE(is_standard(2, {PlueckerIndex{{1, 4}}}));
    EXPECT_TRUE(is_standard(2, {PlueckerIndex{{2, 3}}}));
}

TEST(Straighten, DegenerateSymplecticExample) {
    const Straightener s(2, Ring::degenerate);
    const StraightenResult r = s.straighten(Monomial{{PlueckerIndex{{1, 4}}}, 0});
    EXPECT_EQ(r.polynomial, parse_polynomial(2, "-X^a_{2,2'}"));
    ASSERT_EQ(r.combination.size(), 1u);
    EXPECT_EQ(r.combination.begin()->first.columns, (std::vector<Column>{{3, 2}}));
    EXPECT_EQ(r.combination.begin()->second, -1);
}

TEST(Straighten, ClassicalProductAgreesOnPoints) {
    const Straightener s(2, Ring::classical);
    const Polynomial in = parse_polynomial(2, "X_{1,1'}X_{2'}");
    const StraightenResult r = s.straighten(in);
    for (const FlagPoint& pt : points(2, Ring::classical, 20)) EXPECT_EQ(value(r.polynomial, pt), value(in, pt));
}

TEST(Straighten, RejectsBadInput) {
    const Straightener s(2, Ring::classical);
    Polynomial p(Ring::classical, true);
    p.add_term(Monomial{{PlueckerIndex{{1}}}, 1}, 1);
    EXPECT_THROW(s.straighten(p), DomainError);
    EXPECT_THROW(s.straighten(Monomial{{PlueckerIndex{{1, 2, 3}}}, 0}), DomainError);
}

// All degree-two monomials: standard support, value preserved, every step descends,
// and straightening the output changes nothing.
class DegreeTwo : public ::testing::TestWithParam<std::tuple<int, Ring>> {};

TEST_P(DegreeTwo, StraighteningIsSound) {
    const auto [n, ring] = GetParam();
    const Straightener s(n, ring);
    const auto pts = points(n, ring, 3);
    const auto idx = all_indices(n);
    for (size_t a = 0; a < idx.size(); ++a)
        for (size_t b = a; b < idx.size(); ++b) {
            const Monomial m = make_monomial({idx[a], idx[b]});
            const StraightenResult r = s.straighten(m, true);
            for (const auto& [t, c] : r.polynomial.terms()) EXPECT_TRUE(is_standard(n, t.vars));
            for (const auto& [t, c] : r.combination) EXPECT_TRUE(is_symplectic_pbw_semistandard(n, t));
            for (const RewriteStep& step : r.trace)
                for (const Monomial& out : step.produced) EXPECT_TRUE(measure_compare(out, step.source) < 0);
            Polynomial in(ring);
            in.add_term(m, 1);
            for (const FlagPoint& pt : pts) EXPECT_EQ(value(r.polynomial, pt), value(in, pt));
            EXPECT_EQ(s.straighten(r.polynomial).polynomial, r.polynomial);
            EXPECT_TRUE(!is_standard(n, m.vars) || r.trace.empty());
        }
}

INSTANTIATE_TEST_SUITE_P(Small, DegreeTwo,
                         ::testing::Combine(::testing::Values(2, 3),
                                            ::testing::Values(Ring::classical, Ring::degenerate)),
                         [](const auto& info) {
                             return "n" + std::to_string(std::get<0>(info.param)) + "_" +
                                    to_string(std::get<1>(info.param));
                         });

// Oracle: the standard monomials of one multidegree span a space of dimension at
// most |SyST|; since straightening succeeds they span everything, so for degree
// omega_1 + omega_2 the number of distinct standard outputs is |SyST|.
TEST(Straighten, StandardMonomialsOfOneShapeAreTheTableaux) {
    for (Ring ring : {Ring::classical, Ring::degenerate}) {
        const Straightener s(2, ring);
        std::set<Tableau> seen;
        for (const auto& x : detail::level_indices(2, 2))
            for (const auto& y : detail::level_indices(2, 1))
                for (const auto& [t, c] : s.straighten(make_monomial({x, y})).combination) seen.insert(t);
        const auto tabs = enumerate_tableaux(2, DominantWeight{{1, 1}});
        EXPECT_EQ(seen, std::set<Tableau>(tabs.begin(), tabs.end()));
    }
}
