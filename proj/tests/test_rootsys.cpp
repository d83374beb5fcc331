#include "contactlie/rootsys.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace contactlie;

namespace {

// Closure of the simple roots under s_i(b) = b - <b, a_i^vee> a_i.
std::set<Root> reflection_closure(const std::vector<std::vector<int>>& a)
{
    const std::size_t r = a.size();
    std::set<Root> roots;
    std::vector<Root> todo;
    for (std::size_t i = 0; i < r; ++i) {
        Root e(r, 0);
        e[i] = 1;
        todo.push_back(e);
    }
    while (!todo.empty()) {
        Root b = todo.back();
        todo.pop_back();
        if (!roots.insert(b).second) continue;
        for (std::size_t i = 0; i < r; ++i) {
            int pair = 0;
            for (std::size_t j = 0; j < r; ++j) pair += b[j] * a[j][i];
            Root s = b;
            s[i] -= pair;
            if (!roots.count(s)) todo.push_back(s);
        }
    }
    return roots;
}

}  // namespace

TEST(RootSystem, A1)
{
    const RootSystem rs(CartanMatrix::of_type("A1"));
    EXPECT_EQ(rs.size(), 2u);
    EXPECT_EQ(rs.highest(), Root{1});
    EXPECT_TRUE(rs.contains(Root{-1}));
}

TEST(RootSystem, A2)
{
    const RootSystem rs(CartanMatrix::of_type("A2"));
    EXPECT_EQ(rs.size(), 6u);
    EXPECT_EQ(rs.highest(), (Root{1, 1}));
}

TEST(RootSystem, G2)
{
    const CartanMatrix c = CartanMatrix::of_type("G2");
    EXPECT_EQ(c(0, 1), -1);
    EXPECT_EQ(c(1, 0), -3);
    const RootSystem rs(c);
    EXPECT_EQ(rs.size(), 12u);
    EXPECT_EQ(rs.highest(), (Root{3, 2}));
    // alpha_1 short
    EXPECT_LT(rs.pairing({1, 0}, {1, 0}), rs.pairing({0, 1}, {0, 1}));
}

class ShippedTypes : public ::testing::TestWithParam<std::string> {};

TEST_P(ShippedTypes, MatchesReflectionClosure)
{
    const CartanMatrix c = CartanMatrix::of_type(GetParam());
    const RootSystem rs(c);
    const std::set<Root> oracle = reflection_closure(c.entries());
    const std::set<Root> built(rs.roots().begin(), rs.roots().end());
    EXPECT_EQ(built, oracle);
    EXPECT_EQ(rs.size() % 2, 0u);
}

TEST_P(ShippedTypes, PositivityAndHighestRoot)
{
    const RootSystem rs(CartanMatrix::of_type(GetParam()));
    for (std::size_t k = 0; k < rs.size(); ++k) {
        const Root& a = rs.roots()[k];
        EXPECT_EQ(rs.is_positive(k), lex_positive(a));
        EXPECT_EQ(rs.roots()[rs.negative_of(k)], negate(a));
        if (rs.is_positive(k))
            for (std::size_t i = 0; i < a.size(); ++i) EXPECT_GE(rs.highest()[i] - a[i], 0);
    }
}

TEST_P(ShippedTypes, RhoHeights)
{
    const RootSystem rs(CartanMatrix::of_type(GetParam()));
    int twos = 0;
    for (const auto& a : rs.roots()) {
        const int h = rs.rho_height(a);
        EXPECT_GE(h, -2);
        EXPECT_LE(h, 2);
        if (h == 2) {
            ++twos;
            EXPECT_EQ(a, rs.highest());
        }
        if (h == -2) EXPECT_EQ(a, negate(rs.highest()));
    }
    EXPECT_EQ(twos, 1);
}

INSTANTIATE_TEST_SUITE_P(All, ShippedTypes, ::testing::Values("A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"));

TEST(RootSystem, RhoHeightExamples)
{
    const RootSystem a2(CartanMatrix::of_type("A2"));
    EXPECT_EQ(a2.rho_height({1, 1}), 2);
    EXPECT_EQ(a2.rho_height({1, 0}), 1);
    const RootSystem g2(CartanMatrix::of_type("G2"));
    EXPECT_EQ(g2.rho_height({1, 0}), 0);
    EXPECT_EQ(g2.rho_height({0, 1}), 1);
    EXPECT_THROW(a2.rho_height({2, 1}), std::invalid_argument);
}

TEST(RootSystem, RootCounts)
{
    const std::map<std::string, std::size_t> expected{{"A1", 2}, {"A2", 6}, {"A3", 12}, {"B2", 8},
                                                      {"C2", 8}, {"B3", 18}, {"C3", 18}, {"G2", 12}};
    for (const auto& [t, n] : expected) EXPECT_EQ(RootSystem(CartanMatrix::of_type(t)).size(), n) << t;
}

TEST(CartanMatrix, Validation)
{
    EXPECT_THROW(CartanMatrix({{2, -1}, {0, 2}}), std::invalid_argument);  // asymmetric zero pattern
    EXPECT_THROW(CartanMatrix({{2, -2}, {-2, 2}}), std::invalid_argument);  // affine A1
    EXPECT_THROW(CartanMatrix({{1, 0}, {0, 2}}), std::invalid_argument);
    EXPECT_THROW(CartanMatrix::of_type("E8"), std::invalid_argument);
    EXPECT_NO_THROW(CartanMatrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
}

TEST(CartanMatrix, Symmetrizer)
{
    for (const auto& t : CartanMatrix::shipped_types()) {
        const CartanMatrix c = CartanMatrix::of_type(t);
        for (std::size_t i = 0; i < c.rank(); ++i)
            for (std::size_t j = 0; j < c.rank(); ++j) EXPECT_EQ(c.simple_pairing(i, j), c.simple_pairing(j, i)) << t;
    }
}
