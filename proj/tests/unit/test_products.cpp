#include "excess/agring.hpp"
#include "excess/error.hpp"
#include "excess/products.hpp"

#include <gtest/gtest.h>

#include <set>

namespace excess {
namespace {

Poly P(const char* s) { return Poly::parse(s); }

std::multiset<Partition> sigmas(const Partition& p, const Partition& q) {
    std::multiset<Partition> s;
    for (const auto& c : extremal_refinements(p, q)) s.insert(make_partition(c.sigma));
    return s;
}

TEST(Products, Partitions) {
    EXPECT_EQ(partitions(4).size(), 5u);
    EXPECT_EQ(partitions(8).size(), 22u);
    EXPECT_EQ(make_partition({1, 3, 2}), (Partition{3, 2, 1}));
    EXPECT_THROW(make_partition({}), std::invalid_argument);
    EXPECT_THROW(make_partition({2, 0}), std::invalid_argument);
}

TEST(Products, RefinementsOfHyperellipticTypeSplits) {
    for (int g = 4; g <= 8; ++g)
        for (int k = 2; k < g - 1; ++k) {
            const auto s = sigmas({g - 1, 1}, make_partition({k, g - k}));
            if (g == 2 * k) {
                EXPECT_EQ(s.size(), 1u);
            } else {
                EXPECT_EQ(s, (std::multiset<Partition>{make_partition({1, k - 1, g - k}), make_partition({1, k, g - k - 1})}));
            }
        }
}

TEST(Products, SelfIntersection) {
    EXPECT_EQ(extremal_refinements({1, 1}, {1, 1}).size(), 1u);
    for (int g = 3; g <= 7; ++g) {
        const auto comps = extremal_refinements({g - 1, 1}, {g - 1, 1});
        EXPECT_EQ(comps.size(), 2u) << g;
        bool found = false;
        for (const auto& c : comps)
            if (make_partition(c.sigma) == Partition{g - 1, 1}) {
                ASSERT_EQ(c.excess_bundle.size(), 1u);
                const auto [a, b] = c.excess_bundle[0];
                found = std::min(a, b) == 1 && std::max(a, b) == g - 1;
            }
        EXPECT_TRUE(found) << g;
    }
}

TEST(Products, RefinementMargins) {
    for (const auto& p : partitions(6))
        for (const auto& q : partitions(6))
            for (const auto& c : extremal_refinements(p, q)) {
                std::vector<int> rows(p.size()), cols(q.size());
                for (std::size_t a = 0; a < c.sigma.size(); ++a) {
                    rows.at(static_cast<std::size_t>(c.row[a])) += c.sigma[a];
                    cols.at(static_cast<std::size_t>(c.col[a])) += c.sigma[a];
                }
                EXPECT_EQ(rows, p);
                EXPECT_EQ(cols, q);
            }
    EXPECT_THROW(extremal_refinements({2, 1}, {2, 2}), GenusMismatch);
}

TEST(Products, EulerTensorSmallCase) {
    EXPECT_EQ(euler_tensor(1, 1), P("lambda1{0} + lambda1{1}"));
    EXPECT_THROW(euler_tensor(0, 1), std::invalid_argument);
}

TEST(Products, EulerTensorMatchesRootExpansion) {
    for (auto [a, b] : std::vector<std::pair<int, int>>{{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}, {3, 4}, {2, 5}})
        EXPECT_EQ(euler_tensor(a, b), euler_tensor_by_roots(a, b)) << a << "x" << b;
    EXPECT_THROW(euler_tensor_by_roots(4, 4), RankTooLarge);
}

TEST(Products, EulerTensorDegree) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b) {
            const Poly e = euler_tensor(a, b);
            EXPECT_TRUE(e.is_homogeneous());
            EXPECT_EQ(e.degree(), a * b);
        }
}

TEST(Products, EulerTensorReducesToZero) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b) EXPECT_TRUE(euler_tensor_reduce(a, b).is_zero()) << a << "x" << b;
}

TEST(Products, ZeroIntersections) {
    for (int g = 2; g <= 6; ++g)
        for (const auto& p : partitions(g))
            for (const auto& q : partitions(g))
                if (p.size() >= 2 && q.size() >= 2) {
                    EXPECT_TRUE(zeroint_check(p, q)) << g;
                }
    EXPECT_THROW(zeroint_check({3}, {2, 1}), std::invalid_argument);
}

TEST(Products, HodgeSplitRaw) {
    EXPECT_EQ(hodge_split_pullback(3, {1, 2}, 1, false), P("lambda1{0} + lambda1{1}"));
    EXPECT_EQ(hodge_split_pullback(3, {1, 2}, 1, true), P("lambda1{1}"));
}

TEST(Products, HodgeSplitKillsLambdaGMinusOne) {
    for (int g = 2; g <= 10; ++g)
        for (int g1 = 1; 2 * g1 <= g; ++g1)
            EXPECT_TRUE(hodge_split_pullback(g, make_partition({g1, g - g1}), g - 1).is_zero()) << g << "," << g1;
    EXPECT_FALSE(hodge_split_pullback(6, {3, 3}, 4).is_zero());
    EXPECT_THROW(hodge_split_pullback(5, {2, 2}, 4), GenusMismatch);
}

}  // namespace
}  // namespace excess
