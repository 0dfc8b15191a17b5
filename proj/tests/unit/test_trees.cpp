#include "excess/error.hpp"
#include "excess/products.hpp"
#include "excess/trees.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace excess {
namespace {

TEST(Trees, InventorySizes) {
    EXPECT_EQ(enumerate_trees(4, 3).size(), 4u);
    EXPECT_EQ(enumerate_trees(5, 4).size(), 10u);
    EXPECT_EQ(enumerate_trees(6, 5).size(), 24u);
    EXPECT_EQ(enumerate_trees(7, 6).size(), 66u);
}

TEST(Trees, EdgeBoundFilters) {
    for (const auto& t : enumerate_trees(6, 3)) EXPECT_LE(t.num_edges(), 3);
    EXPECT_EQ(enumerate_trees(2, 1).size(), 1u);
    EXPECT_THROW(enumerate_trees(6, 0), std::invalid_argument);
}

TEST(Trees, SortedAndDistinct) {
    const auto ts = enumerate_trees(7, 6);
    EXPECT_TRUE(std::is_sorted(ts.begin(), ts.end()));
    EXPECT_EQ(std::set<ExtremalTree>(ts.begin(), ts.end()).size(), ts.size());
}

TEST(Trees, GenusFourList) {
    std::set<std::string> codes;
    for (const auto& t : enumerate_trees(4, 3)) codes.insert(t.code());
    EXPECT_EQ(codes, (std::set<std::string>{"1[3]", "1[1,2]", "1[1,1,1]", "1[0[1,2]]"}));
}

TEST(Trees, IrreducibleCountIsPartitionCount) {
    for (int g = 2; g <= 8; ++g) {
        const auto ts = enumerate_trees(g, g - 1);
        const auto n = std::count_if(ts.begin(), ts.end(), [](const ExtremalTree& t) { return t.is_irreducible(); });
        EXPECT_EQ(static_cast<std::size_t>(n), partitions(g - 1).size()) << "g=" << g;
    }
}

TEST(Trees, AutomorphismsMatchBruteForce) {
    for (int g = 2; g <= 7; ++g)
        for (const auto& t : enumerate_trees(g, g - 1)) EXPECT_EQ(t.aut_order(), brute_force_aut_order(t)) << t.code();
}

TEST(Trees, StarAutomorphisms) {
    EXPECT_EQ(ExtremalTree::parse("1[1,1,1,1]").aut_order(), 24);
    EXPECT_EQ(ExtremalTree::parse("1[1,1,1,1,1]").aut_order(), 120);
    EXPECT_EQ(ExtremalTree::parse("1[0[1,1],0[1,1]]").aut_order(), 8);
}

TEST(Trees, GenusSixAutomorphismOrders) {
    std::multiset<std::int64_t> got;
    for (const auto& t : enumerate_trees(6, 5)) got.insert(t.aut_order());
    const std::multiset<std::int64_t> want{1, 1, 1, 2, 2, 6, 120, 1, 1, 2, 2, 1, 2, 2, 1, 6, 2, 6, 2, 2, 1, 2, 2, 1};
    EXPECT_EQ(got, want);
}

TEST(Trees, ParseCanonicalizes) {
    EXPECT_EQ(ExtremalTree::parse("1[2,1]").code(), "1[1,2]");
    EXPECT_EQ(ExtremalTree::parse("1[1,0[3,1]]").code(), "1[0[1,3],1]");
    EXPECT_EQ(ExtremalTree::parse("1[0[1,3],1]").genus(), 6);
}

TEST(Trees, ParseRejectsNonExtremal) {
    EXPECT_THROW(ExtremalTree::parse("2[3]"), InvalidTree);      // root genus must be 1
    EXPECT_THROW(ExtremalTree::parse("1[0[1]]"), InvalidTree);   // genus-0 vertex of valence 2
    EXPECT_THROW(ExtremalTree::parse("1[0]"), InvalidTree);      // genus-0 leaf
    EXPECT_THROW(ExtremalTree::parse("1[1[1,1]]"), InvalidTree); // positive-genus inner vertex
    EXPECT_THROW(ExtremalTree::parse("1[1,"), ParseError);
    EXPECT_THROW(ExtremalTree::parse(""), ParseError);
}

TEST(Trees, BreadthFirstLayout) {
    const auto t = ExtremalTree::parse("1[0[1,3],1]");
    EXPECT_EQ(t.num_vertices(), 5);
    EXPECT_EQ(t.vertex_genus(1), 0);
    EXPECT_EQ(t.vertex_genus(2), 1);
    EXPECT_EQ(t.children(1), (std::vector<int>{3, 4}));
    EXPECT_EQ(t.path(4), (std::vector<int>{1, 4}));
    EXPECT_EQ(t.leaves(), (std::vector<int>{2, 3, 4}));
    EXPECT_EQ(t.internal_vertices(), (std::vector<int>{1}));
    EXPECT_EQ(t.valence(0), 2);
    EXPECT_EQ(t.valence(1), 3);
}

TEST(Trees, RandomRelabelInvariance) {
    std::mt19937 rng(11);
    for (int g = 3; g <= 7; ++g)
        for (const auto& t : enumerate_trees(g, g - 1)) {
            const int n = t.num_vertices();
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<int> genera(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) genera[perm[v]] = t.vertex_genus(v);
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : t.edges()) edges.emplace_back(perm[v], perm[u]);
            std::shuffle(edges.begin(), edges.end(), rng);
            const auto u = ExtremalTree::from_edges(genera, edges, perm[0]);
            EXPECT_EQ(u.code(), t.code());
            EXPECT_EQ(u.aut_order(), t.aut_order());
        }
}

TEST(Trees, FromEdgesRejectsCycles) {
    EXPECT_THROW(ExtremalTree::from_edges({1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}, 0), InvalidTree);
    EXPECT_FALSE(ExtremalTree::try_from_edges({1, 2}, {}, 0).has_value());
}

TEST(Trees, SmoothingsOfTwoLeafTree) {
    std::set<std::string> got;
    for (const auto& s : smoothings(ExtremalTree::parse("1[0[1,2]]"))) got.insert(s.target.code());
    EXPECT_EQ(got, (std::set<std::string>{"1[3]", "1[1,2]"}));
}

TEST(Trees, SmoothingEdgeMaps) {
    for (const auto& s : smoothings(ExtremalTree::parse("1[0[1,2]]"))) {
        EXPECT_EQ(s.edge_map.size() + s.contracted.size(), 3u);
        EXPECT_EQ(static_cast<int>(s.edge_map.size()), s.target.num_edges());
    }
}

TEST(Trees, SmoothingCounts) {
    EXPECT_TRUE(smoothings(ExtremalTree::parse("1[1,1,2]")).empty());
    EXPECT_EQ(smoothings(ExtremalTree::parse("1[0[0[1,2],2]]")).size(), 6u);
}

TEST(Trees, LeafMonomials) {
    EXPECT_EQ(Poly(mon(ExtremalTree::parse("1[0[1,2]]"), 2)), Poly::parse("z1*z2"));
    EXPECT_EQ(Poly(mon(ExtremalTree::parse("1[0[1,3],1]"), 2)), Poly::parse("z2"));
    EXPECT_THROW(mon(ExtremalTree::parse("1[0[1,2]]"), 1), NotALeaf);
}

TEST(Trees, Depth) {
    EXPECT_EQ(depth(ExtremalTree::parse("1[1,3]")), 0);
    EXPECT_EQ(depth(ExtremalTree::parse("1[0[1,2]]")), 1);
    EXPECT_EQ(depth(ExtremalTree::parse("1[0[0[1,2],2]]")), 2);
}

TEST(Trees, DepthDecreasesAlongSmoothings) {
    for (const auto& t : enumerate_trees(6, 5))
        for (const auto& s : smoothings(t)) EXPECT_LT(depth(s.target), depth(t)) << t.code();
}

TEST(Trees, JsonRoundTrip) {
    for (const auto& t : enumerate_trees(6, 5)) EXPECT_EQ(tree_from_json(tree_to_json(t)), t);
    EXPECT_THROW(tree_from_json("{"), ParseError);
}

}  // namespace
}  // namespace excess
