#include "excess/error.hpp"
#include "excess/strata.hpp"
#include "excess_tools/golden.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace excess::tools {
namespace {

std::string golden(const char* name) { return std::string(EXCESS_GOLDEN_DIR) + "/" + name; }

void expect_matches(const char* file, int g) {
    const GoldenReport r = compare_golden(load_golden(golden(file)), assemble_pullback(g), true);
    for (const auto& f : r.failures) ADD_FAILURE() << f;
    EXPECT_GT(r.matched, 0u);
}

TEST(Golden, GenusFourMatchesCompletely) { expect_matches("pullback_g4.txt", 4); }
TEST(Golden, GenusFiveMatchesCompletely) { expect_matches("pullback_g5.txt", 5); }
TEST(Golden, GenusSixMatchesCompletely) { expect_matches("pullback_g6.txt", 6); }

TEST(Golden, FileBlockCounts) {
    EXPECT_EQ(load_golden(golden("pullback_g4.txt")).size(), 4u);
    EXPECT_EQ(load_golden(golden("pullback_g5.txt")).size(), 10u);
    EXPECT_EQ(load_golden(golden("pullback_g6.txt")).size(), 24u);
}

TEST(Golden, DetectsWrongCoefficient) {
    std::istringstream in("tree 1:- 0:0 1:1 2:1\n-2 [1, 1, 1, 1]\n");
    EXPECT_FALSE(compare_golden(parse_golden(in), assemble_pullback(4), false).ok());
}

TEST(Golden, DetectsMissingTree) {
    std::istringstream in("tree 1:- 3:0\n1 [1, lambda2 - lambda1*psi1 + psi1^2]\n");
    const auto r = compare_golden(parse_golden(in), assemble_pullback(4), true);
    EXPECT_EQ(r.matched, 1u);
    EXPECT_EQ(r.failures.size(), 3u);
}

TEST(Golden, MatchesUpToAutomorphism) {
    // The two genus-2 leaves may be decorated in either order.
    std::istringstream a("tree 1:- 0:0 2:1 2:1\n1 [1, 1, 3*lambda1 - 4*psi1, 1]\n");
    std::istringstream b("tree 1:- 0:0 2:1 2:1\n1 [1, 1, 1, 3*lambda1 - 4*psi1]\n");
    const auto ta = canonical_term(parse_golden(a).at(0));
    const auto tb = canonical_term(parse_golden(b).at(0));
    EXPECT_TRUE(terms_match(ta, tb));
    EXPECT_NE(tagged_poly(ta.summands), tagged_poly(tb.summands));
}

TEST(Golden, VertexOrderIsFree) {
    // Same tree as "1:- 0:0 1:1 4:1" with the leaves listed first.
    std::istringstream a("tree 1:- 0:0 1:1 4:1\n1 [1, 1, 1, -3*lambda2 + 4*lambda1*psi1 - 5*psi1^2]\n");
    std::istringstream b("tree 1:- 0:0 4:1 1:1\n1 [1, 1, -3*lambda2 + 4*lambda1*psi1 - 5*psi1^2, 1]\n");
    EXPECT_TRUE(terms_match(canonical_term(parse_golden(a).at(0)), canonical_term(parse_golden(b).at(0))));
}

TEST(Golden, ParseErrors) {
    std::istringstream no_tree("1 [1]\n");
    EXPECT_THROW(parse_golden(no_tree), ParseError);
    std::istringstream bad_width("tree 1:- 3:0\n1 [1]\n");
    EXPECT_THROW(parse_golden(bad_width), ParseError);
    std::istringstream bad_vertex("tree 1:- 3\n");
    EXPECT_THROW(parse_golden(bad_vertex), ParseError);
    std::istringstream not_extremal("tree 1:- 0:0\n1 [1, 1]\n");
    EXPECT_THROW(canonical_term(parse_golden(not_extremal).at(0)), InvalidTree);
    EXPECT_THROW(load_golden(golden("missing.txt")), Error);
}

}  // namespace
}  // namespace excess::tools
