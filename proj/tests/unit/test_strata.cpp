#include "excess/error.hpp"
#include "excess/strata.hpp"

#include <gtest/gtest.h>

namespace excess {
namespace {

Poly P(const char* s) { return Poly::parse(s); }
ExtremalTree T(const char* s) { return ExtremalTree::parse(s); }

const StrataTerm& term_of(const StrataExpression& s, const std::string& code) {
    for (const auto& t : s.terms)
        if (t.tree.code() == code) return t;
    throw std::out_of_range(code);
}

TEST(Strata, Markings) {
    const auto t = T("1[0[1,3],1]");
    EXPECT_EQ(markings(t, 0), (std::vector<int>{1, 2}));
    EXPECT_EQ(markings(t, 1), (std::vector<int>{0, 3, 4}));
    EXPECT_EQ(markings(t, 4), (std::vector<int>{1}));
}

TEST(Strata, DegreeBounds) {
    const auto t = T("1[0[1,3],1]");
    EXPECT_EQ(vertex_degree_bound(t, 0), 1);  // M_{1,2}
    EXPECT_EQ(vertex_degree_bound(t, 1), 0);  // M_{0,3}
    EXPECT_EQ(vertex_degree_bound(t, 2), 0);  // M_{1,1}
    EXPECT_EQ(vertex_degree_bound(t, 4), 4);  // M_{3,1}
}

TEST(Strata, ConstantContribution) {
    const auto s = substitute_stratum({T("1[0[1,2]]"), Poly(-3), 0});
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].coeff, Rational(-3));
    for (const auto& p : s[0].vertex_polys) EXPECT_EQ(p, Poly(1));
}

TEST(Strata, GenusFiveTwoLeafSubstitution) {
    const auto s = substitute_stratum({T("1[0[1,3]]"), P("-3*c1 + 6*z1 + 4*z2 + 4*z3"), 1});
    const Poly want = P("3*lambda1{3} - 4*psi1{3}");
    EXPECT_EQ(tagged_poly(s), want);
}

TEST(Strata, GenusSixTwoLeafSubstitution) {
    const Poly p = P("-3*c2 + c1*(6*z1 + 4*z2 + 4*z3) - 10*z1^2 - 10*z1*(z2 + z3) - 5*(z2 + z3)^2 + 5*z2*z3");
    const auto s = substitute_stratum({T("1[0[1,4]]"), p, 2});
    EXPECT_EQ(tagged_poly(s), P("-3*lambda2{3} + 4*lambda1{3}*psi1{3} - 5*psi1{3}^2"));
}

TEST(Strata, TopLambdaIsDropped) {
    const auto s = assemble_pullback(4);
    EXPECT_EQ(tagged_poly(term_of(s, "1[3]").summands), P("lambda2{1} - lambda1{1}*psi1{1} + psi1{1}^2"));
}

TEST(Strata, AutomorphismWeights) {
    const auto s = assemble_pullback(6);
    EXPECT_EQ(tagged_poly(term_of(s, "1[1,1,1,1,1]").summands), Poly(Rational(1, 120)));
    for (const auto& t : s.terms)
        for (const auto& sm : t.summands) {
            const mpz_class den = sm.coeff.denominator();
            EXPECT_EQ(mpz_class(t.tree.aut_order()) % den, 0) << t.tree.code();
        }
}

TEST(Strata, TotalDegreeIsGMinusOne) {
    for (int g = 4; g <= 6; ++g)
        for (const auto& t : assemble_pullback(g).terms)
            for (const auto& sm : t.summands) {
                int deg = t.tree.num_edges();
                for (const auto& p : sm.vertex_polys) deg += p.degree();
                EXPECT_EQ(deg, g - 1) << t.tree.code();
            }
}

TEST(Strata, TreeCounts) {
    EXPECT_EQ(assemble_pullback(4).terms.size(), 4u);
    EXPECT_EQ(assemble_pullback(5).terms.size(), 10u);
    EXPECT_EQ(assemble_pullback(6).terms.size(), 24u);
}

TEST(Strata, MethodsSerializeIdentically) {
    for (int g = 2; g <= 7; ++g)
        for (auto fmt : {StrataFormat::Json, StrataFormat::Admcycles})
            EXPECT_EQ(serialize(assemble_pullback(g, Method::Recursion), fmt),
                      serialize(assemble_pullback(g, Method::Pixton), fmt))
                << "g=" << g;
}

TEST(Strata, JsonRoundTrip) {
    for (int g = 4; g <= 6; ++g) {
        const auto s = assemble_pullback(g);
        EXPECT_EQ(parse_strata_json(serialize(s, StrataFormat::Json)), s);
    }
}

TEST(Strata, EmptyExpression) {
    EXPECT_EQ(serialize(StrataExpression{}, StrataFormat::Json), "[]");
    EXPECT_TRUE(parse_strata_json("[]").terms.empty());
}

TEST(Strata, ParseErrors) {
    EXPECT_THROW(parse_strata_json("{"), ParseError);
    EXPECT_THROW(parse_strata_json(R"({"genus": 4})"), ParseError);
}

TEST(Strata, TagRoundTrip) {
    const auto t = T("1[0[1,2]]");
    const Poly p = P("psi1{0}*lambda1{3} + 2*psi2{1} - 1/2");
    EXPECT_EQ(tagged_poly(untag(t, p)), p);
}

TEST(Strata, AdmcyclesTextListsEveryTree) {
    const std::string text = serialize(assemble_pullback(5), StrataFormat::Admcycles);
    std::size_t n = 0;
    for (std::size_t pos = 0; (pos = text.find("\ntree ", pos)) != std::string::npos; ++pos) ++n;
    EXPECT_EQ(n, 10u);
}

}  // namespace
}  // namespace excess
