#include "excess/constants.hpp"

#include <gtest/gtest.h>

namespace excess {
namespace {

TEST(Constants, Bernoulli) {
    EXPECT_EQ(bernoulli(0), Rational(1));
    EXPECT_EQ(bernoulli(1), Rational(-1, 2));
    EXPECT_EQ(bernoulli(2), Rational(1, 6));
    EXPECT_EQ(bernoulli(3), Rational(0));
    EXPECT_EQ(bernoulli(12), Rational(-691, 2730));
    EXPECT_THROW(bernoulli(-1), std::invalid_argument);
}

TEST(Constants, ProductCoefficient) {
    EXPECT_EQ(product_coefficient(4), Rational(20));
    EXPECT_EQ(product_coefficient(5), Rational(11));
    EXPECT_EQ(product_coefficient(7), Rational(1));
}

TEST(Constants, GenusSixDiffersFromPrintedValue) {
    EXPECT_EQ(product_coefficient(6), Rational(2730, 691));
    EXPECT_NE(product_coefficient(6), published_coefficient_g6());
}

TEST(Constants, ProductCoefficientMatchesDefinition) {
    for (int g = 1; g <= 12; ++g)
        EXPECT_EQ(product_coefficient(g), Rational(g) / (Rational(6) * bernoulli(2 * g).abs())) << g;
}

TEST(Constants, HodgeIntegrals) {
    EXPECT_EQ(hodge_constants(1).tail_integral, Rational(1, 24));
    EXPECT_EQ(hodge_constants(1).triple_lambda, Rational(0));
    EXPECT_EQ(hodge_constants(2).triple_lambda, Rational(1, 5760));
    EXPECT_EQ(hodge_constants(2).tail_integral, Rational(1, 2880));
}

TEST(Constants, TailIntegralMatchesLogSineSeries) {
    for (int g = 1; g <= 12; ++g) {
        EXPECT_EQ(hodge_constants(g).tail_integral, bernoulli(2 * g).abs() / (Rational(2 * g) * factorial(2 * g))) << g;
        EXPECT_EQ(log_sine_coefficient(2 * g), hodge_constants(g).tail_integral) << g;
    }
}

TEST(Constants, TripleLambdaFormula) {
    for (int g = 2; g <= 12; ++g) {
        const Rational b = bernoulli(2 * g).abs();
        const Rational want = b * bernoulli(2 * g - 2).abs() / (Rational(2 * g) * Rational(2 * g - 2) * factorial(2 * g - 2)) / Rational(2);
        EXPECT_EQ(hodge_constants(g).triple_lambda, want) << g;
    }
}

TEST(Constants, SeriesIdentity) {
    EXPECT_TRUE(series_identity_check(20));
    EXPECT_THROW(series_identity_check(1), std::invalid_argument);
}

}  // namespace
}  // namespace excess
