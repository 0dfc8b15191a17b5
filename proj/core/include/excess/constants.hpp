#pragma once

#include "excess/rational.hpp"

namespace excess {

Rational bernoulli(int n);
// g / (6 |B_2g|)
Rational product_coefficient(int g);

struct HodgeConstants {
    Rational tail_integral;  // |B_2g| / (2g (2g)!)
    Rational triple_lambda;  // integral of lambda_g lambda_{g-1} lambda_{g-2}; 0 for g = 1
};

HodgeConstants hodge_constants(int g);

// Coefficients of t^0..t^{2N} in -log(sin(t/2)/(t/2)) by exact series log,
// compared with |B_2g| / (2g (2g)!).
bool series_identity_check(int n);
Rational log_sine_coefficient(int k);

// Published value for g = 6; the formula gives 2730/691.
inline Rational published_coefficient_g6() { return Rational(2370, 691); }

}  // namespace excess
