#include "excess/constants.hpp"

#include "excess/poly.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace excess {

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mu;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mu);
    // sum_{k=0}^{m} binom(m+1, k) B_k = 0 for m >= 1
    for (int m = static_cast<int>(table.size()); m <= n; ++m) {
        Rational s;
        for (int k = 0; k < m; ++k) s += binomial(m + 1, k) * table[k];
        table.push_back(-s / Rational(m + 1));
    }
    return table[n];
}

Rational product_coefficient(int g) {
    if (g < 1) throw std::invalid_argument("product_coefficient: genus must be >= 1");
    return Rational(g) / (Rational(6) * bernoulli(2 * g).abs());
}

HodgeConstants hodge_constants(int g) {
    if (g < 1) throw std::invalid_argument("hodge_constants: genus must be >= 1");
    const Rational b = bernoulli(2 * g).abs();
    HodgeConstants h;
    h.tail_integral = b / (Rational(2 * g) * factorial(2 * g));
    if (g >= 2) {
        const Rational b2 = bernoulli(2 * g - 2).abs();
        h.triple_lambda = (b / Rational(2 * g)) * (b2 / Rational(2 * g - 2)) / (Rational(2) * factorial(2 * g - 2));
    }
    return h;
}

namespace {

// -log(sin(t/2)/(t/2)) up to t^order, with t = z1.
Poly neg_log_sine(int order) {
    const Variable t = Variable::z(1);
    Poly f;
    for (int k = 0; 2 * k <= order; ++k) {
        Rational c = Rational(1) / factorial(2 * k + 1);
        for (int i = 0; i < k; ++i) c /= Rational(4);
        f.add_term(Monomial(t, 2 * k), k % 2 ? -c : c);
    }
    // log f = integral of f'/f
    Poly q = mul_truncated(derivative(f, t), series_inverse(f, order), order - 1);
    return -integrate(q, t);
}

}  // namespace

Rational log_sine_coefficient(int k) {
    if (k < 0) throw std::invalid_argument("log_sine_coefficient: negative order");
    if (k == 0) return Rational(0);
    return neg_log_sine(k).coeff(Monomial(Variable::z(1), k));
}

bool series_identity_check(int n) {
    if (n < 2) throw std::invalid_argument("series_identity_check: order must be >= 2");
    const Poly s = neg_log_sine(2 * n);
    const Variable t = Variable::z(1);
    if (!s.constant_term().is_zero()) return false;
    for (int k = 1; k <= 2 * n; ++k) {
        const Rational c = s.coeff(Monomial(t, k));
        const Rational want = k % 2 ? Rational(0) : hodge_constants(k / 2).tail_integral;
        if (c != want) return false;
    }
    return true;
}

}  // namespace excess
