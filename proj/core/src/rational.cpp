#include "excess/rational.hpp"

#include "excess/error.hpp"

#include <stdexcept>

namespace excess {

Rational::Rational(long n, long d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view s) {
    std::string text;
    for (char ch : s)
        if (ch != ' ' && ch != '+') text.push_back(ch);
    if (text.empty()) throw ParseError("empty rational");
    mpq_class q;
    if (q.set_str(text, 10) != 0) throw ParseError("bad rational '" + std::string(s) + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    q.canonicalize();
    return Rational(q);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / v_));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational factorial(unsigned n) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return Rational(r);
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(r);
}

}  // namespace excess
