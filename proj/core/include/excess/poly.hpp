#pragma once

#include "excess/rational.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace excess {

enum class Ns : std::uint8_t { Edge, Ell, Chern, Lambda, Psi };

// Variables order by (namespace, vertex, index). `vertex` is -1 for variables
// that are not attached to a tree vertex.
struct Variable {
    Ns ns = Ns::Edge;
    int vertex = -1;
    int index = 0;

    static Variable z(int i) { return {Ns::Edge, -1, i}; }
    static Variable ell(int i) { return {Ns::Ell, -1, i}; }
    static Variable c(int i) { return {Ns::Chern, -1, i}; }
    static Variable lambda(int i, int v = -1) { return {Ns::Lambda, v, i}; }
    static Variable psi(int i, int v = -1) { return {Ns::Psi, v, i}; }

    int degree() const { return (ns == Ns::Chern || ns == Ns::Lambda) ? index : 1; }
    std::string name() const;

    auto operator<=>(const Variable&) const = default;
};

class Monomial {
public:
    using Factor = std::pair<Variable, int>;

    Monomial() = default;
    explicit Monomial(const Variable& v, int e = 1);
    // Factors may be unsorted and repeated; zero exponents are dropped.
    explicit Monomial(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return f_; }
    int degree() const { return deg_; }
    int total_exponent() const;
    bool is_one() const { return f_.empty(); }
    int exponent(const Variable& v) const;

    bool divides(const Monomial& m) const;
    Monomial operator*(const Monomial& o) const;
    // Requires divides(*this, m).
    Monomial operator/(const Monomial& o) const;

    std::string str() const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.f_ == b.f_; }
    // Graded lexicographic: by Chow degree, then by exponent of the smallest
    // variable (a larger exponent is a larger monomial).
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Factor> f_;
    int deg_ = 0;
};

class Poly {
public:
    using Terms = std::map<Monomial, Rational>;

    Poly() = default;
    Poly(long c) : Poly(Rational(c)) {}
    Poly(const Rational& c);
    Poly(const Variable& v);
    Poly(const Monomial& m, const Rational& c = Rational(1));

    static Poly parse(std::string_view text);

    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // -1 for the zero polynomial.
    int degree() const;
    int min_degree() const;
    bool is_homogeneous() const;
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const { return coeff(Monomial()); }
    std::set<Variable> variables() const;
    bool contains(Ns ns) const;

    void add_term(const Monomial& m, const Rational& c);

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

    // Canonical text: terms in decreasing monomial order, "p/q" coefficients.
    std::string str() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const Monomial& m);

// Numerator over a monomial denominator.
struct LaurentPoly {
    Poly numerator;
    Monomial denominator;
};

Poly graded_part(const Poly& p, int d);
Poly truncate(const Poly& p, int max_deg);
Poly mul_truncated(const Poly& a, const Poly& b, int max_deg);
Poly power(const Poly& p, unsigned e, int max_deg = -1);
Poly exact_divide(const Poly& p, const Monomial& m);
Poly taylor_part(const LaurentPoly& p);
Poly series_inverse(const Poly& p, int max_deg);

using Substitution = std::function<std::optional<Poly>(const Variable&)>;
// Simultaneous substitution; variables mapped to nullopt are kept. A
// nonnegative max_deg drops everything above that degree as it goes.
Poly substitute(const Poly& p, const Substitution& s, int max_deg = -1);
Poly substitute(const Poly& p, const std::map<Variable, Poly>& s, int max_deg = -1);
Poly rename(const Poly& p, const std::function<Variable(const Variable&)>& f);

Poly derivative(const Poly& p, const Variable& v);
Poly integrate(const Poly& p, const Variable& v);

Poly elementary_symmetric(const std::vector<Variable>& vars, int i);

// Writes a polynomial symmetric in `roots` as a polynomial in `e_vars`, where
// e_vars[i-1] stands for e_i(roots). Other variables ride along as
// coefficients.
Poly to_elementary(const Poly& p, const std::vector<Variable>& roots,
                   const std::vector<Variable>& e_vars);

// Eliminates ell_1..ell_m (m = ell_count) from p via e_i(ell) = [c/A]_i with
// c = 1 + c_1 + c_2 + ... formal.
Poly elem_sym_rewrite(const Poly& p, int ell_count, const Poly& A, int max_deg);

// Determinant by Laplace expansion with memoization over column subsets.
Poly determinant(const std::vector<std::vector<Poly>>& m);

}  // namespace excess
