#pragma once

#include "excess/poly.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace excess {

// Element of R*(A_g) in the basis lambda_J, J a subset of {1..g-1}; bit i-1
// of the mask stands for lambda_i.
class TautClassAg {
public:
    using Mask = std::uint32_t;

    explicit TautClassAg(int g);
    static TautClassAg basis(int g, Mask j);
    static TautClassAg one(int g) { return basis(g, 0); }

    int genus() const { return g_; }
    const std::map<Mask, Rational>& coords() const { return coords_; }
    Rational coeff(Mask j) const;
    bool is_zero() const { return coords_.empty(); }
    void add(Mask j, const Rational& c);
    // Polynomial in untagged lambda_i.
    Poly to_poly() const;
    std::string str() const { return to_poly().str(); }

    TautClassAg& operator+=(const TautClassAg& o);
    TautClassAg& operator*=(const Rational& c);
    friend TautClassAg operator+(TautClassAg a, const TautClassAg& b) { return a += b; }
    friend TautClassAg operator*(TautClassAg a, const Rational& c) { return a *= c; }
    friend bool operator==(const TautClassAg&, const TautClassAg&) = default;

private:
    int g_;
    std::map<Mask, Rational> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const TautClassAg& a) { return os << a.str(); }

int mask_degree(TautClassAg::Mask j);
TautClassAg::Mask socle_mask(int g);

TautClassAg reduce(const Poly& p, int g);
TautClassAg multiply(const TautClassAg& a, const TautClassAg& b);

// Number of basis monomials in each degree 0..binom(g,2).
std::vector<std::size_t> graded_dimensions(int g);

using Matrix = std::vector<std::vector<Rational>>;

struct Pairing {
    std::vector<TautClassAg::Mask> rows;  // degree d
    std::vector<TautClassAg::Mask> cols;  // degree binom(g,2)-d
    Matrix matrix;
};

Pairing socle_pairing(int g, int d);
std::size_t rank(Matrix m);

// Jacobi-Trudi determinant for e(wedge^2 E) in untagged lambda_1..lambda_g.
Poly jacobi_trudi_wedge2(int g);
TautClassAg schur_wedge2(int g);
std::pair<TautClassAg, TautClassAg> virtual_class_product(int g, int k);
TautClassAg taut_projection_delta(int g);

// The Mumford relations and lambda_g as polynomials, for independent checks.
std::vector<Poly> ag_relations(int g);

}  // namespace excess
