#pragma once

#include "excess/excess.hpp"
#include "excess/poly.hpp"
#include "excess/trees.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace excess {

// One bracket [p_0, p_1, ...]: a coefficient times a product of per-vertex
// classes. Vertex polys use untagged lambda_i and psi_m, where psi_m is the
// m-th marking of that vertex.
struct Summand {
    Rational coeff;
    std::vector<Poly> vertex_polys;

    friend bool operator==(const Summand&, const Summand&) = default;
};

struct StrataTerm {
    ExtremalTree tree;
    std::vector<Summand> summands;  // coefficients include the 1/aut weight

    friend bool operator==(const StrataTerm&, const StrataTerm&) = default;
};

struct StrataExpression {
    int genus = 0;
    std::vector<StrataTerm> terms;

    friend bool operator==(const StrataExpression&, const StrataExpression&) = default;
};

enum class StrataFormat { Json, Admcycles };

// Neighbours of v in marking order: parent first, then children in code order.
std::vector<int> markings(const ExtremalTree& t, int v);
// Largest decoration degree that survives on v.
int vertex_degree_bound(const ExtremalTree& t, int v);

// Unweighted summands of one contribution.
std::vector<Summand> substitute_stratum(const Contribution& c);
StrataTerm stratum_term(const Contribution& c);
StrataExpression assemble_pullback(int g, Method method = Method::Recursion, int jobs = 1);
StrataExpression assemble_pullback(int g, const std::vector<Contribution>& contributions);

// Sum of the summands with lambda/psi tagged by vertex id.
Poly tagged_poly(const std::vector<Summand>& summands);
std::vector<Summand> untag(const ExtremalTree& t, const Poly& tagged);

std::string serialize(const StrataExpression& s, StrataFormat format);
StrataExpression parse_strata_json(std::string_view json);

}  // namespace excess
