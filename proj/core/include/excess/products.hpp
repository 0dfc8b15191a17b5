#pragma once

#include "excess/poly.hpp"

#include <utility>
#include <vector>

namespace excess {

// Parts in nonincreasing order.
using Partition = std::vector<int>;

Partition make_partition(std::vector<int> parts);
std::vector<Partition> partitions(int g);

// A common refinement of p and q: part alpha of sigma sits in block row[alpha]
// of p and block col[alpha] of q.
struct RefinementComponent {
    Partition sigma;
    std::vector<int> row;
    std::vector<int> col;
    // (sigma_alpha, sigma_beta) for parts that differ in both row and column:
    // each contributes E_a^vee (x) E_b^vee to the excess bundle.
    std::vector<std::pair<int, int>> excess_bundle;
    std::vector<std::pair<int, int>> excess_parts;  // the index pairs (alpha, beta)
    std::vector<std::vector<int>> matrix;
};

std::vector<RefinementComponent> extremal_refinements(const Partition& p, const Partition& q);

// prod_{i,j} (x_i + y_j) over a x b roots, in e_i(x) = lambda_i{0} and
// e_j(y) = lambda_j{1}.
Poly euler_tensor(int a, int b);
// euler_tensor(a, b) with e_a(x) = e_b(y) = 0.
Poly euler_tensor_reduce(int a, int b);
// Same product expanded in explicit roots psi_i{0}, psi_j{1} and rewritten by
// the symmetric reduction; only for small ranks.
Poly euler_tensor_by_roots(int a, int b);

struct ComponentCheck {
    RefinementComponent component;
    Poly reduced_euler;  // in lambda_i{alpha}, one tag per part of sigma
};

std::vector<ComponentCheck> zeroint_components(const Partition& p, const Partition& q);
bool zeroint_check(const Partition& p, const Partition& q);

// sum over compositions (a_1..a_l) of m with a_i <= g_i of
// lambda_{a_1}{0} ... lambda_{a_l}{l-1}, factors tagged in the given order. With drop_top,
// terms containing some lambda_{g_i} are removed.
Poly hodge_split_pullback(int g, const Partition& parts, int m, bool drop_top = true);

}  // namespace excess
