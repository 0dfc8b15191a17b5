#pragma once

#include "excess/poly.hpp"
#include "excess/trees.hpp"

#include <map>
#include <string>
#include <vector>

namespace excess {

// Torus-equivariant local model of a tree: one coordinate z_e per edge and
// N = O^k + L_1 + ... + L_m with m = g-1-k.
struct LocalModel {
    LocalModel(const ExtremalTree& tree, int g);

    ExtremalTree tree;
    int g;
    int k;          // leaves
    int n;          // edges
    int ell_count;  // g-1-k
    Poly A;         // prod over leaves of (1 + sum of path z)
    Poly total_chern;

    Poly chern_class(int i) const { return graded_part(total_chern, i); }
    // l_1...l_m * prod over leaves of (sum of path z)
    Poly top_chern() const;
};

struct Contribution {
    ExtremalTree tree;
    Poly poly;   // in z_e and formal c_i
    int degree;  // g-1-n
};

enum class Method { Recursion, Pixton };

using ContributionCache = std::map<std::string, Contribution>;

Contribution base_contribution(const ExtremalTree& t, int g);

// Intermediate values of one recursion step, kept for checking.
struct RecursionStep {
    Poly rhs;        // c_{g-1}(N) minus the smoothing terms
    Poly quotient;   // rhs / prod z_e, still in z and l
    Contribution result;
};

RecursionStep recursion_step(const ExtremalTree& t, int g, const ContributionCache& cache);
Contribution recursion_contribution(const ExtremalTree& t, int g, const ContributionCache& cache);
// Fills the cache for t and everything it degenerates from.
Contribution recursion_contribution(const ExtremalTree& t, int g);
Contribution pixton_contribution(const ExtremalTree& t, int g);

// One entry per tree of enumerate_trees(g, g-1), in tree order.
std::vector<Contribution> all_contributions(int g, Method method, int jobs = 1);

// Replaces every formal c_i by the i-th Chern class of the tree's local model.
Poly factorize_chern(const Poly& p, const LocalModel& model);

}  // namespace excess
