#pragma once

#include "excess/strata.hpp"

#include <istream>
#include <string>
#include <vector>

namespace excess::tools {

// One tree block of a golden bracket file. Vertices are listed in bracket
// order; markings on a vertex are its parent first, then its children in
// bracket order.
struct GoldenBlock {
    int line = 0;
    std::string label;
    std::vector<int> genera;
    std::vector<int> parents;  // -1 for the root
    std::vector<Summand> summands;
};

std::vector<GoldenBlock> parse_golden(std::istream& in);
std::vector<GoldenBlock> load_golden(const std::string& path);

// Canonical tree of a block together with its summands rewritten onto
// canonical vertex ids and marking order.
StrataTerm canonical_term(const GoldenBlock& b);

// Equality of two terms on the same tree after summing over automorphisms.
bool terms_match(const StrataTerm& a, const StrataTerm& b);

struct GoldenReport {
    std::vector<std::string> failures;
    std::size_t matched = 0;
    bool ok() const { return failures.empty(); }
};

// Every block must match the term of expr on its tree. With `complete`, every
// term of expr must also be covered by some block.
GoldenReport compare_golden(const std::vector<GoldenBlock>& blocks, const StrataExpression& expr, bool complete);

}  // namespace excess::tools
