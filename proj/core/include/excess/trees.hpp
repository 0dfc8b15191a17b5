#pragma once

#include "excess/poly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace excess {

// Rooted genus-labeled tree in canonical form. Vertices are numbered in
// breadth-first order from the root (id 0) with children in code order; edge
// e (1-based) joins vertex e to its parent, so z_e is the edge above vertex e.
class ExtremalTree {
public:
    // Canonical code: a leaf is its genus, an inner vertex is
    // "genus[child,child,...]" with children sorted by (genus, code).
    static ExtremalTree parse(std::string_view code);
    static ExtremalTree from_edges(const std::vector<int>& genera,
                                   const std::vector<std::pair<int, int>>& edges, int root);
    // Like from_edges, but returns nullopt for non-extremal input. If relabel is
    // given it receives the canonical id of every input vertex.
    static std::optional<ExtremalTree> try_from_edges(const std::vector<int>& genera,
                                                      const std::vector<std::pair<int, int>>& edges,
                                                      int root, std::vector<int>* relabel = nullptr);

    const std::string& code() const { return code_; }
    std::int64_t aut_order() const { return aut_; }
    int genus() const { return genus_; }
    int num_vertices() const { return static_cast<int>(genera_.size()); }
    int num_edges() const { return num_vertices() - 1; }
    int vertex_genus(int v) const { return genera_.at(v); }
    int parent(int v) const { return parent_.at(v); }
    const std::vector<int>& children(int v) const { return children_.at(v); }
    int valence(int v) const;
    bool is_leaf(int v) const { return v != 0 && children_.at(v).empty(); }
    std::vector<int> leaves() const;
    std::vector<int> internal_vertices() const;
    // No genus-0 vertices: every non-root vertex is a leaf on the root.
    bool is_irreducible() const { return internal_vertices().empty(); }
    // Edges on the path from the root down to v, top first.
    std::vector<int> path(int v) const;
    std::vector<std::pair<int, int>> edges() const;

    friend bool operator==(const ExtremalTree& a, const ExtremalTree& b) { return a.code_ == b.code_; }
    friend auto operator<=>(const ExtremalTree& a, const ExtremalTree& b) { return a.code_ <=> b.code_; }

private:
    int genus_ = 0;
    std::vector<int> genera_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::string code_;
    std::int64_t aut_ = 1;
};

struct Smoothing {
    ExtremalTree target;
    // edge_map[j-1] is the edge of the degenerate tree matching edge j of target.
    std::vector<int> edge_map;
    std::vector<int> contracted;
};

std::vector<ExtremalTree> enumerate_trees(int g, int max_edges);
std::int64_t aut_order(const ExtremalTree& t);
std::int64_t brute_force_aut_order(const ExtremalTree& t);
std::vector<Smoothing> smoothings(const ExtremalTree& t);
Monomial mon(const ExtremalTree& t, int leaf);
int depth(const ExtremalTree& t);

std::string tree_to_json(const ExtremalTree& t);
ExtremalTree tree_from_json(std::string_view json);

}  // namespace excess
