#include "excess/trees.hpp"

#include "excess/error.hpp"

#include "json.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>

namespace excess {

namespace {

std::int64_t factorial_int(int n) {
    std::int64_t r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

struct CodeParser {
    std::string_view s;
    std::size_t i = 0;
    std::vector<int> genera;
    std::vector<std::pair<int, int>> edges;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(i) + " in tree code '" + std::string(s) + "'");
    }

    int node() {
        std::size_t start = i;
        while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
        if (start == i) fail("expected genus");
        int id = static_cast<int>(genera.size());
        genera.push_back(std::stoi(std::string(s.substr(start, i - start))));
        if (i < s.size() && s[i] == '[') {
            ++i;
            for (;;) {
                int child = node();
                edges.emplace_back(id, child);
                if (i < s.size() && s[i] == ',') {
                    ++i;
                } else if (i < s.size() && s[i] == ']') {
                    ++i;
                    break;
                } else {
                    fail("expected ',' or ']'");
                }
            }
        }
        return id;
    }
};

}  // namespace

std::optional<ExtremalTree> ExtremalTree::try_from_edges(const std::vector<int>& genera,
                                                         const std::vector<std::pair<int, int>>& edges,
                                                         int root, std::vector<int>* relabel) {
    const int n = static_cast<int>(genera.size());
    if (n < 2 || root < 0 || root >= n || static_cast<int>(edges.size()) != n - 1) return std::nullopt;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n || u == v) return std::nullopt;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> parent(static_cast<std::size_t>(n), -2), order;
    parent[root] = -1;
    order.push_back(root);
    for (std::size_t k = 0; k < order.size(); ++k) {
        for (int w : adj[order[k]]) {
            if (parent[w] != -2) continue;
            parent[w] = order[k];
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;

    if (genera[root] != 1) return std::nullopt;
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        const auto deg = adj[v].size();
        if (deg == 1) {
            if (genera[v] < 1) return std::nullopt;
        } else if (genera[v] != 0 || deg < 3) {
            return std::nullopt;
        }
    }

    std::vector<std::vector<int>> kids(static_cast<std::size_t>(n));
    for (int v : order)
        if (parent[v] >= 0) kids[parent[v]].push_back(v);
    std::vector<std::string> code(static_cast<std::size_t>(n));
    auto key_less = [&](int a, int b) {
        if (genera[a] != genera[b]) return genera[a] < genera[b];
        return code[a] < code[b];
    };
    std::int64_t aut = 1;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        int v = *it;
        auto& ks = kids[v];
        std::sort(ks.begin(), ks.end(), key_less);
        std::string c = std::to_string(genera[v]);
        if (!ks.empty()) {
            c += "[";
            for (std::size_t j = 0; j < ks.size(); ++j) {
                if (j) c += ",";
                c += code[ks[j]];
            }
            c += "]";
            for (std::size_t j = 0; j < ks.size();) {
                std::size_t k = j;
                while (k < ks.size() && code[ks[k]] == code[ks[j]]) ++k;
                aut *= factorial_int(static_cast<int>(k - j));
                j = k;
            }
        }
        code[v] = std::move(c);
    }

    ExtremalTree t;
    t.code_ = code[root];
    t.aut_ = aut;
    std::vector<int> newid(static_cast<std::size_t>(n), -1);
    std::vector<int> bfs{root};
    newid[root] = 0;
    for (std::size_t k = 0; k < bfs.size(); ++k)
        for (int w : kids[bfs[k]]) {
            newid[w] = static_cast<int>(bfs.size());
            bfs.push_back(w);
        }
    t.genera_.resize(static_cast<std::size_t>(n));
    t.parent_.assign(static_cast<std::size_t>(n), -1);
    t.children_.assign(static_cast<std::size_t>(n), {});
    for (int old : bfs) {
        int v = newid[old];
        t.genera_[v] = genera[old];
        if (parent[old] >= 0) t.parent_[v] = newid[parent[old]];
        for (int w : kids[old]) t.children_[v].push_back(newid[w]);
    }
    t.genus_ = std::accumulate(genera.begin(), genera.end(), 0);
    if (relabel) *relabel = std::move(newid);
    return t;
}

ExtremalTree ExtremalTree::from_edges(const std::vector<int>& genera,
                                      const std::vector<std::pair<int, int>>& edges, int root) {
    auto t = try_from_edges(genera, edges, root);
    if (!t) throw InvalidTree("input is not an extremal tree");
    return *t;
}

ExtremalTree ExtremalTree::parse(std::string_view code) {
    CodeParser p{code, 0, {}, {}};
    p.node();
    if (p.i != code.size()) p.fail("trailing characters");
    auto t = try_from_edges(p.genera, p.edges, 0);
    if (!t) throw InvalidTree("'" + std::string(code) + "' is not an extremal tree");
    return *t;
}

int ExtremalTree::valence(int v) const {
    return static_cast<int>(children_.at(v).size()) + (v == 0 ? 0 : 1);
}

std::vector<int> ExtremalTree::leaves() const {
    std::vector<int> r;
    for (int v = 1; v < num_vertices(); ++v)
        if (children_[v].empty()) r.push_back(v);
    return r;
}

std::vector<int> ExtremalTree::internal_vertices() const {
    std::vector<int> r;
    for (int v = 1; v < num_vertices(); ++v)
        if (!children_[v].empty()) r.push_back(v);
    return r;
}

std::vector<int> ExtremalTree::path(int v) const {
    std::vector<int> r;
    for (int u = v; u > 0; u = parent_.at(u)) r.push_back(u);
    std::reverse(r.begin(), r.end());
    return r;
}

std::vector<std::pair<int, int>> ExtremalTree::edges() const {
    std::vector<std::pair<int, int>> r;
    for (int v = 1; v < num_vertices(); ++v) r.emplace_back(parent_[v], v);
    return r;
}

// ------------------------------------------------------------- Enumeration

namespace {

struct Branch {
    std::string code;
    int vertex_genus;
    int genus;
    int edges;  // including the edge to the parent
};

bool branch_less(const Branch& a, const Branch& b) {
    if (a.vertex_genus != b.vertex_genus) return a.vertex_genus < b.vertex_genus;
    return a.code < b.code;
}

// Multisets of candidates with genus sum `genus`, total edges <= budget and at
// least min_count members; calls emit with the concatenated codes.
void choose(const std::vector<Branch>& cands, std::size_t from, int genus, int budget, int count,
            int min_count, std::string& codes, int edges,
            const std::function<void(const std::string&, int)>& emit) {
    if (genus == 0) {
        if (count >= min_count) emit(codes, edges);
        return;
    }
    for (std::size_t i = from; i < cands.size(); ++i) {
        const Branch& b = cands[i];
        if (b.genus > genus || b.edges > budget) continue;
        std::size_t mark = codes.size();
        if (count) codes += ",";
        codes += b.code;
        choose(cands, i, genus - b.genus, budget - b.edges, count + 1, min_count, codes, edges + b.edges, emit);
        codes.resize(mark);
    }
}

}  // namespace

std::vector<ExtremalTree> enumerate_trees(int g, int max_edges) {
    if (g < 2) throw std::invalid_argument("enumerate_trees: genus must be >= 2");
    if (max_edges < 1) throw std::invalid_argument("enumerate_trees: max_edges must be >= 1");
    // by_genus[h]: branches hanging below a parent with total genus h.
    std::vector<std::vector<Branch>> by_genus(static_cast<std::size_t>(g));
    std::vector<Branch> pool;
    for (int h = 1; h <= g - 1; ++h) {
        auto& out = by_genus[h];
        out.push_back({std::to_string(h), h, h, 1});
        std::string codes;
        choose(pool, 0, h, max_edges - 1, 0, 2, codes, 0, [&](const std::string& cs, int e) {
            out.push_back({"0[" + cs + "]", 0, h, e + 1});
        });
        pool.insert(pool.end(), out.begin(), out.end());
        std::sort(pool.begin(), pool.end(), branch_less);
    }
    std::vector<ExtremalTree> trees;
    std::string codes;
    choose(pool, 0, g - 1, max_edges, 0, 1, codes, 0, [&](const std::string& cs, int) {
        trees.push_back(ExtremalTree::parse("1[" + cs + "]"));
    });
    std::sort(trees.begin(), trees.end());
    return trees;
}

std::int64_t aut_order(const ExtremalTree& t) { return t.aut_order(); }

std::int64_t brute_force_aut_order(const ExtremalTree& t) {
    const int n = t.num_vertices();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::int64_t count = 0;
    do {
        bool ok = true;
        for (int v = 1; v < n && ok; ++v)
            ok = t.vertex_genus(perm[v]) == t.vertex_genus(v) && t.parent(perm[v]) == perm[t.parent(v)];
        if (ok) ++count;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return count;
}

Monomial mon(const ExtremalTree& t, int leaf) {
    if (leaf <= 0 || leaf >= t.num_vertices() || !t.is_leaf(leaf))
        throw NotALeaf("vertex " + std::to_string(leaf) + " of " + t.code());
    std::vector<Monomial::Factor> fs;
    for (int e : t.path(leaf)) fs.emplace_back(Variable::z(e), 1);
    return Monomial(std::move(fs));
}

std::vector<Smoothing> smoothings(const ExtremalTree& t) {
    const int n = t.num_edges();
    const int nv = t.num_vertices();
    std::vector<Smoothing> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> part(static_cast<std::size_t>(nv));
        std::iota(part.begin(), part.end(), 0);
        std::function<int(int)> find = [&](int x) { return part[x] == x ? x : part[x] = find(part[x]); };
        for (int e = 1; e <= n; ++e)
            if (mask & (1u << (e - 1))) part[find(e)] = find(t.parent(e));
        std::map<int, int> index;
        for (int v = 0; v < nv; ++v) index.emplace(find(v), static_cast<int>(index.size()));
        std::vector<int> genera(index.size(), 0);
        for (int v = 0; v < nv; ++v) genera[index[find(v)]] += t.vertex_genus(v);
        std::vector<std::pair<int, int>> qedges;
        std::vector<int> kept;
        for (int e = 1; e <= n; ++e) {
            if (mask & (1u << (e - 1))) continue;
            qedges.emplace_back(index[find(t.parent(e))], index[find(e)]);
            kept.push_back(e);
        }
        std::vector<int> relabel;
        auto target = ExtremalTree::try_from_edges(genera, qedges, index[find(0)], &relabel);
        if (!target) continue;
        Smoothing s{*target, std::vector<int>(kept.size()), {}};
        for (std::size_t j = 0; j < kept.size(); ++j) {
            // the canonical child endpoint of a quotient edge names that edge
            int a = relabel[qedges[j].first], b = relabel[qedges[j].second];
            int child = target->parent(b) == a ? b : a;
            s.edge_map[child - 1] = kept[j];
        }
        for (int e = 1; e <= n; ++e)
            if (mask & (1u << (e - 1))) s.contracted.push_back(e);
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const Smoothing& a, const Smoothing& b) {
        if (a.target.code() != b.target.code()) return a.target.code() < b.target.code();
        return a.edge_map < b.edge_map;
    });
    return out;
}

int depth(const ExtremalTree& t) {
    static std::mutex mu;
    static std::map<std::string, int> memo;
    {
        std::lock_guard lock(mu);
        auto it = memo.find(t.code());
        if (it != memo.end()) return it->second;
    }
    int d = 0;
    for (const auto& s : smoothings(t)) d = std::max(d, depth(s.target) + 1);
    std::lock_guard lock(mu);
    memo.emplace(t.code(), d);
    return d;
}

std::string tree_to_json(const ExtremalTree& t) {
    nlohmann::ordered_json j;
    j["genus"] = t.genus();
    j["root"] = 0;
    j["vertices"] = nlohmann::ordered_json::array();
    for (int v = 0; v < t.num_vertices(); ++v)
        j["vertices"].push_back({{"id", v}, {"genus", t.vertex_genus(v)}});
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : t.edges()) j["edges"].push_back({u, v});
    j["aut"] = t.aut_order();
    j["code"] = t.code();
    return j.dump();
}

ExtremalTree tree_from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        std::map<int, int> pos;
        std::vector<int> genera;
        for (const auto& v : j.at("vertices")) {
            pos.emplace(v.at("id").get<int>(), static_cast<int>(genera.size()));
            genera.push_back(v.at("genus").get<int>());
        }
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(pos.at(e.at(0).get<int>()), pos.at(e.at(1).get<int>()));
        ExtremalTree t = ExtremalTree::from_edges(genera, edges, pos.at(j.at("root").get<int>()));
        if (j.contains("code") && j["code"].get<std::string>() != t.code())
            throw InvalidTree("code field does not match the tree");
        if (j.contains("aut") && j["aut"].get<std::int64_t>() != t.aut_order())
            throw InvalidTree("aut field does not match the tree");
        return t;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("tree JSON: ") + e.what());
    } catch (const std::out_of_range& e) {
        throw ParseError(std::string("tree JSON: unknown vertex id"));
    }
}

}  // namespace excess
