#include "excess_tools/golden.hpp"

#include "excess/error.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

namespace excess::tools {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
    throw ParseError("golden line " + std::to_string(line) + ": " + what);
}

Summand parse_bracket_line(const std::string& text, int line, std::size_t nv) {
    const auto open = text.find('[');
    const auto close = text.rfind(']');
    if (open == std::string::npos || close == std::string::npos || close < open) fail(line, "expected <coeff> [..]");
    Summand s{Rational::parse(trim(text.substr(0, open))), {}};
    std::string cur;
    int depth = 0;
    for (std::size_t i = open + 1; i < close; ++i) {
        const char ch = text[i];
        if (ch == '(') ++depth;
        if (ch == ')') --depth;
        if (ch == ',' && depth == 0) {
            s.vertex_polys.push_back(Poly::parse(trim(cur)));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    s.vertex_polys.push_back(Poly::parse(trim(cur)));
    if (s.vertex_polys.size() != nv) fail(line, "bracket has " + std::to_string(s.vertex_polys.size()) + " entries");
    return s;
}

// Vertex permutations of t that preserve genera and parents.
std::vector<std::vector<int>> automorphisms(const ExtremalTree& t) {
    const int n = t.num_vertices();
    std::vector<std::vector<int>> out;
    std::vector<int> sigma(static_cast<std::size_t>(n), -1);
    // Vertices are in breadth-first order, so parents are assigned first.
    auto extend = [&](auto&& self, int v) -> void {
        if (v == n) {
            out.push_back(sigma);
            return;
        }
        const int target_parent = sigma[static_cast<std::size_t>(t.parent(v))];
        for (int w : t.children(target_parent)) {
            if (t.vertex_genus(w) != t.vertex_genus(v) || t.children(w).size() != t.children(v).size()) continue;
            if (std::find(sigma.begin(), sigma.end(), w) != sigma.end()) continue;
            sigma[static_cast<std::size_t>(v)] = w;
            self(self, v + 1);
            sigma[static_cast<std::size_t>(v)] = -1;
        }
    };
    sigma[0] = 0;
    extend(extend, 1);
    return out;
}

int marking_position(const std::vector<int>& ms, int neighbour) {
    auto it = std::find(ms.begin(), ms.end(), neighbour);
    if (it == ms.end()) throw InvalidTree("not a neighbour");
    return static_cast<int>(it - ms.begin()) + 1;
}

// Moves a tagged poly along a vertex map from tree `from` to tree `to`.
Poly transport(const Poly& p, const ExtremalTree& from, const ExtremalTree& to, const std::vector<int>& phi) {
    return rename(p, [&](const Variable& x) {
        const int w = phi.at(static_cast<std::size_t>(x.vertex));
        if (x.ns != Ns::Psi) return Variable{x.ns, w, x.index};
        const int nb = markings(from, x.vertex).at(static_cast<std::size_t>(x.index - 1));
        return Variable::psi(marking_position(markings(to, w), phi.at(static_cast<std::size_t>(nb))), w);
    });
}

Poly symmetrize(const ExtremalTree& t, const Poly& tagged) {
    Poly sum;
    for (const auto& sigma : automorphisms(t)) sum += transport(tagged, t, t, sigma);
    return sum;
}

}  // namespace

std::vector<GoldenBlock> parse_golden(std::istream& in) {
    std::vector<GoldenBlock> blocks;
    std::string raw, label;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s[0] == '#') {
            label = trim(s.substr(1));
            continue;
        }
        if (s.rfind("tree ", 0) == 0) {
            GoldenBlock b;
            b.line = line;
            b.label = label;
            std::istringstream is(s.substr(5));
            std::string tok;
            while (is >> tok) {
                const auto colon = tok.find(':');
                if (colon == std::string::npos) fail(line, "vertex must be genus:parent");
                const std::string g = tok.substr(0, colon), p = tok.substr(colon + 1);
                try {
                    b.genera.push_back(std::stoi(g));
                    b.parents.push_back(p == "-" ? -1 : std::stoi(p));
                } catch (const std::exception&) {
                    fail(line, "bad vertex " + tok);
                }
            }
            if (b.genera.empty() || b.parents[0] != -1) fail(line, "first vertex must be the root");
            blocks.push_back(std::move(b));
            continue;
        }
        if (blocks.empty()) fail(line, "bracket before any tree");
        blocks.back().summands.push_back(parse_bracket_line(s, line, blocks.back().genera.size()));
    }
    return blocks;
}

std::vector<GoldenBlock> load_golden(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open golden file " + path);
    return parse_golden(in);
}

StrataTerm canonical_term(const GoldenBlock& b) {
    const int n = static_cast<int>(b.genera.size());
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        const int p = b.parents[static_cast<std::size_t>(v)];
        if (p < 0 || p >= v) throw InvalidTree("golden line " + std::to_string(b.line) + ": parent must precede child");
        edges.emplace_back(p, v);
    }
    std::vector<int> relabel;
    auto tree = ExtremalTree::try_from_edges(b.genera, edges, 0, &relabel);
    if (!tree) throw InvalidTree("golden line " + std::to_string(b.line) + ": not an extremal tree");

    // The golden layout as a tree of its own, so psi markings can be looked up.
    std::vector<std::vector<int>> golden_marks(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (v) golden_marks[static_cast<std::size_t>(v)].push_back(b.parents[static_cast<std::size_t>(v)]);
        for (int c = 1; c < n; ++c)
            if (b.parents[static_cast<std::size_t>(c)] == v) golden_marks[static_cast<std::size_t>(v)].push_back(c);
    }

    Poly tagged = rename(tagged_poly(b.summands), [&](const Variable& x) {
        const int w = relabel.at(static_cast<std::size_t>(x.vertex));
        if (x.ns != Ns::Psi) return Variable{x.ns, w, x.index};
        const auto& gm = golden_marks.at(static_cast<std::size_t>(x.vertex));
        if (x.index < 1 || x.index > static_cast<int>(gm.size()))
            throw ParseError("golden line " + std::to_string(b.line) + ": psi index out of range");
        const int nb = relabel.at(static_cast<std::size_t>(gm[static_cast<std::size_t>(x.index - 1)]));
        return Variable::psi(marking_position(markings(*tree, w), nb), w);
    });
    return {*tree, untag(*tree, tagged)};
}

bool terms_match(const StrataTerm& a, const StrataTerm& b) {
    if (a.tree != b.tree) return false;
    return symmetrize(a.tree, tagged_poly(a.summands)) == symmetrize(b.tree, tagged_poly(b.summands));
}

GoldenReport compare_golden(const std::vector<GoldenBlock>& blocks, const StrataExpression& expr, bool complete) {
    GoldenReport r;
    std::map<std::string, const StrataTerm*> by_code;
    for (const auto& t : expr.terms) by_code.emplace(t.tree.code(), &t);
    std::map<std::string, int> seen;
    for (const auto& b : blocks) {
        const StrataTerm want = canonical_term(b);
        const std::string& code = want.tree.code();
        ++seen[code];
        auto it = by_code.find(code);
        const StrataTerm got = it == by_code.end() ? StrataTerm{want.tree, {}} : *it->second;
        if (terms_match(want, got)) {
            ++r.matched;
        } else {
            std::ostringstream os;
            os << "line " << b.line << " (" << b.label << ") tree " << code << ": expected "
               << tagged_poly(want.summands) << ", got " << tagged_poly(got.summands);
            r.failures.push_back(os.str());
        }
    }
    if (complete) {
        for (const auto& t : expr.terms)
            if (!seen.count(t.tree.code())) r.failures.push_back("tree " + t.tree.code() + " has no golden block");
    }
    for (const auto& [code, count] : seen)
        if (count > 1) r.failures.push_back("tree " + code + " appears in " + std::to_string(count) + " golden blocks");
    return r;
}

}  // namespace excess::tools
