#include "excess/strata.hpp"

#include "excess/error.hpp"

#include "json.hpp"

#include <sstream>

namespace excess {

using ojson = nlohmann::ordered_json;

std::vector<int> markings(const ExtremalTree& t, int v) {
    std::vector<int> r;
    if (v != 0) r.push_back(t.parent(v));
    for (int c : t.children(v)) r.push_back(c);
    return r;
}

int vertex_degree_bound(const ExtremalTree& t, int v) {
    const int n = t.valence(v);
    const int h = t.vertex_genus(v);
    return h == 0 ? n - 3 : 2 * h - 3 + n;
}

namespace {

int marking_index(const ExtremalTree& t, int v, int neighbour) {
    const auto ms = markings(t, v);
    for (std::size_t i = 0; i < ms.size(); ++i)
        if (ms[i] == neighbour) return static_cast<int>(i) + 1;
    throw InvalidTree("vertices " + std::to_string(v) + " and " + std::to_string(neighbour) + " are not adjacent");
}

bool within_bounds(const ExtremalTree& t, const Monomial& m) {
    std::vector<int> deg(static_cast<std::size_t>(t.num_vertices()), 0);
    for (const auto& [v, e] : m.factors()) deg.at(v.vertex) += v.degree() * e;
    for (int u = 0; u < t.num_vertices(); ++u)
        if (deg[u] > vertex_degree_bound(t, u)) return false;
    return true;
}

}  // namespace

Poly tagged_poly(const std::vector<Summand>& summands) {
    Poly total;
    for (const auto& s : summands) {
        Poly p(s.coeff);
        for (std::size_t v = 0; v < s.vertex_polys.size(); ++v) {
            const int tag = static_cast<int>(v);
            p *= rename(s.vertex_polys[v], [tag](const Variable& x) { return Variable{x.ns, tag, x.index}; });
        }
        total += p;
    }
    return total;
}

std::vector<Summand> untag(const ExtremalTree& t, const Poly& tagged) {
    std::vector<Summand> out;
    const auto nv = static_cast<std::size_t>(t.num_vertices());
    for (auto it = tagged.terms().rbegin(); it != tagged.terms().rend(); ++it) {
        std::vector<std::vector<Monomial::Factor>> parts(nv);
        for (const auto& [v, e] : it->first.factors())
            parts.at(static_cast<std::size_t>(v.vertex)).emplace_back(Variable{v.ns, -1, v.index}, e);
        Summand s{it->second, {}};
        for (auto& p : parts) s.vertex_polys.emplace_back(Monomial(std::move(p)));
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Summand> substitute_stratum(const Contribution& c) {
    const ExtremalTree& t = c.tree;
    auto psi = [&](int v, int neighbour) -> Poly {
        if (vertex_degree_bound(t, v) < 1) return Poly();
        return Poly(Variable::psi(marking_index(t, v, neighbour), v));
    };
    std::map<Variable, Poly> sub;
    for (int e = 1; e <= t.num_edges(); ++e) sub.emplace(Variable::z(e), -(psi(t.parent(e), e) + psi(e, t.parent(e))));

    // lambda_{g(v)} is dropped: it vanishes on the compact-type locus.
    Poly hodge(1);
    for (int v : t.leaves()) {
        if (t.vertex_genus(v) < 2) continue;
        Poly f(1);
        for (int j = 1; j < t.vertex_genus(v); ++j) f += Poly(Variable::lambda(j, v)) * Rational(j % 2 ? -1 : 1);
        hodge *= f;
    }
    for (const auto& v : c.poly.variables())
        if (v.ns == Ns::Chern) sub.emplace(v, graded_part(hodge, v.index));

    Poly expanded = substitute(c.poly, sub);
    Poly kept;
    for (const auto& [m, k] : expanded.terms())
        if (within_bounds(t, m)) kept.add_term(m, k);
    return untag(t, kept);
}

StrataTerm stratum_term(const Contribution& c) {
    StrataTerm term{c.tree, substitute_stratum(c)};
    const Rational w = Rational(1) / Rational(c.tree.aut_order());
    for (auto& s : term.summands) s.coeff *= w;
    return term;
}

StrataExpression assemble_pullback(int g, const std::vector<Contribution>& contributions) {
    StrataExpression s{g, {}};
    for (const auto& c : contributions) {
        StrataTerm term = stratum_term(c);
        if (!term.summands.empty()) s.terms.push_back(std::move(term));
    }
    std::sort(s.terms.begin(), s.terms.end(),
              [](const StrataTerm& a, const StrataTerm& b) { return a.tree.code() < b.tree.code(); });
    return s;
}

StrataExpression assemble_pullback(int g, Method method, int jobs) {
    return assemble_pullback(g, all_contributions(g, method, jobs));
}

std::string serialize(const StrataExpression& s, StrataFormat format) {
    if (format == StrataFormat::Json) {
        if (s.terms.empty()) return "[]";
        ojson j;
        j["genus"] = s.genus;
        j["terms"] = ojson::array();
        for (const auto& term : s.terms) {
            ojson tj;
            tj["tree"] = ojson::parse(tree_to_json(term.tree));
            tj["aut"] = term.tree.aut_order();
            tj["summands"] = ojson::array();
            for (const auto& sm : term.summands) {
                ojson vp = ojson::array();
                for (const auto& p : sm.vertex_polys) vp.push_back(p.str());
                tj["summands"].push_back({{"coeff", sm.coeff.str()}, {"vertex_polys", vp}});
            }
            j["terms"].push_back(std::move(tj));
        }
        return j.dump(1);
    }

    std::ostringstream os;
    os << "# Tor*[A_1 x A_" << s.genus - 1 << "] on M_" << s.genus << "^ct, " << s.terms.size() << " trees\n";
    for (const auto& term : s.terms) {
        const ExtremalTree& t = term.tree;
        os << "\ntree " << t.code() << "  aut " << t.aut_order() << "  codim " << t.num_edges() << "\n";
        os << "  genera";
        for (int v = 0; v < t.num_vertices(); ++v) os << " " << t.vertex_genus(v);
        os << "\n  edges";
        for (auto [u, v] : t.edges()) os << " (" << u << "," << v << ")";
        os << "\n  markings";
        for (int v = 0; v < t.num_vertices(); ++v) {
            os << " v" << v << ":";
            const auto ms = markings(t, v);
            for (std::size_t i = 0; i < ms.size(); ++i) os << (i ? "," : "") << ms[i];
        }
        os << "\n";
        for (const auto& sm : term.summands) {
            os << "  " << (sm.coeff.sign() < 0 ? "- " : "+ ") << sm.coeff.abs() << " [";
            for (std::size_t v = 0; v < sm.vertex_polys.size(); ++v) os << (v ? ", " : "") << sm.vertex_polys[v];
            os << "]\n";
        }
    }
    return os.str();
}

StrataExpression parse_strata_json(std::string_view text) {
    try {
        ojson j = ojson::parse(text);
        StrataExpression s;
        if (j.is_array() && j.empty()) return s;
        s.genus = j.at("genus").get<int>();
        for (const auto& tj : j.at("terms")) {
            StrataTerm term{tree_from_json(tj.at("tree").dump()), {}};
            if (tj.at("aut").get<std::int64_t>() != term.tree.aut_order())
                throw ParseError("aut does not match tree " + term.tree.code());
            for (const auto& sj : tj.at("summands")) {
                Summand sm{Rational::parse(sj.at("coeff").get<std::string>()), {}};
                for (const auto& p : sj.at("vertex_polys")) sm.vertex_polys.push_back(Poly::parse(p.get<std::string>()));
                if (static_cast<int>(sm.vertex_polys.size()) != term.tree.num_vertices())
                    throw ParseError("vertex count mismatch in tree " + term.tree.code());
                term.summands.push_back(std::move(sm));
            }
            s.terms.push_back(std::move(term));
        }
        return s;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("strata JSON: ") + e.what());
    }
}

}  // namespace excess
