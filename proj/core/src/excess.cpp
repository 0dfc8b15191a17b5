#include "excess/excess.hpp"

#include "excess/error.hpp"
#include "excess/parallel.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace excess {

namespace {

Poly path_sum(const ExtremalTree& t, int v) {
    Poly s;
    for (int e : t.path(v)) s += Poly(Variable::z(e));
    return s;
}

Monomial edge_product(const ExtremalTree& t) {
    std::vector<Monomial::Factor> fs;
    for (int e = 1; e <= t.num_edges(); ++e) fs.emplace_back(Variable::z(e), 1);
    return Monomial(std::move(fs));
}

Poly formal_total_class(int max_deg) {
    Poly c(1);
    for (int i = 1; i <= max_deg; ++i) c += Poly(Variable::c(i));
    return c;
}

Contribution zero_contribution(const ExtremalTree& t, int g) {
    return {t, Poly(), g - 1 - t.num_edges()};
}

}  // namespace

LocalModel::LocalModel(const ExtremalTree& t, int genus)
    : tree(t), g(genus), k(static_cast<int>(t.leaves().size())), n(t.num_edges()), ell_count(genus - 1 - k) {
    if (t.genus() != genus) throw GenusMismatch("tree " + t.code() + " has genus " + std::to_string(t.genus()));
    A = Poly(1);
    for (int v : t.leaves()) A *= Poly(1) + path_sum(t, v);
    total_chern = A;
    for (int j = 1; j <= ell_count; ++j) total_chern *= Poly(1) + Poly(Variable::ell(j));
}

Poly LocalModel::top_chern() const {
    Poly p(1);
    for (int j = 1; j <= ell_count; ++j) p *= Poly(Variable::ell(j));
    for (int v : tree.leaves()) p *= path_sum(tree, v);
    return p;
}

Poly factorize_chern(const Poly& p, const LocalModel& model) {
    std::map<Variable, Poly> sub;
    for (const auto& v : p.variables())
        if (v.ns == Ns::Chern) sub.emplace(v, model.chern_class(v.index));
    return substitute(p, sub);
}

Contribution base_contribution(const ExtremalTree& t, int g) {
    if (!t.is_irreducible()) throw NotIrreducible(t.code() + " has genus-0 vertices");
    const int d = g - 1 - static_cast<int>(t.leaves().size());
    if (d < 0) return zero_contribution(t, g);
    Poly denom(1);
    for (int e = 1; e <= t.num_edges(); ++e) denom *= Poly(1) + Poly(Variable::z(e));
    Poly p = graded_part(mul_truncated(formal_total_class(d), series_inverse(denom, d), d), d);
    return {t, p, d};
}

RecursionStep recursion_step(const ExtremalTree& t, int g, const ContributionCache& cache) {
    const int d = g - 1 - t.num_edges();
    if (d < 0) return {Poly(), Poly(), zero_contribution(t, g)};
    LocalModel model(t, g);
    Poly rhs = model.top_chern();
    for (const Smoothing& s : smoothings(t)) {
        auto it = cache.find(s.target.code());
        if (it == cache.end()) throw MissingSmoothing(s.target.code() + " needed by " + t.code());
        Poly moved = rename(it->second.poly, [&](const Variable& v) {
            return v.ns == Ns::Edge ? Variable::z(s.edge_map.at(v.index - 1)) : v;
        });
        std::vector<Monomial::Factor> fs;
        for (int e : s.edge_map) fs.emplace_back(Variable::z(e), 1);
        rhs -= factorize_chern(moved, model) * Poly(Monomial(std::move(fs)));
    }
    Poly quotient = exact_divide(rhs, edge_product(t));
    if (!quotient.is_zero() && (!quotient.is_homogeneous() || quotient.degree() != d))
        throw NotDivisible("recursion quotient for " + t.code() + " is not homogeneous of degree " +
                           std::to_string(d));
    Poly p = elem_sym_rewrite(quotient, model.ell_count, model.A, d);
    return {rhs, quotient, {t, p, d}};
}

Contribution recursion_contribution(const ExtremalTree& t, int g, const ContributionCache& cache) {
    return recursion_step(t, g, cache).result;
}

Contribution recursion_contribution(const ExtremalTree& t, int g) {
    ContributionCache cache;
    std::function<void(const ExtremalTree&)> fill = [&](const ExtremalTree& u) {
        if (cache.count(u.code())) return;
        for (const auto& s : smoothings(u)) fill(s.target);
        cache.emplace(u.code(), recursion_contribution(u, g, cache));
    };
    fill(t);
    return cache.at(t.code());
}

Contribution pixton_contribution(const ExtremalTree& t, int g) {
    const int n = t.num_edges();
    const int d = g - 1 - n;
    if (d < 0) return zero_contribution(t, g);
    const int top = g - 1;
    const auto leaves = t.leaves();
    Poly numer(leaves.size() % 2 ? -1 : 1);
    for (int v = 1; v < t.num_vertices(); ++v) {
        Poly f = Poly(1) + path_sum(t, v);
        const int e = t.valence(v) - 2;
        Poly factor = e >= 0 ? power(f, static_cast<unsigned>(e), top) : power(series_inverse(f, top), static_cast<unsigned>(-e), top);
        numer = mul_truncated(numer, factor, top);
    }
    Poly taylor = taylor_part({numer, edge_product(t)});
    Poly p = graded_part(mul_truncated(formal_total_class(d), taylor, d), d);
    return {t, p, d};
}

std::vector<Contribution> all_contributions(int g, Method method, int jobs) {
    const auto trees = enumerate_trees(g, std::max(g - 1, 1));
    std::vector<std::optional<Contribution>> slots(trees.size());
    if (method == Method::Pixton) {
        parallel_for(trees.size(), jobs, [&](std::size_t i) { slots[i] = pixton_contribution(trees[i], g); });
    } else {
        std::map<int, std::vector<std::size_t>> levels;
        for (std::size_t i = 0; i < trees.size(); ++i) levels[depth(trees[i])].push_back(i);
        ContributionCache cache;
        for (const auto& [lvl, idx] : levels) {
            parallel_for(idx.size(), jobs, [&](std::size_t j) {
                slots[idx[j]] = recursion_contribution(trees[idx[j]], g, cache);
            });
            for (std::size_t i : idx) cache.emplace(trees[i].code(), *slots[i]);
        }
    }
    std::vector<Contribution> out;
    out.reserve(slots.size());
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
}

}  // namespace excess
