#include "excess/agring.hpp"

#include "excess/constants.hpp"
#include "excess/error.hpp"

#include <bit>
#include <stdexcept>

namespace excess {

TautClassAg::TautClassAg(int g) : g_(g) {
    if (g < 1 || g > 31) throw std::invalid_argument("TautClassAg: genus out of range");
}

TautClassAg TautClassAg::basis(int g, Mask j) {
    TautClassAg a(g);
    a.add(j, Rational(1));
    return a;
}

Rational TautClassAg::coeff(Mask j) const {
    auto it = coords_.find(j);
    return it == coords_.end() ? Rational(0) : it->second;
}

void TautClassAg::add(Mask j, const Rational& c) {
    if (j >> (g_ - 1)) throw std::invalid_argument("TautClassAg: mask outside {1..g-1}");
    if (c.is_zero()) return;
    auto [it, ins] = coords_.try_emplace(j, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) coords_.erase(it);
    }
}

Poly TautClassAg::to_poly() const {
    Poly p;
    for (const auto& [j, c] : coords_) {
        std::vector<Monomial::Factor> fs;
        for (int i = 1; i < g_; ++i)
            if (j & (1u << (i - 1))) fs.emplace_back(Variable::lambda(i), 1);
        p.add_term(Monomial(std::move(fs)), c);
    }
    return p;
}

TautClassAg& TautClassAg::operator+=(const TautClassAg& o) {
    if (o.g_ != g_) throw GenusMismatch("adding classes of genus " + std::to_string(g_) + " and " + std::to_string(o.g_));
    for (const auto& [j, c] : o.coords_) add(j, c);
    return *this;
}

TautClassAg& TautClassAg::operator*=(const Rational& c) {
    if (c.is_zero()) coords_.clear();
    for (auto& [j, x] : coords_) x *= c;
    return *this;
}

int mask_degree(TautClassAg::Mask j) {
    int d = 0;
    for (int i = 1; j; ++i, j >>= 1)
        if (j & 1u) d += i;
    return d;
}

TautClassAg::Mask socle_mask(int g) { return g <= 1 ? 0u : (1u << (g - 1)) - 1; }

namespace {

using Exps = std::vector<int>;  // exps[i] = exponent of lambda_i, i = 1..g-1
using Coords = std::map<TautClassAg::Mask, Rational>;

// lambda_k^2 = 2 (-1)^{k+1} sum_{i<k} (-1)^i lambda_i lambda_{2k-i}; each step
// spreads indices apart, so repeated rewriting terminates.
const Coords& normal_form(int g, const Exps& e) {
    thread_local std::map<int, std::map<Exps, Coords>> tables;
    auto& table = tables[g];
    if (auto it = table.find(e); it != table.end()) return it->second;

    Coords out;
    int k = 0;
    for (int i = 1; i < g; ++i)
        if (e[i] >= 2) {
            k = i;
            break;
        }
    if (k == 0) {
        TautClassAg::Mask m = 0;
        for (int i = 1; i < g; ++i)
            if (e[i]) m |= 1u << (i - 1);
        out.emplace(m, Rational(1));
    } else {
        const Rational outer(k % 2 ? 2 : -2);
        for (int i = 0; i < k; ++i) {
            const int j = 2 * k - i;
            if (j >= g) continue;
            Exps f = e;
            f[k] -= 2;
            if (i) ++f[i];
            ++f[j];
            const Rational c = outer * Rational(i % 2 ? -1 : 1);
            for (const auto& [m, x] : normal_form(g, f)) {
                auto [it, ins] = out.try_emplace(m, c * x);
                if (!ins) it->second += c * x;
            }
        }
        std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    }
    return table.emplace(e, std::move(out)).first->second;
}

Exps mask_exps(int g, TautClassAg::Mask m) {
    Exps e(static_cast<std::size_t>(g), 0);
    for (int i = 1; i < g; ++i)
        if (m & (1u << (i - 1))) e[i] = 1;
    return e;
}

}  // namespace

TautClassAg reduce(const Poly& p, int g) {
    TautClassAg out(g);
    for (const auto& [mono, c] : p.terms()) {
        Exps e(static_cast<std::size_t>(g), 0);
        bool vanishes = false;
        for (const auto& [v, x] : mono.factors()) {
            if (v.ns != Ns::Lambda || v.vertex != -1)
                throw std::invalid_argument("reduce: " + v.name() + " is not an untagged lambda class");
            if (v.index >= g) vanishes = true;
            else e[v.index] += x;
        }
        if (vanishes) continue;
        for (const auto& [m, x] : normal_form(g, e)) out.add(m, c * x);
    }
    return out;
}

TautClassAg multiply(const TautClassAg& a, const TautClassAg& b) {
    if (a.genus() != b.genus())
        throw GenusMismatch("multiplying classes of genus " + std::to_string(a.genus()) + " and " +
                            std::to_string(b.genus()));
    const int g = a.genus();
    TautClassAg out(g);
    for (const auto& [ja, ca] : a.coords()) {
        for (const auto& [jb, cb] : b.coords()) {
            Exps e = mask_exps(g, ja);
            for (int i = 1; i < g; ++i)
                if (jb & (1u << (i - 1))) ++e[i];
            for (const auto& [m, x] : normal_form(g, e)) out.add(m, ca * cb * x);
        }
    }
    return out;
}

std::vector<std::size_t> graded_dimensions(int g) {
    const int top = g * (g - 1) / 2;
    std::vector<std::size_t> dims(static_cast<std::size_t>(top) + 1, 0);
    for (TautClassAg::Mask m = 0; m <= socle_mask(g); ++m) ++dims[mask_degree(m)];
    return dims;
}

Pairing socle_pairing(int g, int d) {
    const int top = g * (g - 1) / 2;
    if (d < 0 || d > top) throw std::invalid_argument("socle_pairing: degree out of range");
    Pairing p;
    for (TautClassAg::Mask m = 0; m <= socle_mask(g); ++m) {
        if (mask_degree(m) == d) p.rows.push_back(m);
        if (mask_degree(m) == top - d) p.cols.push_back(m);
    }
    for (auto r : p.rows) {
        std::vector<Rational> row;
        for (auto c : p.cols)
            row.push_back(multiply(TautClassAg::basis(g, r), TautClassAg::basis(g, c)).coeff(socle_mask(g)));
        p.matrix.push_back(std::move(row));
    }
    return p;
}

std::size_t rank(Matrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][c].is_zero()) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

Poly jacobi_trudi_wedge2(int g) {
    // e(wedge^2 E) = s_delta with delta = (g-1, ..., 1); dual Jacobi-Trudi
    // entries e_{g-2i+j}, 1 <= i, j <= g-1.
    auto lam = [&](int i) -> Poly {
        if (i < 0 || i > g) return Poly();
        return i == 0 ? Poly(1) : Poly(Variable::lambda(i));
    };
    std::vector<std::vector<Poly>> m;
    for (int i = 1; i < g; ++i) {
        std::vector<Poly> row;
        for (int j = 1; j < g; ++j) row.push_back(lam(g - 2 * i + j));
        m.push_back(std::move(row));
    }
    return determinant(m);
}

TautClassAg schur_wedge2(int g) { return reduce(jacobi_trudi_wedge2(g), g); }

std::pair<TautClassAg, TautClassAg> virtual_class_product(int g, int k) {
    if (k < 1 || k > g - 1) throw BadSplit("k = " + std::to_string(k) + " for genus " + std::to_string(g));
    // c_i(E^vee) = (-1)^i lambda_i
    auto dual = [](int r) {
        Poly d = jacobi_trudi_wedge2(r);
        std::map<Variable, Poly> sub;
        for (int i = 1; i <= r; ++i) sub.emplace(Variable::lambda(i), Poly(Variable::lambda(i)) * Rational(i % 2 ? -1 : 1));
        return reduce(substitute(d, sub), r);
    };
    return {dual(k), dual(g - k)};
}

TautClassAg taut_projection_delta(int g) {
    TautClassAg out(g);
    out.add(g >= 2 ? 1u << (g - 2) : 0u, product_coefficient(g));
    return out;
}

std::vector<Poly> ag_relations(int g) {
    auto lam = [&](int i) -> Poly {
        if (i < 0 || i > g) return Poly();
        return i == 0 ? Poly(1) : Poly(Variable::lambda(i));
    };
    std::vector<Poly> rels{lam(g)};
    for (int k = 1; k <= g; ++k) {
        Poly r;
        for (int i = 0; i <= 2 * k; ++i) r += lam(i) * lam(2 * k - i) * Rational(i % 2 ? -1 : 1);
        if (!r.is_zero()) rels.push_back(r);
    }
    return rels;
}

}  // namespace excess
