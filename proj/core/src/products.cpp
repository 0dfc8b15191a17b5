#include "excess/products.hpp"

#include "excess/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace excess {

Partition make_partition(std::vector<int> parts) {
    if (parts.empty()) throw std::invalid_argument("partition: no parts");
    for (int x : parts)
        if (x <= 0) throw std::invalid_argument("partition: parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return parts;
}

std::vector<Partition> partitions(int g) {
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int x = std::min(rest, max_part); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(g, g);
    return out;
}

namespace {

using Mat = std::vector<std::vector<int>>;

std::vector<std::vector<int>> block_permutations(const Partition& p) {
    std::vector<int> perm(p.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < p.size() && ok; ++i) ok = p[perm[i]] == p[i];
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Smallest matrix under row permutations within equal parts of p and column
// permutations within equal parts of q. For a fixed row order, sorting the
// columns of each block gives the row-major minimum.
Mat canonical(const Mat& m, const Partition& q, const std::vector<std::vector<int>>& row_perms) {
    const std::size_t r = m.size(), c = q.size();
    Mat best;
    for (const auto& perm : row_perms) {
        std::vector<std::vector<int>> cols(c, std::vector<int>(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) cols[j][i] = m[perm[i]][j];
        for (std::size_t j = 0; j < c;) {
            std::size_t k = j;
            while (k < c && q[k] == q[j]) ++k;
            std::sort(cols.begin() + static_cast<long>(j), cols.begin() + static_cast<long>(k));
            j = k;
        }
        Mat cand(r, std::vector<int>(c));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) cand[i][j] = cols[j][i];
        if (best.empty() || cand < best) best = std::move(cand);
    }
    return best;
}

}  // namespace

std::vector<RefinementComponent> extremal_refinements(const Partition& p_in, const Partition& q_in) {
    const Partition p = make_partition(p_in), q = make_partition(q_in);
    const int gp = std::accumulate(p.begin(), p.end(), 0), gq = std::accumulate(q.begin(), q.end(), 0);
    if (gp != gq) throw GenusMismatch("partitions of " + std::to_string(gp) + " and " + std::to_string(gq));
    const std::size_t r = p.size(), c = q.size();

    std::set<Mat> found;
    const auto row_perms = block_permutations(p);
    Mat m(r, std::vector<int>(c, 0));
    std::vector<int> row_left(p.begin(), p.end()), col_left(q.begin(), q.end());
    std::function<void(std::size_t)> fill = [&](std::size_t cell) {
        if (cell == r * c) {
            found.insert(canonical(m, q, row_perms));
            return;
        }
        const std::size_t i = cell / c, j = cell % c;
        int lo = 0, hi = std::min(row_left[i], col_left[j]);
        if (j + 1 == c) lo = row_left[i];
        if (i + 1 == r) lo = std::max(lo, col_left[j]);
        if (lo > hi) return;
        if (j + 1 == c && i + 1 == r && row_left[i] != col_left[j]) return;
        for (int x = lo; x <= hi; ++x) {
            m[i][j] = x;
            row_left[i] -= x;
            col_left[j] -= x;
            fill(cell + 1);
            row_left[i] += x;
            col_left[j] += x;
        }
        m[i][j] = 0;
    };
    fill(0);

    std::vector<RefinementComponent> out;
    for (const auto& mat : found) {
        struct Part { int value, row, col; };
        std::vector<Part> parts;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (mat[i][j]) parts.push_back({mat[i][j], static_cast<int>(i), static_cast<int>(j)});
        std::stable_sort(parts.begin(), parts.end(), [](const Part& a, const Part& b) { return a.value > b.value; });
        RefinementComponent rc;
        rc.matrix = mat;
        for (const auto& pt : parts) {
            rc.sigma.push_back(pt.value);
            rc.row.push_back(pt.row);
            rc.col.push_back(pt.col);
        }
        for (std::size_t a = 0; a < parts.size(); ++a)
            for (std::size_t b = a + 1; b < parts.size(); ++b)
                if (parts[a].row != parts[b].row && parts[a].col != parts[b].col) {
                    rc.excess_bundle.emplace_back(parts[a].value, parts[b].value);
                    rc.excess_parts.emplace_back(static_cast<int>(a), static_cast<int>(b));
                }
        out.push_back(std::move(rc));
    }
    std::sort(out.begin(), out.end(), [](const RefinementComponent& a, const RefinementComponent& b) {
        return std::tie(a.sigma, a.matrix) < std::tie(b.sigma, b.matrix);
    });
    return out;
}

namespace {

void check_ranks(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("euler_tensor: ranks must be positive");
    if (a * b > 25) throw RankTooLarge(std::to_string(a) + " x " + std::to_string(b));
}

}  // namespace

Poly euler_tensor(int a, int b) {
    check_ranks(a, b);
    // Resultant of f(t) = prod_j (t - y_j) and h(t) = prod_i (t + x_i): the
    // Sylvester determinant equals prod_j h(y_j).
    auto ex = [](int i) { return i == 0 ? Poly(1) : Poly(Variable::lambda(i, 0)); };
    auto ey = [](int j) { return j == 0 ? Poly(1) : Poly(Variable::lambda(j, 1)); };
    const int n = a + b;
    std::vector<std::vector<Poly>> syl(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
    for (int r = 0; r < a; ++r)
        for (int s = 0; s <= b; ++s) syl[r][r + s] = ey(s) * Rational(s % 2 ? -1 : 1);
    for (int r = 0; r < b; ++r)
        for (int m = 0; m <= a; ++m) syl[a + r][r + m] = ex(m);
    return determinant(syl);
}

Poly euler_tensor_reduce(int a, int b) {
    check_ranks(a, b);
    static std::mutex mu;
    static std::map<std::pair<int, int>, Poly> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find({a, b}); it != memo.end()) return it->second;
    }
    std::map<Variable, Poly> sub{{Variable::lambda(a, 0), Poly()}, {Variable::lambda(b, 1), Poly()}};
    Poly r = substitute(euler_tensor(a, b), sub);
    std::lock_guard lock(mu);
    memo.emplace(std::make_pair(a, b), r);
    return r;
}

Poly euler_tensor_by_roots(int a, int b) {
    check_ranks(a, b);
    if (a * b > 12) throw RankTooLarge("root expansion limited to a*b <= 12");
    std::vector<Variable> xs, ys, exs, eys;
    for (int i = 1; i <= a; ++i) {
        xs.push_back(Variable::psi(i, 0));
        exs.push_back(Variable::lambda(i, 0));
    }
    for (int j = 1; j <= b; ++j) {
        ys.push_back(Variable::psi(j, 1));
        eys.push_back(Variable::lambda(j, 1));
    }
    Poly p(1);
    for (const auto& x : xs)
        for (const auto& y : ys) p *= Poly(x) + Poly(y);
    return to_elementary(to_elementary(p, xs, exs), ys, eys);
}

std::vector<ComponentCheck> zeroint_components(const Partition& p, const Partition& q) {
    if (p.size() < 2 || q.size() < 2) throw std::invalid_argument("zeroint: both partitions need at least two parts");
    std::vector<ComponentCheck> out;
    for (auto& rc : extremal_refinements(p, q)) {
        Poly e(1);
        for (std::size_t k = 0; k < rc.excess_parts.size() && !e.is_zero(); ++k) {
            const auto [alpha, beta] = rc.excess_parts[k];
            const auto [ra, rb] = rc.excess_bundle[k];
            // e(E_a^vee (x) E_b^vee) = (-1)^{ab} e(E_a (x) E_b)
            Poly f = rename(euler_tensor_reduce(ra, rb), [&](const Variable& v) {
                return Variable{v.ns, v.vertex == 0 ? alpha : beta, v.index};
            });
            e *= f * Rational((ra * rb) % 2 ? -1 : 1);
        }
        out.push_back({std::move(rc), std::move(e)});
    }
    return out;
}

bool zeroint_check(const Partition& p, const Partition& q) {
    for (const auto& c : zeroint_components(p, q))
        if (!c.reduced_euler.is_zero()) return false;
    return true;
}

Poly hodge_split_pullback(int g, const Partition& parts, int m, bool drop_top) {
    if (std::accumulate(parts.begin(), parts.end(), 0) != g)
        throw GenusMismatch("parts do not sum to " + std::to_string(g));
    if (m < 0 || m > g) throw std::invalid_argument("hodge_split_pullback: index out of range");
    Poly out;
    std::vector<Monomial::Factor> cur;
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
        if (i == parts.size()) {
            if (rest == 0) out.add_term(Monomial(cur), Rational(1));
            return;
        }
        for (int a = 0; a <= std::min(rest, parts[i]); ++a) {
            if (drop_top && a == parts[i]) continue;
            if (a) cur.emplace_back(Variable::lambda(a, static_cast<int>(i)), 1);
            rec(i + 1, rest - a);
            if (a) cur.pop_back();
        }
    };
    rec(0, m);
    return out;
}

}  // namespace excess
