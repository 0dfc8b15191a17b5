#include "excess/poly.hpp"

#include "excess/error.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace excess {

std::string Variable::name() const {
    std::string s;
    switch (ns) {
        case Ns::Edge: s = "z"; break;
        case Ns::Ell: s = "l"; break;
        case Ns::Chern: s = "c"; break;
        case Ns::Lambda: s = "lambda"; break;
        case Ns::Psi: s = "psi"; break;
    }
    s += std::to_string(index);
    if (vertex >= 0) s += "{" + std::to_string(vertex) + "}";
    return s;
}

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(const Variable& v, int e) {
    if (e != 0) {
        f_.emplace_back(v, e);
        deg_ = v.degree() * e;
    }
}

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (const auto& [v, e] : factors) {
        if (!f_.empty() && f_.back().first == v)
            f_.back().second += e;
        else
            f_.emplace_back(v, e);
    }
    std::erase_if(f_, [](const Factor& f) { return f.second == 0; });
    for (const auto& [v, e] : f_) {
        if (e < 0) throw std::invalid_argument("Monomial: negative exponent on " + v.name());
        deg_ += v.degree() * e;
    }
}

int Monomial::total_exponent() const {
    int t = 0;
    for (const auto& f : f_) t += f.second;
    return t;
}

int Monomial::exponent(const Variable& v) const {
    auto it = std::lower_bound(f_.begin(), f_.end(), v,
                               [](const Factor& f, const Variable& x) { return f.first < x; });
    return (it != f_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::divides(const Monomial& m) const {
    auto it = m.f_.begin();
    for (const auto& [v, e] : f_) {
        while (it != m.f_.end() && it->first < v) ++it;
        if (it == m.f_.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    auto a = f_.begin(), b = o.f_.begin();
    while (a != f_.end() || b != o.f_.end()) {
        if (b == o.f_.end() || (a != f_.end() && a->first < b->first)) {
            r.f_.push_back(*a++);
        } else if (a == f_.end() || b->first < a->first) {
            r.f_.push_back(*b++);
        } else {
            r.f_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    r.deg_ = deg_ + o.deg_;
    return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
    if (!o.divides(*this)) throw NotDivisible(str() + " by " + o.str());
    Monomial r;
    auto b = o.f_.begin();
    for (const auto& [v, e] : f_) {
        int k = e;
        if (b != o.f_.end() && b->first == v) k -= (b++)->second;
        if (k != 0) r.f_.emplace_back(v, k);
    }
    r.deg_ = deg_ - o.deg_;
    return r;
}

std::string Monomial::str() const {
    if (f_.empty()) return "1";
    std::string s;
    for (const auto& [v, e] : f_) {
        if (!s.empty()) s += "*";
        s += v.name();
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.deg_ != b.deg_) return a.deg_ <=> b.deg_;
    std::size_t i = 0;
    for (; i < a.f_.size() && i < b.f_.size(); ++i) {
        const auto& fa = a.f_[i];
        const auto& fb = b.f_[i];
        if (fa.first != fb.first)
            return fa.first < fb.first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (fa.second != fb.second) return fa.second <=> fb.second;
    }
    if (i < a.f_.size()) return std::strong_ordering::greater;
    if (i < b.f_.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << m.str(); }

// -------------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly::Poly(const Variable& v) { terms_.emplace(Monomial(v), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int Poly::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

bool Poly::is_homogeneous() const { return degree() == min_degree(); }

Rational Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<Variable> Poly::variables() const {
    std::set<Variable> vs;
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors()) vs.insert(f.first);
    return vs;
}

bool Poly::contains(Ns ns) const {
    for (const auto& [m, c] : terms_)
        for (const auto& f : m.factors())
            if (f.first.ns == ns) return true;
    return false;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
    } else {
        for (auto& [m, x] : terms_) x *= c;
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Poly operator*(const Poly& a, const Poly& b) { return mul_truncated(a, b, -1); }

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c.abs();
        if (s.empty()) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        if (m.is_one()) {
            s += a.str();
        } else {
            if (!a.is_one()) s += a.str() + "*";
            s += m.str();
        }
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

// ------------------------------------------------------------------ Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    Poly run() {
        Poly p = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return p;
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    long integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, i_ - start)));
    }

    Poly expr() {
        Poly p;
        bool first = true;
        for (;;) {
            char ch = peek();
            int sign = 1;
            if (ch == '+' || ch == '-') {
                sign = ch == '-' ? -1 : 1;
                ++i_;
            } else if (!first) {
                break;
            }
            Poly t = term();
            if (sign < 0) t = -t;
            p += t;
            first = false;
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        for (;;) {
            char ch = peek();
            if (ch == '*') {
                ++i_;
                p = p * factor();
            } else if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '(') {
                p = p * factor();
            } else {
                break;
            }
        }
        return p;
    }

    Poly factor() {
        if (peek() == '-') {
            ++i_;
            return -factor();
        }
        Poly base = primary();
        if (peek() == '^') {
            ++i_;
            long e = integer();
            base = power(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Poly primary() {
        char ch = peek();
        if (ch == '(') {
            ++i_;
            Poly p = expr();
            if (peek() != ')') fail("expected ')'");
            ++i_;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            long n = integer();
            long d = 1;
            if (peek() == '/') {
                ++i_;
                d = integer();
                if (d == 0) fail("zero denominator");
            }
            return Poly(Rational(n, d));
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) return Poly(variable());
        fail("expected a term");
    }

    Variable variable() {
        std::size_t start = i_;
        while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) ++i_;
        std::string name(s_.substr(start, i_ - start));
        if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_])))
            fail("variable '" + name + "' needs an index");
        int idx = static_cast<int>(integer());
        int vertex = -1;
        if (i_ < s_.size() && s_[i_] == '{') {
            ++i_;
            vertex = static_cast<int>(integer());
            if (peek() != '}') fail("expected '}'");
            ++i_;
        }
        Variable v;
        if (name == "z") v = Variable::z(idx);
        else if (name == "l" || name == "ell") v = Variable::ell(idx);
        else if (name == "c") v = Variable::c(idx);
        else if (name == "lambda") v = Variable::lambda(idx);
        else if (name == "psi") v = Variable::psi(idx);
        else fail("unknown variable '" + name + "'");
        if (vertex >= 0) {
            if (v.ns != Ns::Lambda && v.ns != Ns::Psi) fail("only lambda/psi take a vertex tag");
            v.vertex = vertex;
        }
        if (idx <= 0) fail("index must be positive");
        return v;
    }
};

}  // namespace

Poly Poly::parse(std::string_view text) { return Parser(text).run(); }

// -------------------------------------------------------------- Operations

Poly graded_part(const Poly& p, int d) {
    Poly r;
    for (const auto& [m, c] : p.terms())
        if (m.degree() == d) r.add_term(m, c);
    return r;
}

Poly truncate(const Poly& p, int max_deg) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() > max_deg) break;
        r.add_term(m, c);
    }
    return r;
}

Poly mul_truncated(const Poly& a, const Poly& b, int max_deg) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    std::map<Monomial, Rational> acc;
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            if (max_deg >= 0 && ma.degree() + mb.degree() > max_deg) break;
            auto [it, inserted] = acc.try_emplace(ma * mb, ca);
            if (inserted)
                it->second *= cb;
            else
                it->second += ca * cb;
        }
    }
    for (const auto& [m, c] : acc) r.add_term(m, c);
    return r;
}

Poly power(const Poly& p, unsigned e, int max_deg) {
    Poly r(1);
    Poly base = p;
    while (e) {
        if (e & 1u) r = mul_truncated(r, base, max_deg);
        e >>= 1u;
        if (e) base = mul_truncated(base, base, max_deg);
    }
    return max_deg >= 0 ? truncate(r, max_deg) : r;
}

Poly exact_divide(const Poly& p, const Monomial& m) {
    Poly r;
    for (const auto& [t, c] : p.terms()) {
        if (!m.divides(t)) throw NotDivisible("term " + t.str() + " of " + p.str() + " by " + m.str());
        r.add_term(t / m, c);
    }
    return r;
}

Poly taylor_part(const LaurentPoly& p) {
    Poly r;
    for (const auto& [t, c] : p.numerator.terms())
        if (p.denominator.divides(t)) r.add_term(t / p.denominator, c);
    return r;
}

Poly series_inverse(const Poly& p, int max_deg) {
    if (p.constant_term() != Rational(1))
        throw NotUnitConstantTerm("constant term of " + p.str() + " is " + p.constant_term().str());
    Poly u = Poly(1) - p;
    Poly q(1);
    for (int k = 0; k < max_deg; ++k) q = Poly(1) + mul_truncated(u, q, max_deg);
    return truncate(q, max_deg);
}

Poly substitute(const Poly& p, const Substitution& s, int max_deg) {
    std::map<Variable, std::optional<Poly>> image;
    std::map<std::pair<Variable, int>, Poly> powers;
    auto power_of = [&](const Variable& v, int e) -> const Poly& {
        auto key = std::make_pair(v, e);
        auto it = powers.find(key);
        if (it != powers.end()) return it->second;
        auto im = image.find(v);
        if (im == image.end()) im = image.emplace(v, s(v)).first;
        Poly val = im->second ? power(*im->second, static_cast<unsigned>(e), max_deg)
                              : Poly(Monomial(v, e));
        return powers.emplace(key, std::move(val)).first->second;
    };
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        Poly t(c);
        for (const auto& [v, e] : m.factors()) {
            t = mul_truncated(t, power_of(v, e), max_deg);
            if (t.is_zero()) break;
        }
        r += t;
    }
    return r;
}

Poly substitute(const Poly& p, const std::map<Variable, Poly>& s, int max_deg) {
    return substitute(
        p,
        [&](const Variable& v) -> std::optional<Poly> {
            auto it = s.find(v);
            if (it == s.end()) return std::nullopt;
            return it->second;
        },
        max_deg);
}

Poly rename(const Poly& p, const std::function<Variable(const Variable&)>& f) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        std::vector<Monomial::Factor> fs;
        fs.reserve(m.factors().size());
        for (const auto& [v, e] : m.factors()) fs.emplace_back(f(v), e);
        r.add_term(Monomial(std::move(fs)), c);
    }
    return r;
}

Poly derivative(const Poly& p, const Variable& v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        if (e == 0) continue;
        r.add_term(m / Monomial(v), c * Rational(e));
    }
    return r;
}

Poly integrate(const Poly& p, const Variable& v) {
    Poly r;
    for (const auto& [m, c] : p.terms()) {
        int e = m.exponent(v);
        r.add_term(m * Monomial(v), c / Rational(e + 1));
    }
    return r;
}

Poly elementary_symmetric(const std::vector<Variable>& vars, int i) {
    const int n = static_cast<int>(vars.size());
    if (i < 0 || i > n) return Poly();
    // e_i(x_1..x_k) = e_i(x_1..x_{k-1}) + x_k e_{i-1}(x_1..x_{k-1})
    std::vector<Poly> e(static_cast<std::size_t>(i) + 1);
    e[0] = Poly(1);
    for (int k = 0; k < n; ++k)
        for (int j = std::min(i, k + 1); j >= 1; --j) e[j] += e[j - 1] * Poly(vars[k]);
    return e[i];
}

namespace {

using Exps = std::vector<int>;
using RootPoly = std::map<Exps, Rational>;

RootPoly root_mul(const RootPoly& a, const RootPoly& b) {
    RootPoly r;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exps e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            auto [it, ins] = r.try_emplace(std::move(e), ca * cb);
            if (!ins) it->second += ca * cb;
        }
    }
    std::erase_if(r, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

RootPoly root_elementary(int m, int i) {
    RootPoly r;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (std::popcount(mask) != i) continue;
        Exps e(static_cast<std::size_t>(m), 0);
        for (int j = 0; j < m; ++j)
            if (mask & (1u << j)) e[j] = 1;
        r.emplace(std::move(e), Rational(1));
    }
    return r;
}

}  // namespace

Poly to_elementary(const Poly& p, const std::vector<Variable>& roots, const std::vector<Variable>& e_vars) {
    const int m = static_cast<int>(roots.size());
    if (static_cast<int>(e_vars.size()) < m) throw std::invalid_argument("to_elementary: too few e variables");
    if (m == 0) return p;
    std::map<Variable, int> pos;
    for (int i = 0; i < m; ++i) pos[roots[i]] = i;

    std::map<Exps, Poly> grouped;
    for (const auto& [mono, c] : p.terms()) {
        Exps e(static_cast<std::size_t>(m), 0);
        std::vector<Monomial::Factor> rest;
        for (const auto& [v, x] : mono.factors()) {
            auto it = pos.find(v);
            if (it != pos.end())
                e[it->second] = x;
            else
                rest.emplace_back(v, x);
        }
        grouped[e].add_term(Monomial(std::move(rest)), c);
    }
    std::erase_if(grouped, [](const auto& kv) { return kv.second.is_zero(); });

    std::vector<RootPoly> elem(static_cast<std::size_t>(m) + 1);
    for (int i = 1; i <= m; ++i) elem[i] = root_elementary(m, i);
    std::map<Exps, RootPoly> expansions;
    std::function<const RootPoly&(const Exps&)> expand = [&](const Exps& k) -> const RootPoly& {
        auto it = expansions.find(k);
        if (it != expansions.end()) return it->second;
        int j = m - 1;
        while (j >= 0 && k[j] == 0) --j;
        RootPoly val;
        if (j < 0) {
            val.emplace(Exps(static_cast<std::size_t>(m), 0), Rational(1));
        } else {
            Exps prev = k;
            --prev[j];
            val = root_mul(expand(prev), elem[j + 1]);
        }
        return expansions.emplace(k, std::move(val)).first->second;
    };

    Poly result;
    while (!grouped.empty()) {
        auto lead = std::prev(grouped.end());
        Exps alpha = lead->first;
        Poly coef = lead->second;
        for (int i = 0; i + 1 < m; ++i)
            if (alpha[i] < alpha[i + 1])
                throw NotSymmetric("leading exponent not a partition in " + p.str());
        Exps k(static_cast<std::size_t>(m));
        std::vector<Monomial::Factor> emono;
        for (int i = 0; i < m; ++i) {
            k[i] = alpha[i] - (i + 1 < m ? alpha[i + 1] : 0);
            if (k[i]) emono.emplace_back(e_vars[i], k[i]);
        }
        result += coef * Poly(Monomial(std::move(emono)));
        for (const auto& [beta, c] : expand(k)) {
            Poly& slot = grouped[beta];
            slot -= coef * c;
            if (slot.is_zero()) grouped.erase(beta);
        }
    }
    return result;
}

Poly elem_sym_rewrite(const Poly& p, int ell_count, const Poly& A, int max_deg) {
    if (ell_count <= 0) {
        if (p.contains(Ns::Ell)) throw ResidualEll("no ell variables expected in " + p.str());
        return p;
    }
    std::vector<Variable> roots, placeholders;
    for (int i = 1; i <= ell_count; ++i) {
        roots.push_back(Variable::ell(i));
        placeholders.push_back(Variable{Ns::Chern, -2, i});
    }
    for (const auto& v : p.variables())
        if (v.ns == Ns::Ell && (v.index < 1 || v.index > ell_count))
            throw ResidualEll("unexpected " + v.name() + " in " + p.str());
    Poly q = to_elementary(p, roots, placeholders);

    int d = std::max(max_deg, 0);
    Poly c(1);
    for (int i = 1; i <= d; ++i) c += Poly(Variable::c(i));
    Poly cA = mul_truncated(c, series_inverse(A, d), d);
    std::map<Variable, Poly> sub;
    for (int i = 1; i <= ell_count; ++i) sub.emplace(placeholders[i - 1], graded_part(cA, i));
    Poly r = substitute(q, sub);
    if (r.contains(Ns::Ell)) throw ResidualEll("ell survived rewriting of " + p.str());
    return r;
}

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
    if (n == 0) return Poly(1);
    if (n > 24) throw std::invalid_argument("determinant: matrix too large");
    std::unordered_map<std::uint32_t, Poly> memo;
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    std::function<Poly(std::uint32_t)> minor = [&](std::uint32_t used) -> Poly {
        if (used == full) return Poly(1);
        auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        const std::size_t row = static_cast<std::size_t>(std::popcount(used));
        Poly acc;
        int position = 0;
        for (std::size_t col = 0; col < n; ++col) {
            if (used & (1u << col)) continue;
            if (!m[row][col].is_zero()) {
                Poly t = m[row][col] * minor(used | (1u << col));
                if (position % 2) acc -= t;
                else acc += t;
            }
            ++position;
        }
        memo.emplace(used, acc);
        return acc;
    };
    return minor(0);
}

}  // namespace excess
