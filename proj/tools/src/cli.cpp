#include "excess_tools/cli.hpp"

#include "excess/agring.hpp"
#include "excess/constants.hpp"
#include "excess/error.hpp"
#include "excess/excess.hpp"
#include "excess/products.hpp"
#include "excess/strata.hpp"
#include "excess/trees.hpp"
#include "excess_tools/published_checks.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

namespace excess::tools {

namespace {

using ojson = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct Options {
    int genus = 0;
    int max_edges = -1;
    std::string tree;
    std::string method = "recursion";
    std::string format = "json";
    int jobs = 1;
    bool strict = false;
};

// Invalid user input detected after flag parsing.
struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_genus(const Options& o, int lo, int hi) {
    if (o.genus < lo || o.genus > hi)
        throw UsageFailure("--genus must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

const char* method_name(Method m) { return m == Method::Recursion ? "recursion" : "pixton"; }

std::vector<Method> methods_of(const std::string& m) {
    if (m == "both") return {Method::Recursion, Method::Pixton};
    return {m == "pixton" ? Method::Pixton : Method::Recursion};
}

// Contribution tables, optionally cached on disk under EXCESS_CACHE_DIR.
class ContributionTable {
public:
    ContributionTable(int g, Method m, int jobs) : g_(g), method_(m), jobs_(jobs) {}

    const std::vector<Contribution>& all() {
        if (!all_) all_ = load_or_compute();
        return *all_;
    }

    Contribution get(const ExtremalTree& t) {
        if (cache_dir()) {
            for (const auto& c : all())
                if (c.tree == t) return c;
        }
        return method_ == Method::Pixton ? pixton_contribution(t, g_) : recursion_contribution(t, g_);
    }

private:
    static std::optional<fs::path> cache_dir() {
        const char* d = std::getenv("EXCESS_CACHE_DIR");
        if (!d || !*d) return std::nullopt;
        return fs::path(d);
    }

    fs::path cache_file() const {
        return *cache_dir() / ("contributions-g" + std::to_string(g_) + "-" + method_name(method_) + ".json");
    }

    std::optional<std::vector<Contribution>> read_cache() const {
        std::ifstream in(cache_file());
        if (!in) return std::nullopt;
        try {
            const ojson j = ojson::parse(in);
            if (j.at("genus").get<int>() != g_ || j.at("method").get<std::string>() != method_name(method_))
                return std::nullopt;
            std::vector<Contribution> out;
            for (const auto& e : j.at("contributions")) {
                ExtremalTree t = ExtremalTree::parse(e.at("tree").get<std::string>());
                out.push_back({t, Poly::parse(e.at("poly").get<std::string>()), g_ - 1 - t.num_edges()});
            }
            if (out.size() != enumerate_trees(g_, std::max(g_ - 1, 1)).size()) return std::nullopt;
            return out;
        } catch (const std::exception&) {
            return std::nullopt;  // unreadable cache entries are recomputed
        }
    }

    void write_cache(const std::vector<Contribution>& cs) const {
        ojson j;
        j["genus"] = g_;
        j["method"] = method_name(method_);
        j["contributions"] = ojson::array();
        for (const auto& c : cs) j["contributions"].push_back({{"tree", c.tree.code()}, {"poly", c.poly.str()}});
        std::error_code ec;
        fs::create_directories(*cache_dir(), ec);
        const fs::path tmp = cache_file().string() + ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) return;
            out << j.dump(1) << "\n";
        }
        fs::rename(tmp, cache_file(), ec);
    }

    std::vector<Contribution> load_or_compute() const {
        if (cache_dir()) {
            if (auto cached = read_cache()) return *cached;
        }
        auto cs = all_contributions(g_, method_, jobs_);
        if (cache_dir()) write_cache(cs);
        return cs;
    }

    int g_;
    Method method_;
    int jobs_;
    std::optional<std::vector<Contribution>> all_;
};

int cmd_trees(const Options& o, std::ostream& out) {
    require_genus(o, 2, 12);
    const int max_edges = o.max_edges < 0 ? o.genus - 1 : o.max_edges;
    const auto trees = enumerate_trees(o.genus, max_edges);
    if (o.format == "json") {
        ojson j = ojson::array();
        for (const auto& t : trees) {
            std::vector<int> genera, parents;
            for (int v = 0; v < t.num_vertices(); ++v) {
                genera.push_back(t.vertex_genus(v));
                parents.push_back(v ? t.parent(v) : -1);
            }
            j.push_back({{"code", t.code()},
                         {"aut", t.aut_order()},
                         {"edges", t.num_edges()},
                         {"depth", depth(t)},
                         {"irreducible", t.is_irreducible()},
                         {"genera", genera},
                         {"parents", parents}});
        }
        out << j.dump(1) << "\n";
    } else {
        out << "# " << trees.size() << " extremal trees of genus " << o.genus << " with at most " << max_edges << " edges\n";
        out << std::left << std::setw(28) << "code" << std::setw(8) << "aut" << std::setw(7) << "edges" << "depth\n";
        for (const auto& t : trees)
            out << std::setw(28) << t.code() << std::setw(8) << t.aut_order() << std::setw(7) << t.num_edges() << depth(t)
                << "\n";
    }
    return Ok;
}

int cmd_contribution(const Options& o, std::ostream& out, std::ostream& err) {
    require_genus(o, 2, 12);
    std::vector<ExtremalTree> trees;
    if (!o.tree.empty()) {
        ExtremalTree t = ExtremalTree::parse(o.tree);
        if (t.genus() != o.genus)
            throw UsageFailure("tree " + t.code() + " has genus " + std::to_string(t.genus()) + ", not " + std::to_string(o.genus));
        trees.push_back(t);
    } else {
        trees = enumerate_trees(o.genus, o.max_edges < 0 ? o.genus - 1 : o.max_edges);
    }

    const auto methods = methods_of(o.method);
    std::vector<std::vector<Poly>> polys(methods.size());
    for (std::size_t m = 0; m < methods.size(); ++m) {
        ContributionTable table(o.genus, methods[m], o.jobs);
        if (o.tree.empty() && o.max_edges < 0) {
            for (const auto& c : table.all()) polys[m].push_back(c.poly);
        } else {
            for (const auto& t : trees) polys[m].push_back(table.get(t).poly);
        }
    }

    bool all_match = true;
    ojson j = ojson::array();
    for (std::size_t i = 0; i < trees.size(); ++i) {
        const ExtremalTree& t = trees[i];
        const bool match = methods.size() < 2 || polys[0][i] == polys[1][i];
        all_match = all_match && match;
        if (o.format == "json") {
            ojson r{{"tree", t.code()}, {"aut", t.aut_order()}, {"degree", o.genus - 1 - t.num_edges()}};
            for (std::size_t m = 0; m < methods.size(); ++m) r[method_name(methods[m])] = polys[m][i].str();
            if (methods.size() > 1) r["match"] = match;
            j.push_back(std::move(r));
        } else {
            out << t.code();
            for (std::size_t m = 0; m < methods.size(); ++m) out << "  " << method_name(methods[m]) << " " << polys[m][i];
            if (methods.size() > 1) out << "  match " << (match ? "true" : "false");
            out << "\n";
        }
    }
    if (o.format == "json") out << j.dump(1) << "\n";
    if (!all_match) {
        err << "error: recursion and pixton contributions differ\n";
        return VerificationFailed;
    }
    return Ok;
}

int cmd_pullback(const Options& o, std::ostream& out, std::ostream& err) {
    require_genus(o, 2, 10);
    const StrataFormat fmt = o.format == "json" ? StrataFormat::Json : StrataFormat::Admcycles;
    std::vector<std::string> texts;
    for (Method m : methods_of(o.method)) {
        ContributionTable table(o.genus, m, o.jobs);
        texts.push_back(serialize(assemble_pullback(o.genus, table.all()), fmt));
    }
    out << texts.front();
    if (texts.front().empty() || texts.front().back() != '\n') out << "\n";
    if (texts.size() > 1 && texts[0] != texts[1]) {
        err << "error: recursion and pixton pullbacks differ\n";
        return VerificationFailed;
    }
    return Ok;
}

int cmd_ring(const Options& o, std::ostream& out, std::ostream& err) {
    require_genus(o, 1, 12);
    const int g = o.genus;
    const auto dims = graded_dimensions(g);
    std::size_t total = 0;
    for (auto d : dims) total += d;
    const int top = g * (g - 1) / 2;
    const TautClassAg socle = TautClassAg::basis(g, socle_mask(g));
    bool ok = total == (std::size_t{1} << (g - 1)) && dims.back() == 1;

    ojson pairings = ojson::array();
    std::ostringstream text;
    for (int d = 0; d <= top; ++d) {
        const Pairing p = socle_pairing(g, d);
        const std::size_t r = rank(p.matrix);
        const bool perfect = r == p.rows.size() && r == p.cols.size();
        ok = ok && perfect;
        pairings.push_back({{"degree", d}, {"rows", p.rows.size()}, {"cols", p.cols.size()}, {"rank", r}, {"perfect", perfect}});
        text << "  " << std::setw(4) << d << std::setw(8) << p.rows.size() << std::setw(8) << r << (perfect ? "  perfect" : "  degenerate")
             << "\n";
    }
    if (o.format == "json") {
        ojson j{{"genus", g},
                {"dimensions", dims},
                {"total", total},
                {"socle", {{"degree", top}, {"generator", socle.str()}}},
                {"pairings", pairings}};
        out << j.dump(1) << "\n";
    } else {
        out << "genus " << g << "\n";
        out << "dimensions";
        for (auto d : dims) out << " " << d;
        out << "\ntotal " << total << "\n";
        out << "socle degree " << top << " generator " << socle << "\n";
        out << "pairings (degree, dimension, rank)\n" << text.str();
    }
    if (!ok) {
        err << "error: R*(A_" << g << ") is not Gorenstein with the expected dimensions\n";
        return VerificationFailed;
    }
    return Ok;
}

int cmd_constants(const Options& o, std::ostream& out) {
    require_genus(o, 1, 60);
    const int g = o.genus;
    const Rational coeff = product_coefficient(g);
    const HodgeConstants h = hodge_constants(g);
    const bool flagged = g == 6 && coeff != published_coefficient_g6();
    if (o.format == "json") {
        ojson j{{"genus", g},
                {"coefficient", coeff.str()},
                {"tail_integral", h.tail_integral.str()},
                {"triple_lambda", h.triple_lambda.str()}};
        if (flagged)
            j["discrepancy"] = {{"printed", published_coefficient_g6().str()},
                                {"computed", coeff.str()},
                                {"note", "printed value differs from g/(6|B_12|); likely transposed digits"}};
        out << j.dump(1) << "\n";
    } else {
        out << "genus " << g << "\n";
        out << "coefficient " << coeff << "\n";
        out << "tail_integral " << h.tail_integral << "\n";
        out << "triple_lambda " << h.triple_lambda << "\n";
        if (flagged)
            out << "discrepancy printed " << published_coefficient_g6() << " computed " << coeff
                << " (g/(6|B_12|); likely transposed digits)\n";
    }
    return Ok;
}

std::string bundle_text(const std::vector<std::pair<int, int>>& eb) {
    if (eb.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < eb.size(); ++i)
        s += (i ? " + " : "") + ("E" + std::to_string(eb[i].first) + "^v(x)E" + std::to_string(eb[i].second) + "^v");
    return s;
}

int cmd_zeroint(const Options& o, std::ostream& out, std::ostream& err) {
    require_genus(o, 2, 8);
    std::vector<Partition> ps;
    for (const auto& p : partitions(o.genus))
        if (p.size() >= 2) ps.push_back(p);
    bool ok = true;
    ojson j = ojson::array();
    for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = a; b < ps.size(); ++b) {
            const auto checks = zeroint_components(ps[a], ps[b]);
            bool vanishes = true;
            ojson comps = ojson::array();
            if (o.format != "json") out << "p (" << join(ps[a]) << ") q (" << join(ps[b]) << ")\n";
            for (const auto& c : checks) {
                const bool zero = c.reduced_euler.is_zero();
                vanishes = vanishes && zero;
                ojson eb = ojson::array();
                for (auto [x, y] : c.component.excess_bundle) eb.push_back({x, y});
                comps.push_back({{"sigma", c.component.sigma}, {"excess", eb}, {"reduced_euler", c.reduced_euler.str()}});
                if (o.format != "json")
                    out << "  sigma (" << join(c.component.sigma) << ")  excess " << bundle_text(c.component.excess_bundle)
                        << "  euler " << c.reduced_euler << "\n";
            }
            ok = ok && vanishes;
            j.push_back({{"p", ps[a]}, {"q", ps[b]}, {"components", comps}, {"vanishes", vanishes}});
        }
    if (o.format == "json") out << j.dump(1) << "\n";
    if (!ok) {
        err << "error: some product-locus intersection does not vanish\n";
        return VerificationFailed;
    }
    return Ok;
}

int cmd_verify_published(const Options& o, std::ostream& out, std::ostream& err) {
    std::size_t pass = 0, fail = 0, flagged = 0;
    ojson j = ojson::array();
    for (const auto& check : published_checks(o.jobs)) {
        CheckResult r;
        try {
            r = check.run();
        } catch (const std::exception& e) {
            r = {CheckStatus::Fail, std::string("exception: ") + e.what()};
        }
        (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : flagged)++;
        if (o.format == "json")
            j.push_back({{"citation", check.citation}, {"status", status_name(r.status)}, {"detail", r.detail}});
        else
            out << std::left << std::setw(12) << status_name(r.status) << check.citation << "  [" << r.detail << "]\n";
    }
    if (o.format == "json")
        out << j.dump(1) << "\n";
    else
        out << pass + fail + flagged << " checks: " << pass << " pass, " << fail << " fail, " << flagged << " discrepancy\n";
    if (fail || (o.strict && flagged)) {
        err << "error: " << fail << " check(s) failed" << (o.strict && flagged ? ", discrepancies counted as failures" : "") << "\n";
        return VerificationFailed;
    }
    return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Excess-intersection calculus for Torelli pullbacks of product loci"};
    app.name(args.empty() ? "excess" : fs::path(args[0]).filename().string());
    app.require_subcommand(1);

    auto genus = [&](CLI::App* s) { s->add_option("--genus", o.genus, "Genus g")->required(); };
    auto format = [&](CLI::App* s, std::vector<std::string> allowed) {
        s->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed))->capture_default_str();
    };
    auto jobs = [&](CLI::App* s) {
        s->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256))->capture_default_str();
    };
    auto method = [&](CLI::App* s) {
        s->add_option("--method", o.method, "recursion, pixton or both")
            ->check(CLI::IsMember({"recursion", "pixton", "both"}))
            ->capture_default_str();
    };

    auto* trees = app.add_subcommand("trees", "List extremal trees");
    genus(trees);
    trees->add_option("--max-edges", o.max_edges, "Largest edge count (default g-1)")->check(CLI::PositiveNumber);
    format(trees, {"json", "text"});

    auto* contrib = app.add_subcommand("contribution", "Excess contributions of extremal trees");
    genus(contrib);
    contrib->add_option("--tree", o.tree, "Canonical tree code (default: every tree)");
    contrib->add_option("--max-edges", o.max_edges, "Largest edge count (default g-1)")->check(CLI::PositiveNumber);
    method(contrib);
    format(contrib, {"json", "text"});
    jobs(contrib);

    auto* pull = app.add_subcommand("pullback", "Strata expression of Tor*[A_1 x A_{g-1}]");
    genus(pull);
    method(pull);
    format(pull, {"json", "text", "admcycles"});
    jobs(pull);

    auto* ring = app.add_subcommand("ring", "Graded structure of R*(A_g)");
    genus(ring);
    format(ring, {"json", "text"});

    auto* consts = app.add_subcommand("constants", "Product-locus coefficient and Hodge integrals");
    genus(consts);
    format(consts, {"json", "text"});

    auto* zero = app.add_subcommand("zeroint", "Check that products of product-locus classes vanish");
    genus(zero);
    format(zero, {"json", "text"});

    auto* verify = app.add_subcommand("verify-paper", "Replay the published worked examples");
    format(verify, {"json", "text"});
    jobs(verify);
    verify->add_flag("--strict", o.strict, "Count known discrepancies as failures");
    // verify-paper prints a table by default.
    verify->preparse_callback([&](std::size_t) { o.format = "text"; });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().front()->help());
            return Ok;
        }
        err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return UsageError;
    }

    try {
        if (*trees) return cmd_trees(o, out);
        if (*contrib) return cmd_contribution(o, out, err);
        if (*pull) return cmd_pullback(o, out, err);
        if (*ring) return cmd_ring(o, out, err);
        if (*consts) return cmd_constants(o, out);
        if (*zero) return cmd_zeroint(o, out, err);
        if (*verify) return cmd_verify_published(o, out, err);
    } catch (const UsageFailure& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const InvalidTree& e) {
        err << "error: " << e.what() << "\n";
        return UsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return VerificationFailed;
    }
    return UsageError;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    return run(std::vector<std::string>(argv, argv + argc), out, err);
}

}  // namespace excess::tools
