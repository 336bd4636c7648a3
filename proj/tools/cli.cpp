#include "cli.hpp"

#include <cstdlib>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ascent/counting.hpp"
#include "ascent/involution.hpp"
#include "ascent/series.hpp"
#include "ascent/sylvester.hpp"
#include "ascent/verify.hpp"

namespace ascent::cli {

namespace {

using json = nlohmann::json;

struct Config {
    std::string family = "plain";
    int m = 1;
    int n = 0;
    int order = 20;
    std::string format;  // empty: the subcommand default
    int size_limit = 0;  // 0: library defaults
    int path_limit() const { return size_limit > 0 ? size_limit : kDefaultSizeLimit; }
    int interval_limit() const { return size_limit > 0 ? size_limit : kDefaultIntervalSizeLimit; }
};

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

PathFamily family_of(const Config& c)
{
    if (c.family == "plain") {
        if (c.m != 1)
            throw Usage("--family plain takes no --m other than 1");
        return PathFamily::plain();
    }
    if (c.family == "mdyck")
        return PathFamily::mdyck(c.m);
    if (c.family == "mirrored")
        return PathFamily::mirrored(c.m);
    throw Usage("unknown family '" + c.family + "'");
}

json family_json(const PathFamily& f)
{
    const char* kind = f.kind == FamilyKind::Plain ? "plain" : f.is_mirrored() ? "mirrored" : "mdyck";
    return {{"family", kind}, {"m", f.m}};
}

std::string num(double v)
{
    std::ostringstream s;
    s << std::setprecision(12) << v;
    return s.str();
}

void require_n(const Config& c)
{
    if (c.n < 1)
        throw Usage("--n must be a positive integer");
}

// ---------------------------------------------------------------- handlers

int paths_enumerate(const Config& c, bool count_only, std::ostream& out)
{
    require_n(c);
    auto f = family_of(c);
    auto paths = enumerate_paths(f, c.n, c.path_limit());
    if (c.format == "json") {
        json j = family_json(f);
        j["n"] = c.n;
        j["count"] = std::to_string(paths.size());
        if (!count_only) {
            j["paths"] = json::array();
            for (const auto& p : paths)
                j["paths"].push_back(render(p));
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (count_only) {
        out << paths.size() << "\n";
        return 0;
    }
    for (const auto& p : paths)
        out << render(p) << "\n";
    return 0;
}

int poset_hasse(const Config& c, std::ostream& out)
{
    require_n(c);
    auto f = family_of(c);
    auto h = hasse(f, c.n, c.path_limit());
    if (c.format == "json") {
        json j = family_json(f);
        j["n"] = c.n;
        j["nodes"] = json::array();
        for (const auto& p : h.nodes)
            j["nodes"].push_back(render(p));
        j["edges"] = json::array();
        for (auto [a, b] : h.edges)
            j["edges"].push_back({a, b});
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "digraph hasse {\n";
    for (const auto& p : h.nodes)
        out << "  \"" << render(p) << "\";\n";
    for (auto [a, b] : h.edges)
        out << "  \"" << render(h.nodes[a]) << "\" -> \"" << render(h.nodes[b]) << "\";\n";
    out << "}\n";
    return 0;
}

int poset_intervals(const Config& c, bool stats, std::ostream& out)
{
    require_n(c);
    auto f = family_of(c);
    auto ivs = enumerate_intervals(f, c.n, c.interval_limit());
    if (c.format == "json") {
        json j = family_json(f);
        j["n"] = c.n;
        j["count"] = std::to_string(ivs.size());
        j["intervals"] = json::array();
        for (const auto& iv : ivs) {
            const auto& s = iv.stats();
            j["intervals"].push_back({{"bottom", render(iv.bottom())},
                                      {"top", render(iv.top())},
                                      {"final_descent_bottom", s.final_descent_bottom},
                                      {"final_descent_top", s.final_descent_top},
                                      {"first_ascent_bottom", s.first_ascent_bottom},
                                      {"r", s.r}});
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& iv : ivs) {
        out << render(iv.bottom()) << "\t" << render(iv.top());
        if (stats) {
            const auto& s = iv.stats();
            out << "\t" << s.final_descent_bottom << "\t" << s.final_descent_top << "\t" << s.first_ascent_bottom
                << "\t" << s.r;
        }
        out << "\n";
    }
    return 0;
}

Interval interval_arg(const Config& c, const std::string& bottom, const std::string& top, const PathFamily& f)
{
    Interval iv(parse_path(bottom), parse_path(top));
    int size = family_size(iv.bottom(), f);
    family_size(iv.top(), f);
    if (c.n > 0 && size != c.n)
        throw Error(ErrorKind::SizeMismatch, "paths have size " + std::to_string(size) + ", not " +
                                                 std::to_string(c.n));
    return iv;
}

int sylvester_to_word(const Config& c, const std::string& bottom, const std::string& top, std::ostream& out)
{
    auto f = family_of(c);
    out << render(interval_to_sylvester(interval_arg(c, bottom, top, f), f)) << "\n";
    return 0;
}

void for_each_word(int len, int n, Word& cur, const std::function<void(const Word&)>& visit)
{
    if (static_cast<int>(cur.size()) == len) {
        visit(cur);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        cur.push_back(a);
        for_each_word(len, n, cur, visit);
        cur.pop_back();
    }
}

int sylvester_roundtrip(const Config& c, int max_length, std::ostream& out)
{
    require_n(c);
    if (max_length <= 0)
        max_length = 2 * c.n;
    long words = 0, bad = 0;
    std::set<std::pair<std::vector<int>, std::vector<int>>> pairs;
    for (int len = 1; len <= max_length; ++len) {
        Word cur;
        for_each_word(len, c.n, cur, [&](const Word& w) {
            if (!in_wn(w, c.n) || !avoids_patterns(w))
                return;
            ++words;
            auto [u, v] = phi(w, c.n);
            if (psi(u, v, c.n) != w)
                ++bad;
            if (!pairs.emplace(u.values(), v.values()).second)
                ++bad;  // two words with one image
            auto back = phi(psi(u, v, c.n), c.n);
            if (!(back.bottom == u) || !(back.top == v))
                ++bad;
        });
    }
    out << "words " << words << "\npairs " << pairs.size() << "\nfailures " << bad << "\n";
    out << (bad == 0 ? "OK" : "FAIL") << "\n";
    return bad == 0 ? 0 : 1;
}

int count_intervals(const Config& c, const std::string& method, std::ostream& out)
{
    require_n(c);
    auto f = family_of(c);
    const bool weighted_ok = f.is_mirrored() || f.m == 1;
    static const std::vector<std::string> methods = {"brute", "gtree", "walk", "weighted", "series"};
    std::vector<std::string> chosen;
    if (method == "all") {
        for (const auto& m : methods)
            if (m != "weighted" || weighted_ok)
                chosen.push_back(m);
    } else {
        if (method == "weighted" && !weighted_ok)
            throw Usage("the weighted model only applies to mirrored families and m = 1");
        chosen.push_back(method);
    }
    std::vector<std::pair<std::string, mpz_class>> got;
    for (const auto& m : chosen) {
        mpz_class v;
        if (m == "brute")
            v = static_cast<unsigned long>(enumerate_intervals(f, c.n, c.interval_limit()).size());
        else if (m == "gtree")
            v = gt_count(f, c.n);
        else if (m == "walk")
            v = quadrant_count(walk_spec_for(f), c.n).at({0, 0});
        else if (m == "weighted")
            v = weighted_quadrant_count(f.m, c.n);
        else if (m == "series") {
            mpq_class s = functional_equation_expand(f, c.n).back().sum();
            v = s.get_num();
        }
        got.emplace_back(m, v);
    }
    bool match = true;
    for (const auto& [m, v] : got)
        match = match && v == got.front().second;
    if (c.format == "json") {
        json j = family_json(f);
        j["n"] = c.n;
        j["counts"] = json::object();
        for (const auto& [m, v] : got)
            j["counts"][m] = v.get_str();
        j["verdict"] = match ? "MATCH" : "MISMATCH";
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [m, v] : got)
            out << m << " " << v << "\n";
        out << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? 0 : 1;
}

int count_table(const Config& c, const std::string& spec_name, std::ostream& out)
{
    if (c.n < 0)
        throw Usage("--n must be nonnegative");
    WalkSpec spec{WalkKind::InfiniteS, c.m};
    if (spec_name == "sprime")
        spec.kind = WalkKind::InfiniteSPrime;
    else if (spec_name == "weighted")
        spec.kind = WalkKind::WeightedFinite;
    else if (spec_name != "s")
        throw Usage("--spec must be s, sprime or weighted");
    auto table = quadrant_count(spec, c.n);
    out << "i,j,count\n";
    for (const auto& [p, v] : table.counts)
        out << p.first << "," << p.second << "," << v << "\n";
    return 0;
}

int series_counts(const Config& c, std::ostream& out)
{
    require_n(c);
    auto g = gf_counts(c.n);
    if (c.format == "json") {
        json j{{"n", c.n}, {"counts", json::array()}};
        for (const auto& v : g)
            j["counts"].push_back(v.get_str());
        out << j.dump(2) << "\n";
        return 0;
    }
    for (const auto& v : g)
        out << v << "\n";
    return 0;
}

int series_verify(const Config& c, std::ostream& out)
{
    if (c.order < 3)
        throw Usage("--order must be at least 3");
    const int N = c.order;
    std::vector<std::pair<std::string, bool>> rows;
    auto run = [&](const std::string& name, const std::function<bool()>& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const Error&) {
            ok = false;
        }
        rows.emplace_back(name, ok);
    };
    run("Z residual", [&] {
        TruncSeries z = solve_Z(N);
        TruncSeries t = TruncSeries::t(N);
        return (z - t * (z + mpq_class(1)) * (z * mpq_class(2) + mpq_class(1)).pow(2)).valuation() > N;
    });
    auto g = gf_counts(N);
    run("counts match generating tree", [&] { return g == gt_count_sequence(PathFamily::plain(), N); });
    run("recurrence", [&] { return recurrence_check(g); });
    const int marg = std::min(N, 8);
    auto marginal = [](const Poly2& p, int var) {
        Poly1 out;
        const Poly2 q = p.evaluate(1 - var, 1);
        for (const auto& [e, k] : q.terms())
            out.add_term({e[var]}, k);
        return out;
    };
    run("G(x,1) closed form", [&] {
        auto s = closed_form_G_x1(marg);
        for (int n = 1; n <= marg; ++n)
            if (!(s[n] == marginal(gt_count_refined(PathFamily::plain(), n), 0)))
                return false;
        return true;
    });
    run("G(1,y) closed form", [&] {
        auto s = closed_form_G_1y(marg);
        for (int n = 1; n <= marg; ++n)
            if (!(s[n] == marginal(gt_count_refined(PathFamily::plain(), n), 1)))
                return false;
        return true;
    });
    run("G'(x,1) closed form", [&] {
        auto s = closed_form_Gp_x1(marg);
        for (int n = 1; n <= marg; ++n)
            if (!(s[n] == marginal(gt_count_refined(PathFamily::mirrored(1), n), 0)))
                return false;
        return true;
    });
    const int P = std::min(N, 15);
    run("G(x,1) parametrization", [&] { return parametrized_G_x1(P) == closed_form_G_x1(P); });
    run("G(1,y) parametrization", [&] { return parametrized_G_1y(P) == closed_form_G_1y(P); });
    run("G'(x,1) parametrization", [&] { return parametrized_Gp_x1(P) == closed_form_Gp_x1(P); });
    auto res = catalytic_residuals(N, N + 10);
    rows.emplace_back("Pol2 residual", res.pol2_residual_zero);
    rows.emplace_back("Q11 cubic residual", res.q11_cubic_residual_zero);
    rows.emplace_back("invariant ratio", res.invariant_ratio0_zero);
    rows.emplace_back("decoupling identity", res.decoupling_zero);

    bool all = true;
    for (const auto& [name, ok] : rows)
        all = all && ok;
    if (c.format == "json") {
        json j{{"order", N}, {"checks", json::array()}, {"passed", all}};
        for (const auto& [name, ok] : rows)
            j["checks"].push_back({{"name", name}, {"passed", ok}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& [name, ok] : rows)
            out << (ok ? "PASS  " : "FAIL  ") << name << "\n";
    }
    return all ? 0 : 1;
}

int series_asym(const Config& c, int n_max, std::ostream& out)
{
    auto f = family_of(c);
    auto d = asymptotics(f);
    if (n_max <= 0)
        n_max = f.m == 1 ? 60 : 40;
    auto fit = empirical_growth(f, n_max);
    const double cd = correlation_from_derivatives(f);
    if (c.format == "json") {
        json j = family_json(f);
        j["mu"] = d.mu;
        j["c"] = d.c;
        j["alpha"] = d.alpha;
        j["x0"] = d.x0;
        j["y0"] = d.y0;
        j["c_from_derivatives"] = cd;
        j["fit"] = {{"n_max", n_max}, {"mu_hat", fit.mu_hat}, {"alpha_hat", fit.alpha_hat}, {"kappa_hat", fit.kappa_hat}};
        out << j.dump(2) << "\n";
        return 0;
    }
    out << "mu " << num(d.mu) << "\nc " << num(d.c) << "\nalpha " << num(d.alpha) << "\nx0 " << num(d.x0)
        << "\ny0 " << num(d.y0) << "\nc_from_derivatives " << num(cd) << "\nn_max " << n_max << "\nmu_hat "
        << num(fit.mu_hat) << "\nalpha_hat " << num(fit.alpha_hat) << "\nkappa_hat " << num(fit.kappa_hat) << "\n";
    return 0;
}

void print_pair(std::ostream& out, const char* tag, const Interval& iv)
{
    out << tag << "\t" << render(iv.bottom()) << "\t" << render(iv.top()) << "\ta=" << iv.stats().first_ascent_bottom
        << "\tr=" << iv.stats().r << "\n";
}

int involution_apply(const Config& c, const std::string& bottom, const std::string& top, std::ostream& out)
{
    Interval iv = interval_arg(c, bottom, top, PathFamily::plain());
    Interval g = involution_f(iv);
    if (c.format == "json") {
        auto side = [](const Interval& x) {
            return json{{"bottom", render(x.bottom())},
                        {"top", render(x.top())},
                        {"a", x.stats().first_ascent_bottom},
                        {"r", x.stats().r}};
        };
        out << json{{"input", side(iv)}, {"image", side(g)}}.dump(2) << "\n";
        return 0;
    }
    print_pair(out, "input", iv);
    print_pair(out, "image", g);
    return 0;
}

int involution_verify(const Config& c, std::ostream& out)
{
    require_n(c);
    Involution f;
    long total = 0, bad = 0;
    for (int n = 1; n <= c.n; ++n) {
        std::map<std::pair<int, int>, long> dist;
        long here = 0;
        for (const auto& iv : enumerate_intervals(PathFamily::plain(), n, c.interval_limit())) {
            ++here;
            Interval g = f.apply(iv);
            ++total;
            const auto& s = iv.stats();
            if (!(f.apply(g) == iv) || g.stats().first_ascent_bottom != s.r || g.stats().r != s.first_ascent_bottom)
                ++bad;
            ++dist[{s.first_ascent_bottom, s.r}];
        }
        bool sym = true;
        for (const auto& [k, v] : dist)
            sym = sym && dist[{k.second, k.first}] == v;
        out << "n=" << n << "\tintervals=" << here << "\tsymmetric=" << (sym ? "yes" : "no") << "\n";
        if (!sym)
            ++bad;
    }
    out << "checked " << total << " intervals, " << bad << " failures\n" << (bad == 0 ? "OK" : "FAIL") << "\n";
    return bad == 0 ? 0 : 1;
}

int verify_all(const Config& c, bool fast, std::ostream& out)
{
    auto results = run_verify_suite({fast});
    bool all = true, internal = false;
    for (const auto& r : results) {
        all = all && r.passed;
        internal = internal || r.internal_error;
    }
    if (c.format == "json") {
        json j{{"fast", fast}, {"checks", json::array()}, {"passed", all}};
        for (const auto& r : results)
            j["checks"].push_back({{"module", r.module}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        out << j.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            out << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(11) << r.module << r.name;
            if (!r.detail.empty())
                out << "  (" << r.detail << ")";
            out << "\n";
        }
        int passed = 0;
        for (const auto& r : results)
            passed += r.passed;
        out << passed << "/" << results.size() << " checks passed\n";
    }
    if (internal)
        return 3;
    return all ? 0 : 1;
}

void add_family(CLI::App* app, Config& c, bool with_n = true)
{
    app->add_option("--family", c.family, "plain, mdyck or mirrored")
        ->check(CLI::IsMember({"plain", "mdyck", "mirrored"}));
    app->add_option("--m", c.m, "family parameter")->check(CLI::PositiveNumber);
    if (with_n)
        app->add_option("--n", c.n, "size in large steps");
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    Config c;
    if (const char* env = std::getenv("ASCENT_SIZE_LIMIT")) {
        try {
            c.size_limit = std::stoi(env);
        } catch (const std::exception&) {
            err << "error: ASCENT_SIZE_LIMIT must be an integer\n";
            return 2;
        }
    }

    CLI::App app{"Ascent lattices on Dyck paths: enumeration, counting and verification", "ascent"};
    app.require_subcommand(1);
    app.add_option("--size-limit", c.size_limit, "override the enumeration guard on m*n");

    std::function<int()> action;
    auto leaf = [&](CLI::App* sub, std::function<int()> fn) {
        sub->callback([&action, fn] { action = fn; });
    };

    auto* paths = app.add_subcommand("paths", "path families")->require_subcommand(1);
    {
        auto* s = paths->add_subcommand("enumerate", "list the paths of a family");
        add_family(s, c);
        s->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        auto* count_only = s->add_flag("--count-only", "print only the number of paths");
        leaf(s, [&, count_only] { return paths_enumerate(c, count_only->count() > 0, out); });
    }

    auto* poset = app.add_subcommand("poset", "the ascent order")->require_subcommand(1);
    {
        auto* s = poset->add_subcommand("hasse", "Hasse diagram");
        add_family(s, c);
        s->add_option("--format", c.format)->check(CLI::IsMember({"dot", "json"}));
        leaf(s, [&] { return poset_hasse(c, out); });

        auto* t = poset->add_subcommand("intervals", "all intervals");
        add_family(t, c);
        t->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        auto* stats = t->add_flag("--stats", "append final descents, first ascent and r");
        leaf(t, [&, stats] { return poset_intervals(c, stats->count() > 0, out); });
    }

    std::string bottom, top;
    int max_length = 0;
    auto* syl = app.add_subcommand("sylvester", "sylvester words")->require_subcommand(1);
    {
        auto* s = syl->add_subcommand("to-word", "canonical word of an interval");
        add_family(s, c);
        s->add_option("--bottom", bottom)->required();
        s->add_option("--top", top)->required();
        leaf(s, [&] { return sylvester_to_word(c, bottom, top, out); });

        auto* r = syl->add_subcommand("roundtrip", "exhaustive phi/psi round trips");
        r->add_option("--n", c.n)->required();
        r->add_option("--max-length", max_length, "longest word checked (default 2n)");
        leaf(r, [&] { return sylvester_roundtrip(c, max_length, out); });
    }

    std::string method = "all", spec = "s";
    auto* count = app.add_subcommand("count", "interval counts")->require_subcommand(1);
    {
        auto* s = count->add_subcommand("intervals", "count intervals by one or all methods");
        add_family(s, c);
        s->add_option("--method", method)->check(CLI::IsMember({"brute", "gtree", "walk", "weighted", "series", "all"}));
        s->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        leaf(s, [&] { return count_intervals(c, method, out); });

        auto* t = count->add_subcommand("table", "quadrant walks by endpoint");
        t->add_option("--spec", spec)->check(CLI::IsMember({"s", "sprime", "weighted"}));
        t->add_option("--m", c.m)->check(CLI::PositiveNumber);
        t->add_option("--n", c.n, "number of steps");
        t->add_option("--format", c.format)->check(CLI::IsMember({"csv"}));
        leaf(t, [&] { return count_table(c, spec, out); });
    }

    int n_max = 0;
    auto* ser = app.add_subcommand("series", "generating functions")->require_subcommand(1);
    {
        auto* s = ser->add_subcommand("counts", "g(1..n) from the closed form");
        s->add_option("--n", c.n)->required();
        s->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        leaf(s, [&] { return series_counts(c, out); });

        auto* v = ser->add_subcommand("verify", "closed forms and residual identities");
        v->add_option("--order", c.order);
        v->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        leaf(v, [&] { return series_verify(c, out); });

        auto* a = ser->add_subcommand("asym", "growth constants and empirical fits");
        add_family(a, c, false);
        a->add_option("--n-max", n_max, "terms used by the fit");
        a->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        leaf(a, [&] { return series_asym(c, n_max, out); });
    }

    auto* inv = app.add_subcommand("involution", "the (a, r) involution on D_n")->require_subcommand(1);
    {
        auto* s = inv->add_subcommand("apply", "image of one interval");
        s->add_option("--bottom", bottom)->required();
        s->add_option("--top", top)->required();
        s->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        leaf(s, [&] { return involution_apply(c, bottom, top, out); });

        auto* v = inv->add_subcommand("verify", "f o f = id and the statistic swap up to size n");
        v->add_option("--n", c.n)->required();
        leaf(v, [&] { return involution_verify(c, out); });
    }

    auto* ver = app.add_subcommand("verify", "invariant suite")->require_subcommand(1);
    {
        auto* s = ver->add_subcommand("all", "run every check");
        auto* fast = s->add_flag("--fast", "small ranges");
        s->add_option("--format", c.format)->check(CLI::IsMember({"text", "json"}));
        leaf(s, [&, fast] { return verify_all(c, fast->count() > 0, out); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        return action ? action() : 2;
    } catch (const Usage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace ascent::cli
