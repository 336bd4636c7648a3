// One PASS/FAIL line per acceptance criterion, each against its time budget.
// Exit status is nonzero if any criterion fails or runs over budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <string>

#include "ascent/counting.hpp"
#include "ascent/involution.hpp"
#include "ascent/series.hpp"
#include "ascent/sylvester.hpp"

using namespace ascent;

namespace {

struct Result {
    bool ok = true;
    std::string why;
    void fail(const std::string& w)
    {
        if (ok)
            why = w;
        ok = false;
    }
};

mpz_class brute(const PathFamily& f, int n) { return static_cast<unsigned long>(enumerate_intervals(f, n).size()); }

mpz_class series_count(const PathFamily& f, int n)
{
    mpq_class s = functional_equation_expand(f, n).back().sum();
    return s.get_num();
}

// 1. first few counts of each family
Result small_counts()
{
    Result r;
    struct Row {
        PathFamily f;
        std::vector<long> want;
    };
    std::vector<Row> rows = {{PathFamily::plain(), {1, 3, 13, 69}},
                             {PathFamily::mirrored(1), {1, 3, 13, 69}},
                             {PathFamily::mdyck(2), {1, 6, 62}},
                             {PathFamily::mirrored(2), {1, 5, 40}}};
    for (const auto& row : rows) {
        auto fe = functional_equation_expand(row.f, static_cast<int>(row.want.size()));
        for (std::size_t i = 0; i < row.want.size(); ++i) {
            const int n = static_cast<int>(i) + 1;
            if (brute(row.f, n) != row.want[i] || fe[i].sum() != row.want[i])
                r.fail(to_string(row.f) + " n=" + std::to_string(n));
        }
    }
    return r;
}

// 2. brute force = generating tree = excursions = functional equation (= weighted walks)
Result five_way()
{
    Result r;
    for (auto [f, nmax] : std::vector<std::pair<PathFamily, int>>{{PathFamily::plain(), 7},
                                                                  {PathFamily::mdyck(2), 5},
                                                                  {PathFamily::mirrored(2), 5}}) {
        auto fe = functional_equation_expand(f, nmax);
        auto gt = gt_count_sequence(f, nmax);
        for (int n = 1; n <= nmax; ++n) {
            mpz_class b = brute(f, n);
            std::vector<mpz_class> others = {gt[n - 1], quadrant_count(walk_spec_for(f), n).at({0, 0}),
                                             mpz_class(mpq_class(fe[n - 1].sum()).get_num())};
            if (f.is_mirrored() || f.m == 1)
                others.push_back(weighted_quadrant_count(f.m, n));
            for (const auto& v : others)
                if (v != b)
                    r.fail(to_string(f) + " n=" + std::to_string(n) + ": " + b.get_str() + " vs " + v.get_str());
        }
    }
    return r;
}

// 3. Z(1-2Z+2Z^3) against the counting methods, and the recurrence
Result closed_form_counts()
{
    Result r;
    auto g = gf_counts(60);
    auto gt = gt_count_sequence(PathFamily::plain(), 60);
    if (g != gt)
        r.fail("generating tree differs");
    for (int n = 1; n <= 60; ++n)
        if (quadrant_count({WalkKind::InfiniteS, 1}, n).at({0, 0}) != g[n - 1])
            r.fail("excursions differ at n=" + std::to_string(n));
    for (int n = 1; n <= 7; ++n)
        if (brute(PathFamily::plain(), n) != g[n - 1])
            r.fail("brute force differs at n=" + std::to_string(n));
    if (!recurrence_check(g))
        r.fail("recurrence");
    return r;
}

// 4. closed forms against marginals of brute-force refined counts
Result refined_closed_forms()
{
    Result r;
    const int N = 6;
    auto gx = closed_form_G_x1(N), gy = closed_form_G_1y(N), gp = closed_form_Gp_x1(N);
    for (int n = 1; n <= N; ++n) {
        Poly1 fx, fy, fa;
        for (const auto& iv : enumerate_intervals(PathFamily::plain(), n)) {
            const auto& s = iv.stats();
            fx.add_term({s.final_descent_bottom}, 1);
            fy.add_term({s.final_descent_top}, 1);
            fa.add_term({s.first_ascent_bottom}, 1);
        }
        if (!(gx[n] == fx))
            r.fail("G(x,1) at t^" + std::to_string(n));
        if (!(gy[n] == fy))
            r.fail("G(1,y) at t^" + std::to_string(n));
        if (!(gp[n] == fa))
            r.fail("G'(x,1) at t^" + std::to_string(n));
    }
    return r;
}

// 5. the catalytic identities
Result residuals()
{
    Result r;
    auto rep = catalytic_residuals(20, 30);
    if (!rep.pol2_residual_zero)
        r.fail("Pol2 mod t^21");
    if (!rep.q11_cubic_residual_zero)
        r.fail("Q11 cubic mod t^31");
    if (!rep.invariant_ratio0_zero)
        r.fail("invariant ratio");
    if (!rep.decoupling_zero)
        r.fail("decoupling");
    return r;
}

void words(int len, int n, Word& cur, const std::function<void(const Word&)>& visit)
{
    if (static_cast<int>(cur.size()) == len) {
        visit(cur);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        cur.push_back(a);
        words(len, n, cur, visit);
        cur.pop_back();
    }
}

// 6. Phi/Psi, intervals -> words, intervals <-> walks
Result bijections()
{
    Result r;
    for (int n = 1; n <= 4; ++n) {
        std::set<std::pair<std::vector<int>, std::vector<int>>> images;
        for (int len = 1; len <= 8; ++len) {
            Word cur;
            words(len, n, cur, [&](const Word& w) {
                if (!in_wn(w, n) || !avoids_patterns(w))
                    return;
                auto [u, v] = phi(w, n);
                if (psi(u, v, n) != w)
                    r.fail("psi(phi(w)) at " + render(w));
                auto back = phi(psi(u, v, n), n);
                if (!(back.bottom == u) || !(back.top == v))
                    r.fail("phi(psi) at " + render(w));
                images.emplace(u.values(), v.values());
            });
        }
    }
    for (int n = 1; n <= 6; ++n) {
        auto ivs = enumerate_intervals(PathFamily::plain(), n);
        std::set<Word> seen;
        for (const auto& iv : ivs) {
            Word w = interval_to_sylvester(iv, PathFamily::plain());
            if (!is_parking_class_rep(w, 1, n))
                r.fail("not a parking representative: " + render(w));
            seen.insert(w);
            if (!(walk_to_interval(interval_to_walk(iv, PathFamily::plain()), PathFamily::plain()) == iv))
                r.fail("walk round trip at n=" + std::to_string(n));
        }
        if (seen.size() != ivs.size())
            r.fail("sylvester words collide at n=" + std::to_string(n));
    }
    for (int n = 1; n <= 3; ++n) {
        std::set<Word> image, reps;
        for (const auto& iv : enumerate_intervals(PathFamily::mirrored(2), n))
            image.insert(interval_to_sylvester(iv, PathFamily::mirrored(2)));
        Word cur;
        words(n, 2 * (n - 1) + 1, cur, [&](const Word& w) {
            if (is_parking_class_rep(w, 2, n))
                reps.insert(w);
        });
        if (image != reps)
            r.fail("2-parking classes at n=" + std::to_string(n));
        if (n == 3 && reps.size() != 40)
            r.fail("expected 40 classes, got " + std::to_string(reps.size()));
    }
    return r;
}

// 7. join / meet against brute force, and the shape of D'_{2,3}
Result lattice()
{
    Result r;
    auto bounds = [](const std::vector<DyckPath>& ps, const DyckPath& p, const DyckPath& q, bool upper) {
        std::vector<DyckPath> b;
        for (const auto& c : ps)
            if (upper ? (leq(p, c) && leq(q, c)) : (leq(c, p) && leq(c, q)))
                b.push_back(c);
        // extremal elements among the bounds
        std::vector<DyckPath> ext;
        for (const auto& c : b) {
            bool extremal = true;
            for (const auto& d : b)
                if (!(c == d) && (upper ? leq(d, c) : leq(c, d)))
                    extremal = false;
            if (extremal)
                ext.push_back(c);
        }
        return ext;
    };
    for (auto [f, n] : std::vector<std::pair<PathFamily, int>>{{PathFamily::plain(), 4}, {PathFamily::mdyck(2), 3}}) {
        auto ps = enumerate_paths(f, n);
        for (const auto& p : ps)
            for (const auto& q : ps) {
                auto lub = bounds(ps, p, q, true);
                auto glb = bounds(ps, p, q, false);
                if (lub.size() != 1 || !(lub[0] == join(p, q, f)))
                    r.fail("join " + render(p) + " " + render(q));
                if (glb.size() != 1 || !(glb[0] == meet(p, q, f)))
                    r.fail("meet " + render(p) + " " + render(q));
            }
    }
    auto f = PathFamily::mirrored(2);
    auto ps = enumerate_paths(f, 3);
    if (minimal_elements(f, 3).size() != 5)
        r.fail("D'_{2,3} minimal elements");
    int no_glb = 0;
    for (const auto& p : ps)
        for (const auto& q : ps) {
            auto lub = bounds(ps, p, q, true);
            if (lub.size() != 1 || !(lub[0] == join(p, q, f)))
                r.fail("D'_{2,3} join " + render(p) + " " + render(q));
            no_glb += bounds(ps, p, q, false).size() != 1;
        }
    if (no_glb == 0)
        r.fail("every pair of D'_{2,3} has a meet");
    return r;
}

// 8. the involution
Result involution()
{
    Result r;
    Involution f;
    for (int n = 1; n <= 7; ++n) {
        std::map<std::pair<int, int>, long> dist;
        for (const auto& iv : enumerate_intervals(PathFamily::plain(), n)) {
            Interval g = f.apply(iv);
            if (!(f.apply(g) == iv))
                r.fail("f(f(I)) != I");
            if (g.stats().first_ascent_bottom != iv.stats().r || g.stats().r != iv.stats().first_ascent_bottom)
                r.fail("statistics not exchanged");
            ++dist[{iv.stats().first_ascent_bottom, iv.stats().r}];
        }
        for (const auto& [k, v] : dist)
            if (dist[{k.second, k.first}] != v)
                r.fail("asymmetric (a, r) at n=" + std::to_string(n));
    }
    return r;
}

// 9. growth constants
Result asymptotic()
{
    Result r;
    auto a = asymptotics(PathFamily::plain());
    const double mu = (11 + 5 * std::sqrt(5.0)) / 2;
    if (std::fabs(a.mu / mu - 1) > 1e-12)
        r.fail("mu");
    if (std::fabs(a.alpha / -3.5 - 1) > 1e-12)
        r.fail("alpha");
    auto fit = empirical_growth(PathFamily::plain(), 60);
    if (std::fabs(fit.mu_hat / a.mu - 1) > 0.02)
        r.fail("mu_hat (plain) = " + std::to_string(fit.mu_hat));
    if (std::fabs(fit.alpha_hat + 3.5) > 0.3)
        r.fail("alpha_hat (plain) = " + std::to_string(fit.alpha_hat));
    if (!(fit.kappa_hat > 0))
        r.fail("kappa_hat not positive");
    for (auto f : {PathFamily::mdyck(2), PathFamily::mirrored(2)}) {
        auto e = empirical_growth(f, 40);
        if (std::fabs(e.mu_hat / asymptotics(f).mu - 1) > 0.05)
            r.fail("mu_hat " + to_string(f) + " = " + std::to_string(e.mu_hat));
    }
    return r;
}

}  // namespace

int main()
{
    struct Criterion {
        int id;
        const char* what;
        double budget;
        std::function<Result()> run;
    };
    const std::vector<Criterion> all = {
        {1, "small counts", 1, small_counts},
        {2, "five-way method agreement", 120, five_way},
        {3, "closed form counts and recurrence", 10, closed_form_counts},
        {4, "refined closed forms", 60, refined_closed_forms},
        {5, "catalytic residuals", 30, residuals},
        {6, "bijection round trips", 120, bijections},
        {7, "lattice structure", 30, lattice},
        {8, "involution", 120, involution},
        {9, "asymptotics", 180, asymptotic},
    };
    int failed = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.ok && secs > c.budget)
            r.fail("over budget");
        failed += !r.ok;
        std::printf("%s  %d  %-36s %8.3fs / %4.0fs%s%s\n", r.ok ? "PASS" : "FAIL", c.id, c.what, secs, c.budget,
                    r.ok ? "" : "  ", r.why.c_str());
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
