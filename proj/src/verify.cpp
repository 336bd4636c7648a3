#include "ascent/verify.hpp"

#include <cmath>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>

#include "ascent/counting.hpp"
#include "ascent/involution.hpp"
#include "ascent/series.hpp"
#include "ascent/sylvester.hpp"

namespace ascent {

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why)
    {
        if (ok)
            detail = why;
        ok = false;
    }
};

struct Ranges {
    int plain_agree;   // five-way agreement, Plain
    int m2_agree;      // five-way agreement, m = 2 families
    int plain_poset;   // exhaustive order checks
    int m2_poset;
    int sylv_plain;
    int sylv_m2;
    int order;         // series truncation
    int involution;
};

Ranges ranges_for(const VerifyOptions& opt)
{
    if (opt.fast)
        return {5, 3, 5, 3, 5, 3, 12, 5};
    return {7, 5, 6, 4, 6, 4, 20, 7};
}

struct Check {
    std::string module;
    std::string name;
    std::function<Outcome()> run;
};

std::string str(const mpz_class& z) { return z.get_str(); }

std::vector<std::pair<PathFamily, int>> order_families(const Ranges& r)
{
    return {{PathFamily::plain(), r.plain_poset},
            {PathFamily::mdyck(2), r.m2_poset},
            {PathFamily::mirrored(2), r.m2_poset}};
}

// ---------------------------------------------------------------- paths

Outcome paths_roundtrips(const Ranges& r)
{
    Outcome o;
    std::vector<std::pair<PathFamily, int>> fams = order_families(r);
    fams.emplace_back(PathFamily::mdyck(3), 3);
    fams.emplace_back(PathFamily::mirrored(3), 3);
    for (auto [f, nmax] : fams)
        for (int n = 1; n <= nmax; ++n)
            for (const auto& p : enumerate_paths(f, n)) {
                if (!(parse_path(render(p)) == p))
                    o.fail("text round trip: " + render(p));
                if (!(decode_sequence(encode_sequence(p, f), f) == p))
                    o.fail("sequence round trip in " + to_string(f) + ": " + render(p));
            }
    return o;
}

Outcome paths_fuss_catalan()
{
    Outcome o;
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 5; ++n)
            for (auto f : {PathFamily::mdyck(m), PathFamily::mirrored(m)}) {
                auto got = enumerate_paths(f, n).size();
                if (mpz_class(static_cast<unsigned long>(got)) != fuss_catalan(m, n))
                    o.fail(to_string(f) + " n=" + std::to_string(n) + ": " + std::to_string(got));
            }
    return o;
}

void nonincreasing_rec(int len, int hi, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v <= hi; ++v) {
        cur.push_back(v);
        nonincreasing_rec(len, v, lo, cur, out);
        cur.pop_back();
    }
}

// All nonincreasing sequences of length len with entries in [lo, hi].
std::vector<std::vector<int>> nonincreasing(int len, int hi, int lo)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    nonincreasing_rec(len, hi, lo, cur, out);
    return out;
}

Outcome paths_vertical_encoding()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        std::map<int, std::set<Word>> image;
        for (const auto& u : nonincreasing(n, 6, 1)) {
            Word w = vertical_encoding(NonincreasingSequence(u));
            if (!image[u.front()].insert(w).second)
                o.fail("not injective at " + render(NonincreasingSequence(u)));
            if (!(vertical_decoding(w, n) == NonincreasingSequence(u)))
                o.fail("decoding mismatch at " + render(NonincreasingSequence(u)));
        }
        for (int len = 1; len <= 6; ++len) {
            std::set<Word> expected;
            for (const auto& w : nonincreasing(len, n, 1))
                if (w.back() == 1)
                    expected.insert(w);
            if (expected != image[len])
                o.fail("image mismatch n=" + std::to_string(n) + " length " + std::to_string(len));
        }
    }
    return o;
}

// ---------------------------------------------------------------- poset

Outcome poset_leq_is_cover_closure(const Ranges& r)
{
    Outcome o;
    for (auto [f, nmax] : order_families(r))
        for (int n = 1; n <= nmax; ++n) {
            auto h = hasse(f, n);
            auto cl = cover_closure(h);
            for (std::size_t i = 0; i < h.nodes.size(); ++i)
                for (std::size_t j = 0; j < h.nodes.size(); ++j)
                    if (cl[i][j] != leq(h.nodes[i], h.nodes[j]))
                        o.fail(to_string(f) + ": " + render(h.nodes[i]) + " vs " + render(h.nodes[j]));
        }
    return o;
}

// Apply D U^k D -> U^k D D at the valley starting at index i.
std::string apply_cover_at(std::string w, std::size_t i)
{
    std::size_t j = i + 1;
    while (w[j] == 'U')
        ++j;
    // w[i] = D, w[i+1..j-1] = U^k, w[j] = D
    std::string k(j - i - 1, 'U');
    w.replace(i, j - i + 1, k + "DD");
    return w;
}

Outcome poset_first_valley(const Ranges& r)
{
    Outcome o;
    for (auto [f, nmax] : order_families(r)) {
        if (f.m != 1)
            continue;  // unit-step rule; the family versions repeat it m times
        for (int n = 1; n <= nmax; ++n) {
            auto paths = enumerate_paths(f, n);
            for (const auto& p : paths)
                for (const auto& q : paths) {
                    if (p == q || !leq(p, q))
                        continue;
                    const auto& a = p.word();
                    const auto& b = q.word();
                    int hp = 0, hq = 0;
                    std::size_t at = a.size();
                    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
                        hp += a[i] == 'U' ? 1 : -1;
                        hq += b[i] == 'U' ? 1 : -1;
                        bool vp = a[i] == 'D' && a[i + 1] == 'U';
                        bool vq = b[i] == 'D' && b[i + 1] == 'U' && hp == hq;
                        if (vp && !vq) {
                            at = i;
                            break;
                        }
                    }
                    if (at == a.size()) {
                        o.fail("no valley found: " + a + " < " + b);
                        continue;
                    }
                    DyckPath p2(apply_cover_at(a, at));
                    auto cov = covers(p);
                    if (std::find(cov.begin(), cov.end(), p2) == cov.end() || !leq(p2, q))
                        o.fail(a + " < " + b + " gives " + p2.word());
                }
        }
    }
    return o;
}

Outcome poset_join(const Ranges& r)
{
    Outcome o;
    for (auto [f, nmax] : order_families(r))
        for (int n = 1; n <= nmax; ++n) {
            auto paths = enumerate_paths(f, n);
            const std::size_t N = paths.size();
            std::vector<std::vector<bool>> le(N, std::vector<bool>(N));
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j)
                    le[i][j] = leq(paths[i], paths[j]);
            std::vector<std::vector<int>> J(N, std::vector<int>(N));
            auto index = [&](const DyckPath& p) {
                return static_cast<int>(std::lower_bound(paths.begin(), paths.end(), p) - paths.begin());
            };
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    DyckPath w = join(paths[i], paths[j], f);
                    int k = index(w);
                    if (k >= static_cast<int>(N) || !(paths[k] == w)) {
                        o.fail("join left the family: " + render(w));
                        return o;
                    }
                    J[i][j] = k;
                    // brute least upper bound
                    for (std::size_t c = 0; c < N; ++c)
                        if (le[i][c] && le[j][c] && !le[k][c])
                            o.fail("join not least: " + render(paths[i]) + ", " + render(paths[j]));
                    if (!le[i][k] || !le[j][k])
                        o.fail("join not an upper bound: " + render(paths[i]) + ", " + render(paths[j]));
                    if (i == j && k != static_cast<int>(i))
                        o.fail("join not idempotent: " + render(paths[i]));
                }
            for (std::size_t i = 0; i < N; ++i)
                for (std::size_t j = 0; j < N; ++j) {
                    if (J[i][j] != J[j][i])
                        o.fail("join not commutative");
                    for (std::size_t k = 0; k < N; ++k)
                        if (J[J[i][j]][k] != J[i][J[j][k]])
                            o.fail("join not associative");
                }
        }
    return o;
}

Outcome poset_meet(const Ranges& r)
{
    Outcome o;
    for (auto [f, nmax] : order_families(r)) {
        if (f.is_mirrored())
            continue;
        for (int n = 1; n <= std::min(nmax, 5); ++n) {
            auto paths = enumerate_paths(f, n);
            for (const auto& p : paths)
                for (const auto& q : paths) {
                    DyckPath w = meet(p, q, f);
                    if (!leq(w, p) || !leq(w, q))
                        o.fail("meet not a lower bound");
                    for (const auto& c : paths)
                        if (leq(c, p) && leq(c, q) && !leq(c, w))
                            o.fail("meet not greatest: " + render(p) + ", " + render(q));
                }
        }
    }
    return o;
}

Outcome poset_nt_interval(const Ranges& r)
{
    Outcome o;
    auto f = PathFamily::mdyck(2);
    for (int n = 1; n <= r.m2_poset; ++n) {
        auto paths = enumerate_paths(f, n);
        std::string lo, hi;
        for (int i = 0; i < n; ++i) {
            lo += "UUDD";
            hi += "UU";
        }
        hi += std::string(2 * n, 'D');
        auto mins = minimal_elements(f, n);
        if (mins.size() != 1 || mins.front().word() != lo)
            o.fail("minimum is not (UUDD)^n at n=" + std::to_string(n));
        for (const auto& p : paths) {
            if (!leq(p, DyckPath(hi)))
                o.fail("not below the maximum: " + render(p));
            for (const auto& q : paths)
                if (leq(p, q) != nt_leq(encode_sequence(p, f), encode_sequence(q, f)))
                    o.fail("order differs from NT order: " + render(p) + ", " + render(q));
        }
    }
    return o;
}

Outcome poset_minimal_count()
{
    Outcome o;
    for (int m = 2; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            auto got = minimal_elements(PathFamily::mirrored(m), n).size();
            if (mpz_class(static_cast<unsigned long>(got)) != fuss_catalan(m - 1, n))
                o.fail("m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " + std::to_string(got));
        }
    return o;
}

Outcome poset_interval_stats(const Ranges& r)
{
    Outcome o;
    for (auto [f, nmax] : order_families(r))
        for (int n = 1; n <= nmax; ++n)
            for (const auto& iv : enumerate_intervals(f, n)) {
                auto c = ascent_composition(iv.bottom()).parts;
                auto d = ascent_composition(iv.top()).parts;
                const auto& s = iv.stats();
                int partial = 0;
                for (int i = 0; i < s.r; ++i)
                    partial += c[i];
                if (s.r < 1 || partial != d[0] || s.final_descent_bottom > s.final_descent_top)
                    o.fail(render(iv.bottom()) + " <= " + render(iv.top()));
            }
    return o;
}

// ---------------------------------------------------------------- sylvester

void words_rec(int len, int n, Word& cur, const std::function<void(const Word&)>& visit)
{
    if (static_cast<int>(cur.size()) == len) {
        visit(cur);
        return;
    }
    for (int a = 1; a <= n; ++a) {
        cur.push_back(a);
        words_rec(len, n, cur, visit);
        cur.pop_back();
    }
}

void for_each_word(int len, int n, const std::function<void(const Word&)>& visit)
{
    Word cur;
    words_rec(len, n, cur, visit);
}

Outcome sylvester_psi_phi()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n)
        for (int len = 1; len <= 8; ++len)
            for_each_word(len, n, [&](const Word& w) {
                if (!in_wn(w, n) || !avoids_patterns(w))
                    return;
                auto [u, v] = phi(w, n);
                if (psi(u, v, n) != w)
                    o.fail("psi(phi(w)) != w for " + render(w));
            });
    return o;
}

Outcome sylvester_phi_psi()
{
    Outcome o;
    for (int n = 1; n <= 4; ++n) {
        auto seqs = nonincreasing(n, 8, 1);
        for (const auto& a : seqs)
            for (const auto& b : seqs) {
                NonincreasingSequence u(a), v(b);
                if (a.front() != b.front() || !nt_leq(u, v))
                    continue;
                auto back = phi(psi(u, v, n), n);
                if (!(back.bottom == u) || !(back.top == v))
                    o.fail("phi(psi) mismatch at " + render(u) + " / " + render(v));
            }
    }
    return o;
}

Outcome sylvester_injective(const Ranges& r)
{
    Outcome o;
    std::vector<std::pair<PathFamily, int>> fams = {{PathFamily::plain(), r.sylv_plain},
                                                    {PathFamily::mdyck(2), r.sylv_m2},
                                                    {PathFamily::mirrored(2), r.sylv_m2}};
    for (auto [f, nmax] : fams)
        for (int n = 1; n <= nmax; ++n) {
            auto ivs = enumerate_intervals(f, n);
            std::set<Word> image;
            for (const auto& iv : ivs)
                image.insert(interval_to_sylvester(iv, f));
            if (image.size() != ivs.size())
                o.fail(to_string(f) + " n=" + std::to_string(n) + ": " + std::to_string(image.size()) +
                       " words for " + std::to_string(ivs.size()) + " intervals");
        }
    return o;
}

Outcome sylvester_parking(const Ranges& r)
{
    Outcome o;
    const int m = 2;
    for (int n = 1; n <= std::min(r.sylv_m2, 3); ++n) {
        std::set<Word> image;
        for (const auto& iv : enumerate_intervals(PathFamily::mirrored(m), n))
            image.insert(interval_to_sylvester(iv, PathFamily::mirrored(m)));
        std::set<Word> reps;
        for_each_word(n, (n - 1) * m + 1, [&](const Word& w) {
            if (is_parking_class_rep(w, m, n))
                reps.insert(w);
        });
        if (image != reps)
            o.fail("n=" + std::to_string(n) + ": " + std::to_string(image.size()) + " interval words, " +
                   std::to_string(reps.size()) + " parking representatives");
    }
    return o;
}

// ---------------------------------------------------------------- counting

Outcome counting_agreement(const Ranges& r)
{
    Outcome o;
    std::vector<std::pair<PathFamily, int>> fams = {{PathFamily::plain(), r.plain_agree},
                                                    {PathFamily::mdyck(2), r.m2_agree},
                                                    {PathFamily::mirrored(2), r.m2_agree}};
    for (auto [f, nmax] : fams) {
        auto gt = gt_count_sequence(f, nmax);
        auto fe = functional_equation_expand(f, nmax);
        for (int n = 1; n <= nmax; ++n) {
            mpz_class brute(static_cast<unsigned long>(enumerate_intervals(f, n).size()));
            mpz_class walk = quadrant_count(walk_spec_for(f), n).at({0, 0});
            mpq_class series = fe[n - 1].sum();
            std::vector<mpq_class> all = {mpq_class(brute), mpq_class(gt[n - 1]), mpq_class(walk), series};
            if (f.is_mirrored())
                all.emplace_back(weighted_quadrant_count(f.m, n));
            for (const auto& v : all)
                if (v != all.front())
                    o.fail(to_string(f) + " n=" + std::to_string(n) + ": brute " + str(brute) + ", gtree " +
                           str(gt[n - 1]) + ", walk " + str(walk) + ", series " + series.get_str());
        }
    }
    return o;
}

Outcome counting_refined(const Ranges& r)
{
    Outcome o;
    for (auto f : {PathFamily::plain(), PathFamily::mdyck(2), PathFamily::mirrored(2), PathFamily::mirrored(1)}) {
        const int nmax = f.m == 1 ? r.plain_agree : r.m2_agree;
        auto gt = gt_count_sequence(f, nmax);
        for (int n = 1; n <= nmax; ++n) {
            Poly2 p = gt_count_refined(f, n);
            if (p.sum() != mpq_class(gt[n - 1]))
                o.fail(to_string(f) + " n=" + std::to_string(n) + ": refined total differs");
            if (f == PathFamily::mirrored(1) && !(p == p.swapped(0, 1)))
                o.fail("G'_1 coefficient not symmetric at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome counting_naive_dp()
{
    Outcome o;
    for (int m = 1; m <= 2; ++m)
        for (auto kind : {WalkKind::InfiniteS, WalkKind::InfiniteSPrime})
            for (int n = 0; n <= 4; ++n) {
                WalkSpec spec{kind, m};
                auto a = quadrant_count(spec, n);
                auto b = quadrant_count_naive(spec, n);
                if (a.counts != b.counts)
                    o.fail("prefix-sum table differs from naive, m=" + std::to_string(m) + " n=" +
                           std::to_string(n));
            }
    return o;
}

Outcome counting_walk_bijection(const Ranges& r)
{
    Outcome o;
    std::vector<std::pair<PathFamily, int>> fams = {{PathFamily::plain(), r.plain_poset},
                                                    {PathFamily::mdyck(2), r.m2_poset},
                                                    {PathFamily::mirrored(2), r.m2_poset}};
    for (auto [f, nmax] : fams) {
        const auto spec = walk_spec_for(f);
        for (int n = 1; n <= nmax; ++n) {
            std::set<std::vector<Point>> seen;
            std::map<Point, mpz_class> ends;
            auto ivs = enumerate_intervals(f, n);
            for (const auto& iv : ivs) {
                Walk w = interval_to_walk(iv, f);
                for (auto s : w.steps)
                    if (!step_allowed(spec, s))
                        o.fail("illegal step from " + render(iv.bottom()) + " <= " + render(iv.top()));
                if (static_cast<int>(w.steps.size()) != n - 1)
                    o.fail("walk length");
                seen.insert(w.steps);
                ends[w.endpoint()] += 1;
                if (!(walk_to_interval(w, f) == iv))
                    o.fail("round trip: " + render(iv.bottom()) + " <= " + render(iv.top()));
            }
            if (seen.size() != ivs.size())
                o.fail(to_string(f) + ": not injective at n=" + std::to_string(n));
            if (ends != quadrant_count(spec, n - 1).counts)
                o.fail(to_string(f) + ": endpoint table differs at n=" + std::to_string(n));
        }
    }
    return o;
}

// ---------------------------------------------------------------- series

Outcome series_z_and_counts(const Ranges& r)
{
    Outcome o;
    const int N = r.order;
    TruncSeries z = solve_Z(N);
    TruncSeries t = TruncSeries::t(N);
    TruncSeries res = z - t * (z + mpq_class(1)) * (z * mpq_class(2) + mpq_class(1)).pow(2);
    if (res.valuation() <= N)
        o.fail("Z residual nonzero");
    auto g = gf_counts(3 * N);
    if (!recurrence_check(g))
        o.fail("recurrence fails");
    auto gt = gt_count_sequence(PathFamily::plain(), 3 * N);
    if (g != gt)
        o.fail("gf_counts differs from the generating tree");
    return o;
}

Outcome series_functional_equation(const Ranges& r)
{
    Outcome o;
    for (auto f : {PathFamily::plain(), PathFamily::mdyck(2), PathFamily::mirrored(2), PathFamily::mirrored(1)}) {
        const int nmax = f.m == 1 ? 6 : (r.m2_agree < 5 ? 3 : 5);
        auto fe = functional_equation_expand(f, nmax);
        for (int n = 1; n <= nmax; ++n)
            if (!(fe[n - 1] == gt_count_refined(f, n)))
                o.fail(to_string(f) + " differs at t^" + std::to_string(n));
    }
    return o;
}

Outcome series_closed_forms(const Ranges& r)
{
    Outcome o;
    const int nmax = r.plain_agree < 7 ? 5 : 7;
    auto gx = closed_form_G_x1(nmax), gy = closed_form_G_1y(nmax), gp = closed_form_Gp_x1(nmax);
    for (int n = 1; n <= nmax; ++n) {
        Poly2 plain = gt_count_refined(PathFamily::plain(), n);
        Poly2 mir = gt_count_refined(PathFamily::mirrored(1), n);
        // Poly1 and the x-only / y-only marginals share exponents after evaluation.
        auto as1 = [](const Poly2& p, int keep) {
            Poly1 out;
            for (const auto& [e, c] : p.terms())
                out.add_term({e[keep]}, c);
            return out;
        };
        if (!(gx[n] == as1(plain.evaluate(1, 1), 0)))
            o.fail("G(x,1) at t^" + std::to_string(n));
        if (!(gy[n] == as1(plain.evaluate(0, 1), 1)))
            o.fail("G(1,y) at t^" + std::to_string(n));
        if (!(gp[n] == as1(mir.evaluate(1, 1), 0)))
            o.fail("G'(x,1) at t^" + std::to_string(n));
        if (!(as1(mir.evaluate(1, 1), 0) == as1(mir.evaluate(0, 1), 1)))
            o.fail("G'(x,1) != G'(1,x) at t^" + std::to_string(n));
    }
    const int P = std::min(r.order, 15);
    if (!(parametrized_G_x1(P) == closed_form_G_x1(P)))
        o.fail("parametrized G(x,1)");
    if (!(parametrized_G_1y(P) == closed_form_G_1y(P)))
        o.fail("parametrized G(1,y)");
    if (!(parametrized_Gp_x1(P) == closed_form_Gp_x1(P)))
        o.fail("parametrized G'(x,1)");
    return o;
}

Outcome series_residuals(const Ranges& r)
{
    Outcome o;
    auto rep = catalytic_residuals(r.order, r.order < 20 ? r.order : 30);
    if (!rep.pol2_residual_zero)
        o.fail("Pol2");
    if (!rep.q11_cubic_residual_zero)
        o.fail("Q11 cubic");
    if (!rep.invariant_ratio0_zero)
        o.fail("invariant ratio");
    if (!rep.decoupling_zero)
        o.fail("decoupling");
    return o;
}

Outcome series_asymptotics()
{
    Outcome o;
    auto a = asymptotics(PathFamily::plain());
    const double want_c = (1 - std::sqrt(5.0)) / 4;
    if (std::fabs(a.c - want_c) > 1e-14)
        o.fail("c for m=1");
    if (std::fabs(a.mu - (11 + 5 * std::sqrt(5.0)) / 2) > 1e-12 * a.mu || std::fabs(a.alpha + 3.5) > 1e-12)
        o.fail("mu/alpha for m=1");
    for (auto f : {PathFamily::mdyck(2), PathFamily::mirrored(2), PathFamily::mdyck(3), PathFamily::mirrored(3)}) {
        auto d = asymptotics(f);
        if (std::fabs(d.c - correlation_from_derivatives(f)) > 1e-5)
            o.fail("c by derivatives, " + to_string(f));
        if (!(d.mu > 1 && d.alpha < -1 && d.c > -1 && d.c < 0))
            o.fail("ranges, " + to_string(f));
    }
    auto b = asymptotics(PathFamily::mirrored(1));
    if (std::fabs(b.mu - a.mu) > 1e-12 * a.mu || std::fabs(b.alpha - a.alpha) > 1e-12)
        o.fail("mirrored m=1 differs from plain");
    return o;
}

// ---------------------------------------------------------------- involution

Outcome involution_check(const Ranges& r)
{
    Outcome o;
    Involution f;
    for (int n = 1; n <= r.involution; ++n) {
        std::map<std::pair<int, int>, long> dist;
        for (const auto& iv : enumerate_intervals(PathFamily::plain(), n)) {
            Interval g = f.apply(iv);
            const auto& s = iv.stats();
            if (!(f.apply(g) == iv) || g.size() != n)
                o.fail("not an involution at " + render(iv.bottom()) + " <= " + render(iv.top()));
            if (g.stats().first_ascent_bottom != s.r || g.stats().r != s.first_ascent_bottom)
                o.fail("statistics not exchanged at " + render(iv.bottom()) + " <= " + render(iv.top()));
            ++dist[{s.first_ascent_bottom, s.r}];
        }
        for (const auto& [k, v] : dist)
            if (dist[{k.second, k.first}] != v)
                o.fail("(a, r) not symmetric at n=" + std::to_string(n));
    }
    return o;
}

std::vector<Check> all_checks(const Ranges& r)
{
    return {
        {"paths", "text and sequence round trips", [r] { return paths_roundtrips(r); }},
        {"paths", "family sizes are Fuss-Catalan", [] { return paths_fuss_catalan(); }},
        {"paths", "vertical encoding bijective", [] { return paths_vertical_encoding(); }},
        {"poset", "leq is the closure of covers", [r] { return poset_leq_is_cover_closure(r); }},
        {"poset", "first valley cover", [r] { return poset_first_valley(r); }},
        {"poset", "join is the least upper bound", [r] { return poset_join(r); }},
        {"poset", "meet is the greatest lower bound", [r] { return poset_meet(r); }},
        {"poset", "m-Dyck order is an NT interval", [r] { return poset_nt_interval(r); }},
        {"poset", "minimal elements of mirrored families", [] { return poset_minimal_count(); }},
        {"poset", "interval statistics", [r] { return poset_interval_stats(r); }},
        {"sylvester", "psi(phi(w)) = w", [] { return sylvester_psi_phi(); }},
        {"sylvester", "phi(psi(u,v)) = (u,v)", [] { return sylvester_phi_psi(); }},
        {"sylvester", "interval words are distinct", [r] { return sylvester_injective(r); }},
        {"sylvester", "mirrored words are 2-parking representatives", [r] { return sylvester_parking(r); }},
        {"counting", "five-way agreement", [r] { return counting_agreement(r); }},
        {"counting", "refined counts", [r] { return counting_refined(r); }},
        {"counting", "prefix sums match naive DP", [] { return counting_naive_dp(); }},
        {"counting", "interval/walk bijection", [r] { return counting_walk_bijection(r); }},
        {"series", "Z, counts and recurrence", [r] { return series_z_and_counts(r); }},
        {"series", "functional equations", [r] { return series_functional_equation(r); }},
        {"series", "closed forms and parametrizations", [r] { return series_closed_forms(r); }},
        {"series", "catalytic residuals", [r] { return series_residuals(r); }},
        {"series", "asymptotic constants", [] { return series_asymptotics(); }},
        {"involution", "f is an involution swapping (a, r)", [r] { return involution_check(r); }},
    };
}

CheckResult run_one(const Check& c)
{
    CheckResult res{c.module, c.name, false, false, ""};
    try {
        Outcome o = c.run();
        res.passed = o.ok;
        res.detail = o.detail;
    } catch (const InternalError& e) {
        res.internal_error = true;
        res.detail = std::string("internal error: ") + e.what();
    } catch (const std::exception& e) {
        res.detail = e.what();
    }
    return res;
}

}  // namespace

std::vector<std::string> check_names(const VerifyOptions& opt)
{
    std::vector<std::string> out;
    for (const auto& c : all_checks(ranges_for(opt)))
        out.push_back(c.module + ": " + c.name);
    return out;
}

std::vector<CheckResult> run_verify_suite(const VerifyOptions& opt)
{
    auto checks = all_checks(ranges_for(opt));
    std::vector<std::future<CheckResult>> jobs;
    jobs.reserve(checks.size());
    for (const auto& c : checks)
        jobs.push_back(std::async(std::launch::async, [&c] { return run_one(c); }));
    std::vector<CheckResult> out;
    for (auto& j : jobs)
        out.push_back(j.get());
    return out;
}

}  // namespace ascent
