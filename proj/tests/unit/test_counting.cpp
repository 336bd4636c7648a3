#include <set>

#include "ascent/counting.hpp"
#include "helpers.hpp"

using namespace ascent;

namespace {

Poly2 xy_poly(std::initializer_list<std::tuple<int, int, long>> terms)
{
    Poly2 p;
    for (auto [a, b, c] : terms)
        p.add_term({a, b}, mpq_class(c));
    return p;
}

}  // namespace

TEST_CASE("generating tree rules")
{
    auto plain = PathFamily::plain();
    CHECK(gt_root(plain) == GTLabel{1, 1});
    CHECK(gt_root(PathFamily::mirrored(2)) == GTLabel{2, 1});
    CHECK(gt_children(plain, {1, 1}) == std::vector<GTLabel>{{1, 1}, {1, 2}, {2, 2}});
    // (rr-bis), m = 1, root (1,1): (2,1), then a' = 0 with s = 0, 1
    CHECK(gt_children(PathFamily::mirrored(1), {1, 1}) == std::vector<GTLabel>{{2, 1}, {1, 1}, {1, 2}});

    CHECK(gt_count(plain, 3) == 13);
    CHECK(gt_count(PathFamily::mdyck(2), 3) == 62);
    CHECK(gt_count(PathFamily::mirrored(2), 3) == 40);
    CHECK(gt_count_sequence(plain, 6) == std::vector<mpz_class>{1, 3, 13, 69, 417, 2759});
    CHECK(gt_count_sequence(PathFamily::mdyck(2), 4) == std::vector<mpz_class>{1, 6, 62, 848});
    CHECK(gt_count_sequence(PathFamily::mirrored(2), 4) == std::vector<mpz_class>{1, 5, 40, 407});

    // the tree itself, expanded naively
    std::vector<GTLabel> level{gt_root(PathFamily::mdyck(2))};
    for (int depth = 1; depth < 4; ++depth) {
        std::vector<GTLabel> next;
        for (const auto& l : level)
            for (const auto& c : gt_children(PathFamily::mdyck(2), l))
                next.push_back(c);
        level = std::move(next);
    }
    CHECK(level.size() == 848);
}

TEST_CASE("refined counts")
{
    CHECK(gt_count_refined(PathFamily::plain(), 1) == xy_poly({{1, 1, 1}}));
    CHECK(gt_count_refined(PathFamily::plain(), 2) == xy_poly({{2, 2, 1}, {1, 2, 1}, {1, 1, 1}}));
    CHECK(gt_count_refined(PathFamily::mirrored(1), 2) == xy_poly({{2, 1, 1}, {1, 2, 1}, {1, 1, 1}}));
    // xy(x^2y^2 + 2xy^2 + 2xy + 2y^2 + 3y + 3)
    CHECK(gt_count_refined(PathFamily::plain(), 3) ==
          xy_poly({{3, 3, 1}, {2, 3, 2}, {2, 2, 2}, {1, 3, 2}, {1, 2, 3}, {1, 1, 3}}));
    for (int n = 1; n <= 7; ++n) {
        auto p = gt_count_refined(PathFamily::mirrored(1), n);
        CHECK(p == p.swapped(0, 1));
        CHECK(p.sum() == mpq_class(gt_count(PathFamily::mirrored(1), n)));
    }
}

TEST_CASE("quadrant walks")
{
    WalkSpec s1{WalkKind::InfiniteS, 1};
    auto empty = quadrant_count(s1, 0);
    CHECK(empty.counts.size() == 1);
    CHECK(empty.at({0, 0}) == 1);
    CHECK(quadrant_count(s1, 3).at({0, 0}) == 13);

    WalkSpec sp2{WalkKind::InfiniteSPrime, 2};
    auto t = quadrant_count(sp2, 2);
    CHECK(t.total() == 40);
    CHECK(t.at({0, 0}) == 5);

    CHECK(step_allowed(s1, {1, 0}));
    CHECK(step_allowed(s1, {0, 1}));
    CHECK(step_allowed(s1, {-5, 6}));
    CHECK_FALSE(step_allowed(s1, {1, 1}));
    CHECK_FALSE(step_allowed(s1, {2, 0}));
    CHECK(step_allowed(sp2, {2, -3}));
    CHECK_FALSE(step_allowed(sp2, {2, 1}));
    CHECK(step_allowed(sp2, {1, 1}));
    CHECK_FALSE(step_allowed(sp2, {0, 2}));

    for (int m = 1; m <= 2; ++m)
        for (auto kind : {WalkKind::InfiniteS, WalkKind::InfiniteSPrime})
            for (int n = 0; n <= 4; ++n)
                CHECK(quadrant_count({kind, m}, n).counts == quadrant_count_naive({kind, m}, n).counts);

    for (int n = 1; n <= 6; ++n) {
        CHECK(quadrant_count({WalkKind::InfiniteS, 2}, n).at({0, 0}) == gt_count(PathFamily::mdyck(2), n));
        CHECK(quadrant_count(sp2, n).at({0, 0}) == gt_count(PathFamily::mirrored(2), n));
        // all walks of n-1 steps <-> intervals of size n
        CHECK(quadrant_count(sp2, n - 1).total() == gt_count(PathFamily::mirrored(2), n));
    }
}

TEST_CASE("weighted finite steps")
{
    auto s = weighted_steps(1);
    CHECK(s.at({0, 0}) == 3);
    CHECK(s.at({-1, 0}) == 2);
    CHECK(s.at({0, -1}) == 2);
    CHECK(s.at({-1, -1}) == 1);
    CHECK(s.size() == 8);
    mpz_class total = 0;
    for (const auto& [p, c] : weighted_steps(2))
        total += c;
    CHECK(total == 24);  // (1+u)^2 (1+v) (1+u+v) at u = v = 1

    CHECK(weighted_quadrant_count(1, 2) == 3);
    CHECK(weighted_quadrant_count(1, 1) == 1);
    CHECK(weighted_quadrant_count(2, 3) == 40);
    for (int n = 1; n <= 6; ++n) {
        CHECK(weighted_quadrant_count(1, n) == gt_count(PathFamily::plain(), n));
        CHECK(weighted_quadrant_count(2, n) == gt_count(PathFamily::mirrored(2), n));
        CHECK(weighted_quadrant_count(3, n) == gt_count(PathFamily::mirrored(3), n));
    }
}

TEST_CASE("peak surgery")
{
    auto UD = parse_path("UD");
    CHECK(render(insert_final_peak(UD, 1, 0)) == "UDUD");
    CHECK(render(insert_final_peak(UD, 1, 1)) == "UUDD");
    CHECK(render(insert_first_peak(UD, 1, 0)) == "UDUD");
    CHECK(render(insert_first_peak(UD, 1, 1)) == "UUDD");
    CHECK(render(delete_final_peak(parse_path("UUDUDD"), 1)) == "UUDD");
    CHECK(render(delete_first_peak(parse_path("UUDUDD"), 1)) == "UUDD");
    CHECK(render(delete_final_peak(parse_path("UUDDUUDD"), 2)) == "UUDD");
    CHECK_ERROR_KIND(delete_final_peak(UD, 1), ErrorKind::SizeTooSmall);
    CHECK_ERROR_KIND(insert_final_peak(UD, 1, 2), ErrorKind::InvalidArgument);
}

TEST_CASE("interval <-> walk")
{
    auto plain = PathFamily::plain();
    Interval one(parse_path("UD"), parse_path("UD"));
    CHECK(interval_to_walk(one, plain).steps.empty());
    CHECK(walk_to_interval(Walk{}, plain) == one);
    CHECK(walk_to_interval(Walk{}, PathFamily::mirrored(2)) == Interval(parse_path("UUDD"), parse_path("UUDD")));

    Interval fig(parse_path("UUDUUDUUDDDD"), parse_path("UUDUUUUDDDDD"));
    Walk w = interval_to_walk(fig, plain);
    CHECK(w.vertices() == std::vector<Point>{{0, 0}, {1, 0}, {1, 0}, {2, 0}, {2, 1}, {3, 1}});
    auto s = fig.stats();
    CHECK(w.endpoint() == Point{s.final_descent_bottom - 1, s.final_descent_top - s.final_descent_bottom});
    CHECK(walk_to_interval(w, plain) == fig);

    CHECK_ERROR_KIND(walk_to_interval(Walk{{{2, 0}}, true}, plain), ErrorKind::IllegalStep);
    CHECK_ERROR_KIND(walk_to_interval(Walk{{{0, -1}}, true}, plain), ErrorKind::IllegalStep);

    for (auto f : {plain, PathFamily::mdyck(2), PathFamily::mirrored(2)})
        for (int n = 1; n <= (f.m == 1 ? 6 : 4); ++n) {
            std::set<std::vector<Point>> seen;
            std::map<Point, mpz_class> ends;
            auto ivs = enumerate_intervals(f, n);
            for (const auto& iv : ivs) {
                Walk x = interval_to_walk(iv, f);
                CHECK(static_cast<int>(x.steps.size()) == n - 1);
                CHECK(walk_to_interval(x, f) == iv);
                seen.insert(x.steps);
                ends[x.endpoint()] += 1;
                auto l = interval_label(iv, f);
                auto e = x.endpoint();
                if (f.is_mirrored())
                    CHECK(e == Point{l.a - f.m, l.b - 1});
                else
                    CHECK(e == Point{l.a - f.m, l.b - l.a});
            }
            CHECK(seen.size() == ivs.size());
            CHECK(ends == quadrant_count(walk_spec_for(f), n - 1).counts);
        }
}
