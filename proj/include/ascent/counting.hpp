#pragma once

// Exact interval counts: generating trees, quadrant walks with infinite step
// sets, the weighted finite model, and the interval <-> walk bijections.

#include <map>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ascent/paths.hpp"
#include "ascent/polynomial.hpp"
#include "ascent/poset.hpp"

namespace ascent {

// (a, b) = final descents of (P, Q) for m-Dyck families; (a, r) = first
// ascent of P and r(P, Q) for mirrored families.
struct GTLabel {
    int a = 0;
    int b = 0;
    auto operator<=>(const GTLabel&) const = default;
};

GTLabel gt_root(const PathFamily& f);
// Children of a label, in the order the rule lists them.
std::vector<GTLabel> gt_children(const PathFamily& f, const GTLabel& label);

mpz_class gt_count(const PathFamily& f, int n);
// g(1..n_max) from one pass of the label DP.
std::vector<mpz_class> gt_count_sequence(const PathFamily& f, int n_max);
// Coefficient of t^n in G_m(t;x,y), or G'_m(t;x,y) for mirrored families.
Poly2 gt_count_refined(const PathFamily& f, int n);

enum class WalkKind { InfiniteS, InfiniteSPrime, WeightedFinite };

struct WalkSpec {
    WalkKind kind = WalkKind::InfiniteS;
    int m = 1;
};

WalkSpec walk_spec_for(const PathFamily& f);

using Point = std::pair<int, int>;

struct Walk {
    std::vector<Point> steps;
    bool origin_confined = true;

    std::vector<Point> vertices() const;  // includes the origin
    Point endpoint() const;
};

struct CountTable {
    int n = 0;
    std::map<Point, mpz_class> counts;

    mpz_class total() const;
    mpz_class at(Point p) const;
};

bool step_allowed(const WalkSpec& spec, Point step);

// Confined walks of n steps from the origin, by endpoint. Prefix sums.
CountTable quadrant_count(const WalkSpec& spec, int n);
// Same table, one explicit transition per (source, target) pair.
CountTable quadrant_count_naive(const WalkSpec& spec, int n);

// Steps and multiplicities of (1+u)^m (1+v) (1+u+v) / (uv).
std::map<Point, mpz_class> weighted_steps(int m);
// Weighted walks of n-1 steps from the origin back to it.
mpz_class weighted_quadrant_count(int m, int n);
CountTable weighted_count_table(int m, int n);

// Peak surgery. Heights are measured in unit steps.
DyckPath delete_final_peak(const DyckPath& p, int m);
DyckPath insert_final_peak(const DyckPath& p, int m, int height);
DyckPath delete_first_peak(const DyckPath& p, int m);
DyckPath insert_first_peak(const DyckPath& p, int m, int height);

// The generating-tree label of an interval.
GTLabel interval_label(const Interval& iv, const PathFamily& f);

Walk interval_to_walk(const Interval& iv, const PathFamily& f);
Interval walk_to_interval(const Walk& w, const PathFamily& f);

}  // namespace ascent
