#pragma once

// The ascent order on Dyck paths and on the m-Dyck / mirrored m-Dyck
// subfamilies.
//
// P <= Q  iff  P lies weakly below Q and c(P) refines c(Q).
// Covers rewrite a factor D U^k D into U^k D D.

#include <cstdint>
#include <utility>
#include <vector>

#include "ascent/paths.hpp"

namespace ascent {

inline constexpr int kDefaultIntervalSizeLimit = 16;

struct IntervalStats {
    int final_descent_bottom = 0;
    int final_descent_top = 0;
    int first_ascent_bottom = 0;
    // The r with c_1 + ... + c_r = d_1, c = c(bottom), d = c(top).
    int r = 0;

    bool operator==(const IntervalStats&) const = default;
};

class Interval {
public:
    // Throws SizeMismatch / NotAnInterval when bottom <= top fails.
    Interval(DyckPath bottom, DyckPath top);

    const DyckPath& bottom() const noexcept { return bottom_; }
    const DyckPath& top() const noexcept { return top_; }
    const IntervalStats& stats() const noexcept { return stats_; }
    int size() const noexcept { return bottom_.size(); }

    bool operator==(const Interval& o) const { return bottom_ == o.bottom_ && top_ == o.top_; }
    auto operator<=>(const Interval& o) const
    {
        if (auto c = bottom_ <=> o.bottom_; c != 0)
            return c;
        return top_ <=> o.top_;
    }

private:
    DyckPath bottom_;
    DyckPath top_;
    IntervalStats stats_;
};

struct HasseDiagram {
    std::vector<DyckPath> nodes;                   // canonical (lexicographic) order
    std::vector<std::pair<int, int>> edges;        // (lower, upper) node indices
    PathFamily family;
    int n = 0;

    int index_of(const DyckPath& p) const;  // -1 when absent
};

bool lies_below(const DyckPath& p, const DyckPath& q);
bool refines(const Composition& c, const Composition& d);
bool leq(const DyckPath& p, const DyckPath& q);

// Unit-step cover rule D U^k D -> U^k D D, one result per non-initial ascent.
std::vector<DyckPath> covers(const DyckPath& p);
// Covers inside a family: D U^{mk} D -> U^{mk} D D for m-Dyck paths,
// D^m U^k D^m -> U^k D^{2m} for mirrored m-Dyck paths.
std::vector<DyckPath> family_covers(const DyckPath& p, const PathFamily& f);

HasseDiagram hasse(const PathFamily& f, int n, int size_limit = kDefaultSizeLimit);

// closure[i][j] == true iff nodes[i] <= nodes[j] following edges upward.
std::vector<std::vector<bool>> cover_closure(const HasseDiagram& h);

// Join in the Nadeau-Tewari lattice of nonincreasing sequences.
NonincreasingSequence nt_join(const NonincreasingSequence& u, const NonincreasingSequence& v);
bool nt_leq(const NonincreasingSequence& u, const NonincreasingSequence& v);

DyckPath join(const DyckPath& p, const DyckPath& q, const PathFamily& f);
// Brute force greatest lower bound. NoMeet for mirrored families (m >= 2)
// when the common lower bounds have no maximum.
DyckPath meet(const DyckPath& p, const DyckPath& q, const PathFamily& f,
              int size_limit = kDefaultSizeLimit);

std::vector<DyckPath> minimal_elements(const PathFamily& f, int n, int size_limit = kDefaultSizeLimit);

int r_statistic(const DyckPath& bottom, const DyckPath& top);

std::vector<Interval> enumerate_intervals(const PathFamily& f, int n,
                                          int size_limit = kDefaultIntervalSizeLimit);

}  // namespace ascent
