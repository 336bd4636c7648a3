#pragma once

// The recursive involution on intervals of D_n that swaps a(P), the first
// ascent of the bottom path, with r(P, Q).

#include <map>
#include <mutex>
#include <string>
#include <utility>

#include "ascent/poset.hpp"

namespace ascent {

struct PeakDeletion {
    Interval smaller;
    int a = 0;  // first ascent of the input's bottom path
    int r = 0;  // r of the input
};

PeakDeletion delete_first_peaks(const Interval& iv);

// The unique legal first-peak insertion reaching (a_target, r_target).
// NoSuchInsertion when none exists; InternalError if more than one does.
Interval insert_first_peaks(const Interval& iv, int a_target, int r_target);

// Memoized f. The memo is guarded, so one instance can serve several threads.
class Involution {
public:
    Interval apply(const Interval& iv);
    std::size_t memo_size() const;

private:
    mutable std::mutex mutex_;
    std::map<std::pair<std::string, std::string>, Interval> memo_;
};

Interval involution_f(const Interval& iv);

}  // namespace ascent
