#pragma once

// Words avoiding aba / acb, and the bijection between them and intervals
// [u, v] (u_1 = v_1) of positive nonincreasing sequences.

#include <string>
#include <string_view>
#include <utility>

#include "ascent/paths.hpp"
#include "ascent/poset.hpp"

namespace ascent {

Word ninc(Word w);
Word ndec(Word w);
// Prefix minima: the largest nonincreasing word below w.
Word low(const Word& w);

// True iff no i < j < k has w_i <= w_k < w_j.
bool avoids_patterns(const Word& w);

// W_n: letters in 1..n, at least one 1.
bool in_wn(const Word& w, int n);

// The unique aba/acb-avoiding w with ninc(w) = sorted and low(w) = lower.
// Throws Infeasible when no such word exists.
Word reconstruct(const Word& sorted, const Word& lower);

struct SequencePair {
    NonincreasingSequence bottom;
    NonincreasingSequence top;
};

SequencePair phi(const Word& w, int n);
Word psi(const NonincreasingSequence& u, const NonincreasingSequence& v, int n);

// Canonical representative of the sylvester class attached to an interval.
Word interval_to_sylvester(const Interval& iv, const PathFamily& f);

bool is_parking_class_rep(const Word& w, int m, int n);

Word parse_word(std::string_view text);
std::string render(const Word& w);

}  // namespace ascent
