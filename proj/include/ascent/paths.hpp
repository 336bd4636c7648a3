#pragma once

// Dyck paths and the two m-families built on them.
//
// A path is always stored as its word of unit steps. Large steps (runs of
// m unit steps) are only ever a way of reading that word.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "ascent/error.hpp"

namespace ascent {

// Exhaustive generators refuse n*m above this unless told otherwise.
inline constexpr int kDefaultSizeLimit = 30;

class DyckPath {
public:
    // Validates: nonempty, balanced, never below the axis, only 'U'/'D'.
    explicit DyckPath(std::string steps);

    const std::string& word() const noexcept { return steps_; }
    int size() const noexcept { return static_cast<int>(steps_.size() / 2); }
    int length() const noexcept { return static_cast<int>(steps_.size()); }
    char operator[](std::size_t i) const { return steps_[i]; }

    bool operator==(const DyckPath&) const = default;
    // Lexicographic on step words with U < D.
    std::strong_ordering operator<=>(const DyckPath& other) const;

private:
    std::string steps_;
};

enum class FamilyKind { Plain, MDyck, MirroredMDyck };

struct PathFamily {
    FamilyKind kind = FamilyKind::Plain;
    int m = 1;

    static PathFamily plain() { return {FamilyKind::Plain, 1}; }
    static PathFamily mdyck(int m);
    static PathFamily mirrored(int m);

    // MDyck with m = 1 and MirroredMDyck with m = 1 are both D_n.
    bool is_mirrored() const noexcept { return kind == FamilyKind::MirroredMDyck; }

    bool operator==(const PathFamily&) const = default;
};

std::string to_string(const PathFamily& f);

struct Composition {
    std::vector<int> parts;

    int total() const;
    bool operator==(const Composition&) const = default;
};

// Weakly decreasing integer sequence.
class NonincreasingSequence {
public:
    NonincreasingSequence() = default;
    explicit NonincreasingSequence(std::vector<int> values);

    const std::vector<int>& values() const noexcept { return values_; }
    std::size_t length() const noexcept { return values_.size(); }
    int operator[](std::size_t i) const { return values_[i]; }

    bool operator==(const NonincreasingSequence&) const = default;

private:
    std::vector<int> values_;
};

// Words over the positive integers. Alphabet bounds are passed explicitly
// where membership in W_n matters.
using Word = std::vector<int>;

DyckPath parse_path(std::string_view text);
std::string render(const DyckPath& p);

bool in_family(const DyckPath& p, const PathFamily& f);
// Size in large steps: size()/m. Throws NotInFamily if p is not in f.
int family_size(const DyckPath& p, const PathFamily& f);

Composition ascent_composition(const DyckPath& p);
Composition descent_composition(const DyckPath& p);
int final_descent(const DyckPath& p);
int first_ascent(const DyckPath& p);

std::vector<DyckPath> enumerate_paths(const PathFamily& f, int n,
                                      int size_limit = kDefaultSizeLimit);

mpz_class fuss_catalan(int m, int n);

NonincreasingSequence encode_sequence(const DyckPath& p, const PathFamily& f);
DyckPath decode_sequence(const NonincreasingSequence& u, const PathFamily& f);

// W(u): u_i - u_{i+1} copies of letter n+1-i, in nonincreasing order.
Word vertical_encoding(const NonincreasingSequence& u);
// Inverse of vertical_encoding for a nonincreasing word over {1..n}.
NonincreasingSequence vertical_decoding(const Word& w, int n);

NonincreasingSequence parse_sequence(std::string_view text);
std::string render(const NonincreasingSequence& u);

}  // namespace ascent
