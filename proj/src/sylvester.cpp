#include "ascent/sylvester.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <set>

namespace ascent {

Word ninc(Word w)
{
    std::sort(w.begin(), w.end(), std::greater<>());
    return w;
}

Word ndec(Word w)
{
    std::sort(w.begin(), w.end());
    return w;
}

Word low(const Word& w)
{
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out[i] = i == 0 ? w[0] : std::min(out[i - 1], w[i]);
    return out;
}

bool avoids_patterns(const Word& w)
{
    // For each middle position j, the best first letter is the prefix
    // minimum before j; look for a later letter in [that minimum, w_j).
    const std::size_t len = w.size();
    if (len < 3)
        return true;
    int min_before = w[0];
    for (std::size_t j = 1; j + 1 < len; ++j) {
        if (w[j] > min_before) {
            for (std::size_t k = j + 1; k < len; ++k)
                if (w[k] >= min_before && w[k] < w[j])
                    return false;
        }
        min_before = std::min(min_before, w[j]);
    }
    return true;
}

bool in_wn(const Word& w, int n)
{
    bool has_one = false;
    for (int letter : w) {
        if (letter < 1 || letter > n)
            return false;
        has_one |= letter == 1;
    }
    return has_one;
}

Word reconstruct(const Word& sorted, const Word& lower)
{
    if (sorted.size() != lower.size())
        throw Error(ErrorKind::Infeasible, "words of different lengths");
    if (sorted.empty())
        return {};
    if (!std::is_sorted(sorted.begin(), sorted.end(), std::greater<>()) ||
        !std::is_sorted(lower.begin(), lower.end(), std::greater<>()))
        throw Error(ErrorKind::Infeasible, "inputs must be nonincreasing");

    // Strict left-to-right minima of `lower` stay in place.
    std::vector<std::size_t> minima;
    for (std::size_t i = 0; i < lower.size(); ++i)
        if (i == 0 || lower[i] < lower[i - 1])
            minima.push_back(i);

    std::multiset<int> pool(sorted.begin(), sorted.end());
    for (auto i : minima) {
        auto it = pool.find(lower[i]);
        if (it == pool.end())
            throw Error(ErrorKind::Infeasible, "left-to-right minimum " + std::to_string(lower[i]) + " is missing");
        pool.erase(it);
    }

    Word w(lower.size());
    for (std::size_t j = 0; j < minima.size(); ++j) {
        std::size_t pos = minima[j];
        std::size_t end = j + 1 < minima.size() ? minima[j + 1] : lower.size();
        int floor = lower[pos];
        w[pos] = floor;
        // Gap filled in nondecreasing order with the smallest letters >= floor.
        for (std::size_t g = pos + 1; g < end; ++g) {
            auto it = pool.lower_bound(floor);
            if (it == pool.end())
                throw Error(ErrorKind::Infeasible, "ran out of letters >= " + std::to_string(floor));
            w[g] = *it;
            pool.erase(it);
        }
    }
    if (ninc(w) != sorted || low(w) != lower)
        throw Error(ErrorKind::Infeasible, "pair is not in the image of (ninc, low)");
    return w;
}

SequencePair phi(const Word& w, int n)
{
    if (!in_wn(w, n))
        throw Error(ErrorKind::NotInWn, render(w) + " is not in W_" + std::to_string(n));
    return {vertical_decoding(ninc(w), n), vertical_decoding(low(w), n)};
}

Word psi(const NonincreasingSequence& u, const NonincreasingSequence& v, int n)
{
    auto fail = [](const std::string& why) { throw Error(ErrorKind::NotAnInterval, why); };
    if (static_cast<int>(u.length()) != n || static_cast<int>(v.length()) != n)
        fail("sequences must have length n");
    if (u[n - 1] < 1 || v[n - 1] < 1)
        fail("sequences must be positive");
    if (u[0] != v[0])
        fail("u_1 != v_1");
    if (!nt_leq(u, v))
        fail("u is not below v in the Nadeau-Tewari order");
    return reconstruct(vertical_encoding(u), vertical_encoding(v));
}

Word interval_to_sylvester(const Interval& iv, const PathFamily& f)
{
    auto u = encode_sequence(iv.bottom(), f);
    auto v = encode_sequence(iv.top(), f);
    return psi(u, v, static_cast<int>(u.length()));
}

bool is_parking_class_rep(const Word& w, int m, int n)
{
    if (static_cast<int>(w.size()) != n || !avoids_patterns(w))
        return false;
    auto sorted = ndec(w);
    for (int i = 0; i < n; ++i)
        if (sorted[i] < 1 || sorted[i] > i * m + 1)
            return false;
    return true;
}

Word parse_word(std::string_view text)
{
    Word w;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ')
            ++pos;
        if (pos == text.size())
            break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || value < 1)
            throw Error(ErrorKind::InvalidArgument, "bad word near '" + std::string(text.substr(pos)) + "'");
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && text[pos] != ' ')
            throw Error(ErrorKind::InvalidArgument, "letters must be separated by spaces");
        w.push_back(value);
    }
    return w;
}

std::string render(const Word& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out.push_back(' ');
        out += std::to_string(w[i]);
    }
    return out;
}

}  // namespace ascent
