#include "ascent/paths.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

namespace ascent {

namespace {

int step_rank(char c) { return c == 'U' ? 0 : 1; }

std::vector<int> runs_of(const std::string& w, char symbol)
{
    std::vector<int> out;
    int run = 0;
    for (char c : w) {
        if (c == symbol) {
            ++run;
        } else if (run > 0) {
            out.push_back(run);
            run = 0;
        }
    }
    if (run > 0)
        out.push_back(run);
    return out;
}

void check_family(const DyckPath& p, const PathFamily& f)
{
    if (!in_family(p, f))
        throw Error(ErrorKind::NotInFamily, p.word() + " is not in " + to_string(f));
}

}  // namespace

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps))
{
    if (steps_.empty())
        throw Error(ErrorKind::EmptyInput, "empty path");
    int height = 0;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
        char c = steps_[i];
        if (c == 'U') {
            ++height;
        } else if (c == 'D') {
            if (--height < 0)
                throw Error(ErrorKind::NegativePrefix,
                            "prefix of length " + std::to_string(i + 1) + " dips below the axis");
        } else {
            throw Error(ErrorKind::InvalidSymbol, std::string("unexpected symbol '") + c + "'");
        }
    }
    if (height != 0)
        throw Error(ErrorKind::UnbalancedPath, "path ends at height " + std::to_string(height));
}

std::strong_ordering DyckPath::operator<=>(const DyckPath& other) const
{
    return std::lexicographical_compare_three_way(
        steps_.begin(), steps_.end(), other.steps_.begin(), other.steps_.end(),
        [](char a, char b) { return step_rank(a) <=> step_rank(b); });
}

PathFamily PathFamily::mdyck(int m)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "m must be positive");
    return {FamilyKind::MDyck, m};
}

PathFamily PathFamily::mirrored(int m)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "m must be positive");
    return {FamilyKind::MirroredMDyck, m};
}

std::string to_string(const PathFamily& f)
{
    switch (f.kind) {
    case FamilyKind::Plain: return "plain";
    case FamilyKind::MDyck: return "mdyck(m=" + std::to_string(f.m) + ")";
    case FamilyKind::MirroredMDyck: return "mirrored(m=" + std::to_string(f.m) + ")";
    }
    return "?";
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

NonincreasingSequence::NonincreasingSequence(std::vector<int> values) : values_(std::move(values))
{
    for (std::size_t i = 1; i < values_.size(); ++i)
        if (values_[i] > values_[i - 1])
            throw Error(ErrorKind::NotNonincreasing, "sequence increases at position " + std::to_string(i + 1));
}

DyckPath parse_path(std::string_view text)
{
    std::string steps;
    steps.reserve(text.size());
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c)))
            continue;
        steps.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
    return DyckPath(std::move(steps));
}

std::string render(const DyckPath& p) { return p.word(); }

bool in_family(const DyckPath& p, const PathFamily& f)
{
    if (f.kind == FamilyKind::Plain)
        return true;
    if (p.size() % f.m != 0)
        return false;
    char symbol = f.kind == FamilyKind::MDyck ? 'U' : 'D';
    for (int r : runs_of(p.word(), symbol))
        if (r % f.m != 0)
            return false;
    return true;
}

int family_size(const DyckPath& p, const PathFamily& f)
{
    check_family(p, f);
    return p.size() / f.m;
}

Composition ascent_composition(const DyckPath& p) { return {runs_of(p.word(), 'U')}; }

Composition descent_composition(const DyckPath& p) { return {runs_of(p.word(), 'D')}; }

int final_descent(const DyckPath& p)
{
    const auto& w = p.word();
    auto last_up = w.find_last_of('U');
    return static_cast<int>(w.size() - last_up - 1);
}

int first_ascent(const DyckPath& p) { return static_cast<int>(p.word().find('D')); }

std::vector<DyckPath> enumerate_paths(const PathFamily& f, int n, int size_limit)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "n must be positive");
    if (n * f.m > size_limit)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "n*m = " + std::to_string(n * f.m) + " exceeds limit " + std::to_string(size_limit));

    const int total = n * f.m;
    const int up_block = f.kind == FamilyKind::MDyck ? f.m : 1;
    const int down_block = f.kind == FamilyKind::MirroredMDyck ? f.m : 1;

    std::vector<DyckPath> out;
    std::string prefix;
    prefix.reserve(2 * total);

    // U before D at every branch point gives the canonical order directly.
    auto rec = [&](auto&& self, int ups, int downs) -> void {
        if (ups == total && downs == total) {
            out.emplace_back(prefix);
            return;
        }
        if (ups + up_block <= total) {
            prefix.append(up_block, 'U');
            self(self, ups + up_block, downs);
            prefix.resize(prefix.size() - up_block);
        }
        if (downs + down_block <= ups) {
            prefix.append(down_block, 'D');
            self(self, ups, downs + down_block);
            prefix.resize(prefix.size() - down_block);
        }
    };
    rec(rec, 0, 0);
    return out;
}

mpz_class fuss_catalan(int m, int n)
{
    if (m < 1 || n < 0)
        throw Error(ErrorKind::InvalidArgument, "fuss_catalan needs m >= 1, n >= 0");
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>((m + 1) * n), static_cast<unsigned long>(n));
    return binom / (m * n + 1);
}

NonincreasingSequence encode_sequence(const DyckPath& p, const PathFamily& f)
{
    check_family(p, f);
    const auto& w = p.word();
    std::vector<int> u;
    if (f.kind != FamilyKind::MirroredMDyck) {
        // u_i = number of D steps after the i-th large up step.
        const int total_down = p.size();
        int downs = 0, ups = 0;
        for (char c : w) {
            if (c == 'D') {
                ++downs;
            } else {
                if (ups % f.m == 0)
                    u.push_back(total_down - downs);
                ++ups;
            }
        }
    } else {
        // u_i = number of large D steps after the i-th unit up step.
        const int total_down = p.size();
        int downs = 0;
        for (char c : w) {
            if (c == 'D')
                ++downs;
            else
                u.push_back((total_down - downs) / f.m);
        }
    }
    return NonincreasingSequence(std::move(u));
}

DyckPath decode_sequence(const NonincreasingSequence& u, const PathFamily& f)
{
    const auto& v = u.values();
    if (v.empty())
        throw Error(ErrorKind::EmptyInput, "empty sequence");
    const int m = f.m;
    std::string w;
    if (f.kind != FamilyKind::MirroredMDyck) {
        const int n = static_cast<int>(v.size());
        for (int i = 1; i <= n; ++i) {
            int ui = v[i - 1];
            if (ui < m * (n - i + 1) || ui > m * n)
                throw Error(ErrorKind::BoundsViolated,
                            "u_" + std::to_string(i) + " = " + std::to_string(ui) + " outside [" +
                                std::to_string(m * (n - i + 1)) + ", " + std::to_string(m * n) + "]");
        }
        for (int i = 0; i < n; ++i) {
            int before = i == 0 ? m * n : v[i - 1];
            w.append(before - v[i], 'D');
            w.append(m, 'U');
        }
        w.append(v[n - 1], 'D');
    } else {
        const int len = static_cast<int>(v.size());
        if (len % m != 0)
            throw Error(ErrorKind::BoundsViolated, "length must be a multiple of m");
        const int n = len / m;
        for (int i = 1; i <= len; ++i) {
            int ui = v[i - 1];
            // n - (i-1)/m <= u_i, kept in integers.
            if (m * ui < m * n - (i - 1) || ui > n)
                throw Error(ErrorKind::BoundsViolated,
                            "u_" + std::to_string(i) + " = " + std::to_string(ui) + " violates the mirrored bounds");
        }
        for (int i = 0; i < len; ++i) {
            int before = i == 0 ? n : v[i - 1];
            w.append(m * (before - v[i]), 'D');
            w.push_back('U');
        }
        w.append(m * v[len - 1], 'D');
    }
    return DyckPath(std::move(w));
}

Word vertical_encoding(const NonincreasingSequence& u)
{
    const auto& v = u.values();
    const int n = static_cast<int>(v.size());
    if (n == 0)
        throw Error(ErrorKind::EmptyInput, "empty sequence");
    if (v.back() < 1)
        throw Error(ErrorKind::NonPositive, "vertical encoding needs a positive sequence");
    Word w;
    w.reserve(v.front());
    for (int i = 1; i <= n; ++i) {
        int next = i < n ? v[i] : 0;
        w.insert(w.end(), v[i - 1] - next, n + 1 - i);
    }
    return w;
}

NonincreasingSequence vertical_decoding(const Word& w, int n)
{
    std::vector<int> u(n, 0);
    for (int letter : w) {
        if (letter < 1 || letter > n)
            throw Error(ErrorKind::NotInWn, "letter " + std::to_string(letter) + " outside 1.." + std::to_string(n));
        // letter contributes to u_i for every i with letter <= n+1-i.
        for (int i = 1; i <= n + 1 - letter; ++i)
            ++u[i - 1];
    }
    return NonincreasingSequence(std::move(u));
}

NonincreasingSequence parse_sequence(std::string_view text)
{
    std::vector<int> values;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos)
            comma = text.size();
        auto token = text.substr(pos, comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
            throw Error(ErrorKind::InvalidArgument, "bad sequence token '" + std::string(token) + "'");
        values.push_back(value);
        pos = comma + 1;
    }
    return NonincreasingSequence(std::move(values));
}

std::string render(const NonincreasingSequence& u)
{
    std::string out;
    for (std::size_t i = 0; i < u.length(); ++i) {
        if (i)
            out.push_back(',');
        out += std::to_string(u[i]);
    }
    return out;
}

}  // namespace ascent
