#include "ascent/poset.hpp"

#include <algorithm>

namespace ascent {

namespace {

void require_same_size(const DyckPath& p, const DyckPath& q)
{
    if (p.length() != q.length())
        throw Error(ErrorKind::SizeMismatch, p.word() + " vs " + q.word());
}

void require_family(const DyckPath& p, const PathFamily& f)
{
    if (!in_family(p, f))
        throw Error(ErrorKind::NotInFamily, p.word() + " is not in " + to_string(f));
}

// Per-path data reused across the quadratic interval scan.
struct PathProfile {
    std::vector<int> ups_prefix;  // ups_prefix[l] = #U among the first l steps
    Composition ascents;
};

PathProfile profile(const DyckPath& p)
{
    PathProfile pr;
    pr.ups_prefix.resize(p.length() + 1, 0);
    for (int i = 0; i < p.length(); ++i)
        pr.ups_prefix[i + 1] = pr.ups_prefix[i] + (p[i] == 'U');
    pr.ascents = ascent_composition(p);
    return pr;
}

bool profile_leq(const PathProfile& a, const PathProfile& b)
{
    for (std::size_t l = 0; l < a.ups_prefix.size(); ++l)
        if (a.ups_prefix[l] > b.ups_prefix[l])
            return false;
    return refines(a.ascents, b.ascents);
}

}  // namespace

Interval::Interval(DyckPath bottom, DyckPath top) : bottom_(std::move(bottom)), top_(std::move(top))
{
    require_same_size(bottom_, top_);
    if (!leq(bottom_, top_))
        throw Error(ErrorKind::NotAnInterval, bottom_.word() + " is not below " + top_.word());
    stats_.final_descent_bottom = final_descent(bottom_);
    stats_.final_descent_top = final_descent(top_);
    stats_.first_ascent_bottom = first_ascent(bottom_);
    stats_.r = r_statistic(bottom_, top_);
}

int HasseDiagram::index_of(const DyckPath& p) const
{
    auto it = std::lower_bound(nodes.begin(), nodes.end(), p);
    if (it == nodes.end() || *it != p)
        return -1;
    return static_cast<int>(it - nodes.begin());
}

bool lies_below(const DyckPath& p, const DyckPath& q)
{
    require_same_size(p, q);
    int up_p = 0, up_q = 0;
    for (int i = 0; i < p.length(); ++i) {
        up_p += p[i] == 'U';
        up_q += q[i] == 'U';
        if (up_p > up_q)
            return false;
    }
    return true;
}

bool refines(const Composition& c, const Composition& d)
{
    if (c.total() != d.total())
        return false;
    // Every partial sum of d must be a partial sum of c.
    std::size_t i = 0;
    int sum_c = 0;
    int sum_d = 0;
    for (int part : d.parts) {
        sum_d += part;
        while (sum_c < sum_d && i < c.parts.size())
            sum_c += c.parts[i++];
        if (sum_c != sum_d)
            return false;
    }
    return true;
}

bool leq(const DyckPath& p, const DyckPath& q)
{
    return lies_below(p, q) && refines(ascent_composition(p), ascent_composition(q));
}

std::vector<DyckPath> covers(const DyckPath& p)
{
    const auto& w = p.word();
    const auto len = w.size();
    std::vector<DyckPath> out;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        if (w[i] != 'D' || w[i + 1] != 'U')
            continue;
        std::size_t j = i + 1;
        while (w[j] == 'U')
            ++j;
        std::size_t k = j - (i + 1);
        std::string next = w.substr(0, i);
        next.append(k, 'U');
        next += "DD";
        next += w.substr(j + 1);
        out.emplace_back(std::move(next));
    }
    return out;
}

std::vector<DyckPath> family_covers(const DyckPath& p, const PathFamily& f)
{
    require_family(p, f);
    if (f.kind != FamilyKind::MirroredMDyck || f.m == 1)
        return covers(p);

    const std::size_t m = f.m;
    const auto& w = p.word();
    const auto len = w.size();
    std::vector<DyckPath> out;
    for (std::size_t i = 0; i + 1 < len; ++i) {
        if (w[i] != 'D' || w[i + 1] != 'U')
            continue;
        std::size_t j = i + 1;
        while (w[j] == 'U')
            ++j;
        std::size_t k = j - (i + 1);
        // Large D ending at i, ascent U^k, large D starting at j.
        std::string next = w.substr(0, i + 1 - m);
        next.append(k, 'U');
        next.append(2 * m, 'D');
        next += w.substr(j + m);
        out.emplace_back(std::move(next));
    }
    return out;
}

HasseDiagram hasse(const PathFamily& f, int n, int size_limit)
{
    HasseDiagram h;
    h.family = f;
    h.n = n;
    h.nodes = enumerate_paths(f, n, size_limit);
    for (int i = 0; i < static_cast<int>(h.nodes.size()); ++i) {
        for (const auto& up : family_covers(h.nodes[i], f)) {
            int j = h.index_of(up);
            if (j < 0)
                throw InternalError("cover " + up.word() + " left the family");
            h.edges.emplace_back(i, j);
        }
    }
    std::sort(h.edges.begin(), h.edges.end());
    return h;
}

std::vector<std::vector<bool>> cover_closure(const HasseDiagram& h)
{
    const auto count = h.nodes.size();
    std::vector<std::vector<int>> succ(count);
    for (auto [a, b] : h.edges)
        succ[a].push_back(b);
    std::vector<std::vector<bool>> reach(count, std::vector<bool>(count, false));
    std::vector<int> stack;
    for (std::size_t s = 0; s < count; ++s) {
        auto& row = reach[s];
        row[s] = true;
        stack.assign(1, static_cast<int>(s));
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int nxt : succ[v]) {
                if (!row[nxt]) {
                    row[nxt] = true;
                    stack.push_back(nxt);
                }
            }
        }
    }
    return reach;
}

bool nt_leq(const NonincreasingSequence& u, const NonincreasingSequence& v)
{
    if (u.length() != v.length())
        throw Error(ErrorKind::SizeMismatch, "sequences of different lengths");
    for (std::size_t i = 0; i < u.length(); ++i) {
        if (u[i] > v[i])
            return false;
        if (i + 1 < u.length() && v[i] > v[i + 1] && !(u[i] > u[i + 1]))
            return false;
    }
    return true;
}

NonincreasingSequence nt_join(const NonincreasingSequence& u, const NonincreasingSequence& v)
{
    if (u.length() != v.length())
        throw Error(ErrorKind::SizeMismatch, "sequences of different lengths");
    const std::size_t n = u.length();
    // The join may only descend where both u and v descend, so it is constant
    // on the blocks between common descents. Both inputs are largest at the
    // start of a block, which fixes the block value.
    std::vector<int> w(n);
    std::size_t start = 0;
    for (std::size_t i = 0; i < n; ++i) {
        bool common_descent = i + 1 < n && u[i] > u[i + 1] && v[i] > v[i + 1];
        if (i + 1 == n || common_descent) {
            int value = std::max(u[start], v[start]);
            std::fill(w.begin() + start, w.begin() + i + 1, value);
            start = i + 1;
        }
    }
    return NonincreasingSequence(std::move(w));
}

DyckPath join(const DyckPath& p, const DyckPath& q, const PathFamily& f)
{
    require_same_size(p, q);
    require_family(p, f);
    require_family(q, f);
    auto w = nt_join(encode_sequence(p, f), encode_sequence(q, f));
    return decode_sequence(w, f);
}

DyckPath meet(const DyckPath& p, const DyckPath& q, const PathFamily& f, int size_limit)
{
    require_same_size(p, q);
    int n = family_size(p, f);
    family_size(q, f);

    std::vector<DyckPath> lower;
    for (auto& r : enumerate_paths(f, n, size_limit))
        if (leq(r, p) && leq(r, q))
            lower.push_back(std::move(r));

    std::vector<const DyckPath*> maxima;
    for (const auto& a : lower) {
        bool dominated = false;
        for (const auto& b : lower) {
            if (&a != &b && leq(a, b)) {
                dominated = true;
                break;
            }
        }
        if (!dominated)
            maxima.push_back(&a);
    }
    if (maxima.size() == 1)
        return *maxima.front();
    if (f.kind == FamilyKind::MirroredMDyck && f.m >= 2)
        throw Error(ErrorKind::NoMeet, p.word() + " and " + q.word() + " have " +
                                           std::to_string(maxima.size()) + " maximal common lower bounds");
    throw InternalError("lattice family without a meet for " + p.word() + ", " + q.word());
}

std::vector<DyckPath> minimal_elements(const PathFamily& f, int n, int size_limit)
{
    auto h = hasse(f, n, size_limit);
    std::vector<bool> has_lower(h.nodes.size(), false);
    for (auto [a, b] : h.edges)
        has_lower[b] = true;
    std::vector<DyckPath> out;
    for (std::size_t i = 0; i < h.nodes.size(); ++i)
        if (!has_lower[i])
            out.push_back(h.nodes[i]);
    return out;
}

int r_statistic(const DyckPath& bottom, const DyckPath& top)
{
    auto c = ascent_composition(bottom);
    int d1 = first_ascent(top);
    int sum = 0;
    for (std::size_t r = 0; r < c.parts.size(); ++r) {
        sum += c.parts[r];
        if (sum == d1)
            return static_cast<int>(r) + 1;
        if (sum > d1)
            break;
    }
    throw Error(ErrorKind::NotAnInterval, "first ascent of the top is not a partial sum of c(bottom)");
}

std::vector<Interval> enumerate_intervals(const PathFamily& f, int n, int size_limit)
{
    if (n * f.m > size_limit)
        throw Error(ErrorKind::SizeLimitExceeded,
                    "n*m = " + std::to_string(n * f.m) + " exceeds limit " + std::to_string(size_limit));
    auto paths = enumerate_paths(f, n, std::max(size_limit, n * f.m));
    std::vector<PathProfile> profiles;
    profiles.reserve(paths.size());
    for (const auto& p : paths)
        profiles.push_back(profile(p));

    std::vector<Interval> out;
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 0; j < paths.size(); ++j)
            if (profile_leq(profiles[i], profiles[j]))
                out.emplace_back(paths[i], paths[j]);
    return out;
}

}  // namespace ascent
