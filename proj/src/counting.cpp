#include "ascent/counting.hpp"

#include <algorithm>

namespace ascent {

namespace {

// Dense square table of big integers.
struct Grid {
    int dim = 0;
    std::vector<mpz_class> cells;

    explicit Grid(int d) : dim(d), cells(static_cast<std::size_t>(d) * d) {}
    mpz_class& at(int i, int j) { return cells[static_cast<std::size_t>(i) * dim + j]; }
    const mpz_class& at(int i, int j) const { return cells[static_cast<std::size_t>(i) * dim + j]; }
    // 0 outside the table, which is what the suffix sums want.
    mpz_class get(int i, int j) const
    {
        if (i < 0 || j < 0 || i >= dim || j >= dim)
            return 0;
        return at(i, j);
    }
};

// suffix(i, j) = sum of g over i' >= i, j' >= j.
Grid suffix_sums(const Grid& g)
{
    Grid s(g.dim + 1);
    for (int i = g.dim - 1; i >= 0; --i)
        for (int j = g.dim - 1; j >= 0; --j)
            s.at(i, j) = g.at(i, j) + s.at(i + 1, j) + s.at(i, j + 1) - s.at(i + 1, j + 1);
    return s;
}

mpz_class suffix_at(const Grid& s, int i, int j)
{
    i = std::max(i, 0);
    j = std::max(j, 0);
    if (i >= s.dim || j >= s.dim)
        return 0;
    return s.at(i, j);
}

// One generating-tree step in pull form.
//   rule (rr):     new(A,B) = sum_{a > A-m, b >= B-m} old(a,b) + old(A-m, B-m),  B >= A
//   rule (rr-bis): new(A,R) = sum_{r >= R} old(A-m, r) + sum_{a > A-m, r >= R-1} old(a,r)
Grid gt_step(const Grid& old, const PathFamily& f, int depth)
{
    const int m = f.m;
    Grid next(old.dim);
    Grid s = suffix_sums(old);
    if (!f.is_mirrored()) {
        const int hi = std::min(old.dim - 1, m * (depth + 1));
        for (int A = m; A <= hi; ++A)
            for (int B = A; B <= hi; ++B)
                next.at(A, B) = suffix_at(s, A - m + 1, B - m) + old.get(A - m, B - m);
    } else {
        const int hi_a = std::min(old.dim - 1, m * (depth + 1));
        const int hi_r = std::min(old.dim - 1, depth + 1);
        for (int A = m; A <= hi_a; ++A) {
            mpz_class row = 0;  // sum_{r >= R} old(A-m, r)
            for (int R = old.dim - 1; R >= 1; --R) {
                row += old.get(A - m, R);
                if (R <= hi_r)
                    next.at(A, R) = row + suffix_at(s, A - m + 1, R - 1);
            }
        }
    }
    return next;
}

Grid gt_root_grid(const PathFamily& f, int n)
{
    Grid g(f.m * n + 2);
    auto root = gt_root(f);
    g.at(root.a, root.b) = 1;
    return g;
}

mpz_class grid_total(const Grid& g)
{
    mpz_class t = 0;
    for (const auto& c : g.cells)
        t += c;
    return t;
}

void require_positive(int n)
{
    if (n < 1)
        throw Error(ErrorKind::InvalidArgument, "n must be positive");
}

Point operator-(Point a, Point b) { return {a.first - b.first, a.second - b.second}; }

}  // namespace

GTLabel gt_root(const PathFamily& f) { return f.is_mirrored() ? GTLabel{f.m, 1} : GTLabel{f.m, f.m}; }

std::vector<GTLabel> gt_children(const PathFamily& f, const GTLabel& label)
{
    const int m = f.m;
    std::vector<GTLabel> out;
    if (!f.is_mirrored()) {
        for (int a2 = 0; a2 < label.a; ++a2)
            for (int b2 = a2; b2 <= label.b; ++b2)
                out.push_back({m + a2, m + b2});
        out.push_back({m + label.a, m + label.b});
    } else {
        for (int s = 1; s <= label.b; ++s)
            out.push_back({m + label.a, s});
        for (int a2 = 0; a2 < label.a; ++a2)
            for (int s = 0; s <= label.b; ++s)
                out.push_back({m + a2, s + 1});
    }
    return out;
}

std::vector<mpz_class> gt_count_sequence(const PathFamily& f, int n_max)
{
    require_positive(n_max);
    std::vector<mpz_class> out;
    Grid g = gt_root_grid(f, n_max);
    out.push_back(grid_total(g));
    for (int depth = 1; depth < n_max; ++depth) {
        g = gt_step(g, f, depth);
        out.push_back(grid_total(g));
    }
    return out;
}

mpz_class gt_count(const PathFamily& f, int n) { return gt_count_sequence(f, n).back(); }

Poly2 gt_count_refined(const PathFamily& f, int n)
{
    require_positive(n);
    Grid g = gt_root_grid(f, n);
    for (int depth = 1; depth < n; ++depth)
        g = gt_step(g, f, depth);
    Poly2 p;
    for (int a = 0; a < g.dim; ++a)
        for (int b = 0; b < g.dim; ++b)
            if (g.at(a, b) != 0)
                p.add_term({a, b}, mpq_class(g.at(a, b)));
    return p;
}

WalkSpec walk_spec_for(const PathFamily& f)
{
    return {f.is_mirrored() ? WalkKind::InfiniteSPrime : WalkKind::InfiniteS, f.m};
}

std::vector<Point> Walk::vertices() const
{
    std::vector<Point> v{{0, 0}};
    for (auto [dx, dy] : steps)
        v.emplace_back(v.back().first + dx, v.back().second + dy);
    return v;
}

Point Walk::endpoint() const { return vertices().back(); }

mpz_class CountTable::total() const
{
    mpz_class t = 0;
    for (const auto& [p, c] : counts)
        t += c;
    return t;
}

mpz_class CountTable::at(Point p) const
{
    auto it = counts.find(p);
    return it == counts.end() ? mpz_class(0) : it->second;
}

bool step_allowed(const WalkSpec& spec, Point step)
{
    const int m = spec.m;
    auto [dx, dy] = step;
    switch (spec.kind) {
    case WalkKind::InfiniteS: return (dx == m && dy == 0) || (dx < m && dx + dy <= m);
    case WalkKind::InfiniteSPrime: return (dx == m && dy <= 0) || (dx < m && dy <= 1);
    case WalkKind::WeightedFinite: return weighted_steps(m).count(step) > 0;
    }
    return false;
}

CountTable quadrant_count(const WalkSpec& spec, int n)
{
    if (n < 0)
        throw Error(ErrorKind::InvalidArgument, "n must be nonnegative");
    if (spec.kind == WalkKind::WeightedFinite)
        return weighted_count_table(spec.m, n);
    const int m = spec.m;
    const int dim = m * n + 2;
    CountTable table;
    table.n = n;
    if (spec.kind == WalkKind::InfiniteS) {
        // Coordinates (i, s = i + j): a source (i, j) reaches (k, l) iff
        // i > k - m and i + j >= k + l - m, or (k, l) = (i + m, j).
        Grid g(dim);
        g.at(0, 0) = 1;
        for (int step = 1; step <= n; ++step) {
            Grid s = suffix_sums(g);
            Grid next(dim);
            const int hi = m * step;
            for (int k = 0; k <= hi; ++k)
                for (int sl = k; sl <= hi; ++sl)
                    next.at(k, sl) = suffix_at(s, k - m + 1, sl - m) + (k >= m ? g.get(k - m, sl - m) : mpz_class(0));
            g = std::move(next);
        }
        for (int i = 0; i < dim; ++i)
            for (int s = i; s < dim; ++s)
                if (g.at(i, s) != 0)
                    table.counts[{i, s - i}] = g.at(i, s);
    } else {
        // (i, j) reaches (i + m, l) for l <= j, and (k, l) for k < i + m, l <= j + 1.
        Grid g(dim);
        g.at(0, 0) = 1;
        for (int step = 1; step <= n; ++step) {
            Grid s = suffix_sums(g);
            Grid next(dim);
            for (int k = 0; k <= m * step; ++k) {
                mpz_class row = 0;
                for (int l = dim - 1; l >= 0; --l) {
                    row += g.get(k - m, l);
                    if (l <= step)
                        next.at(k, l) = row + suffix_at(s, k - m + 1, l - 1);
                }
            }
            g = std::move(next);
        }
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j)
                if (g.at(i, j) != 0)
                    table.counts[{i, j}] = g.at(i, j);
    }
    return table;
}

CountTable quadrant_count_naive(const WalkSpec& spec, int n)
{
    if (spec.kind == WalkKind::WeightedFinite)
        return weighted_count_table(spec.m, n);
    std::map<Point, mpz_class> cur{{{0, 0}, 1}};
    for (int step = 1; step <= n; ++step) {
        const int box = spec.m * step;
        std::map<Point, mpz_class> next;
        for (const auto& [p, c] : cur)
            for (int k = 0; k <= box; ++k)
                for (int l = 0; l <= box; ++l)
                    if (step_allowed(spec, Point{k, l} - p))
                        next[{k, l}] += c;
        cur = std::move(next);
    }
    return {n, std::move(cur)};
}

std::map<Point, mpz_class> weighted_steps(int m)
{
    if (m < 1)
        throw Error(ErrorKind::InvalidArgument, "m must be positive");
    const Poly2 u = Poly2::var(0), v = Poly2::var(1);
    Poly2 p = (Poly2(1) + u).pow(m) * (Poly2(1) + v) * (Poly2(1) + u + v);
    std::map<Point, mpz_class> steps;
    for (const auto& [e, c] : p.terms())
        steps[{e[0] - 1, e[1] - 1}] = c.get_num();
    return steps;
}

CountTable weighted_count_table(int m, int n)
{
    const auto steps = weighted_steps(m);
    std::map<Point, mpz_class> cur{{{0, 0}, 1}};
    for (int step = 1; step <= n; ++step) {
        std::map<Point, mpz_class> next;
        for (const auto& [p, c] : cur)
            for (const auto& [d, w] : steps) {
                Point q{p.first + d.first, p.second + d.second};
                if (q.first >= 0 && q.second >= 0)
                    next[q] += c * w;
            }
        cur = std::move(next);
    }
    return {n, std::move(cur)};
}

mpz_class weighted_quadrant_count(int m, int n)
{
    require_positive(n);
    return weighted_count_table(m, n - 1).at({0, 0});
}

DyckPath delete_final_peak(const DyckPath& p, int m)
{
    const auto& w = p.word();
    if (p.size() <= m)
        throw Error(ErrorKind::SizeTooSmall, "no peak can be removed from " + w);
    const std::size_t last_up = w.find_last_of('U');
    if (last_up + 1 < static_cast<std::size_t>(m) || final_descent(p) < m)
        throw Error(ErrorKind::NotInFamily, w + " has no final large peak");
    std::string out = w.substr(0, last_up + 1 - m);
    out += w.substr(last_up + 1 + m);
    return DyckPath(std::move(out));
}

DyckPath insert_final_peak(const DyckPath& p, int m, int height)
{
    const int a = final_descent(p);
    if (height < 0 || height > a)
        throw Error(ErrorKind::InvalidArgument, "insertion height outside the final descent");
    const auto& w = p.word();
    std::string out = w.substr(0, w.size() - a);
    out.append(a - height, 'D');
    out.append(m, 'U');
    out.append(m + height, 'D');
    return DyckPath(std::move(out));
}

DyckPath delete_first_peak(const DyckPath& p, int m)
{
    const auto& w = p.word();
    if (p.size() <= m)
        throw Error(ErrorKind::SizeTooSmall, "no peak can be removed from " + w);
    const int c1 = first_ascent(p);
    const int d1 = static_cast<int>(w.find('U', c1)) - c1;
    if (c1 < m || (d1 < m && d1 >= 0))
        throw Error(ErrorKind::NotInFamily, w + " has no first large peak");
    std::string out = w.substr(0, c1 - m);
    out += w.substr(c1 + m);
    return DyckPath(std::move(out));
}

DyckPath insert_first_peak(const DyckPath& p, int m, int height)
{
    const int c1 = first_ascent(p);
    if (height < 0 || height > c1)
        throw Error(ErrorKind::InvalidArgument, "insertion height outside the first ascent");
    const auto& w = p.word();
    std::string out = w.substr(0, height);
    out.append(m, 'U');
    out.append(m, 'D');
    out += w.substr(height);
    return DyckPath(std::move(out));
}

GTLabel interval_label(const Interval& iv, const PathFamily& f)
{
    const auto& st = iv.stats();
    if (f.is_mirrored())
        return {st.first_ascent_bottom, st.r};
    return {st.final_descent_bottom, st.final_descent_top};
}

namespace {

Point vertex_of(const GTLabel& l, const PathFamily& f)
{
    if (f.is_mirrored())
        return {l.a - f.m, l.b - 1};
    return {l.a - f.m, l.b - l.a};
}

Interval make_interval(DyckPath p, DyckPath q)
{
    try {
        return Interval(std::move(p), std::move(q));
    } catch (const Error& e) {
        throw InternalError(std::string("peak insertion broke the order: ") + e.what());
    }
}

}  // namespace

Walk interval_to_walk(const Interval& iv, const PathFamily& f)
{
    family_size(iv.bottom(), f);
    family_size(iv.top(), f);
    std::vector<GTLabel> labels;
    Interval cur = iv;
    while (true) {
        labels.push_back(interval_label(cur, f));
        if (cur.bottom().size() == f.m)
            break;
        if (f.is_mirrored())
            cur = make_interval(delete_first_peak(cur.bottom(), f.m), delete_first_peak(cur.top(), f.m));
        else
            cur = make_interval(delete_final_peak(cur.bottom(), f.m), delete_final_peak(cur.top(), f.m));
    }
    std::reverse(labels.begin(), labels.end());
    Walk w;
    for (std::size_t k = 1; k < labels.size(); ++k)
        w.steps.push_back(vertex_of(labels[k], f) - vertex_of(labels[k - 1], f));
    return w;
}

Interval walk_to_interval(const Walk& w, const PathFamily& f)
{
    const int m = f.m;
    const WalkSpec spec = walk_spec_for(f);
    std::string base(m, 'U');
    base.append(m, 'D');
    Interval cur{DyckPath{base}, DyckPath{base}};
    Point here{0, 0};
    for (std::size_t k = 0; k < w.steps.size(); ++k) {
        const Point step = w.steps[k];
        const Point next{here.first + step.first, here.second + step.second};
        if (!step_allowed(spec, step) || next.first < 0 || next.second < 0)
            throw Error(ErrorKind::IllegalStep, "step " + std::to_string(k + 1) + " (" + std::to_string(step.first) +
                                                    "," + std::to_string(step.second) + ") is not allowed here");
        const GTLabel label = interval_label(cur, f);
        const int a2 = next.first;
        int b2 = -1;
        if (!f.is_mirrored()) {
            b2 = next.first + next.second;
            bool keep = a2 == label.a && b2 == label.b;
            bool fresh = a2 < label.a && a2 <= b2 && b2 <= label.b;
            if (!keep && !fresh)
                throw InternalError("walk step allowed by the step set but not by the tree rule");
            cur = make_interval(insert_final_peak(cur.bottom(), m, a2), insert_final_peak(cur.top(), m, b2));
        } else {
            const auto parts = ascent_composition(cur.bottom()).parts;
            const int R = next.second + 1;
            auto partial = [&](int s) {
                int sum = 0;
                for (int i = 0; i < s; ++i)
                    sum += parts[i];
                return sum;
            };
            if (a2 == label.a && R >= 1 && R <= label.b)
                b2 = partial(R);
            else if (a2 < label.a && R == 1)
                b2 = a2;
            else if (a2 < label.a && R >= 2 && R <= label.b + 1)
                b2 = partial(R - 1);
            else
                throw InternalError("walk step allowed by the step set but not by the tree rule");
            cur = make_interval(insert_first_peak(cur.bottom(), m, a2), insert_first_peak(cur.top(), m, b2));
        }
        here = next;
    }
    return cur;
}

}  // namespace ascent
