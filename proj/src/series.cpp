#include "ascent/series.hpp"

namespace ascent {

TruncSeries solve_Z(int order)
{
    if (order < 1)
        throw Error(ErrorKind::InvalidArgument, "order must be positive");
    TruncSeries z(order);
    const TruncSeries t = TruncSeries::t(order);
    // Each pass fixes one more coefficient.
    for (int pass = 0; pass < order; ++pass) {
        TruncSeries w = z * mpq_class(2) + mpq_class(1);
        z = t * (z + mpq_class(1)) * w * w;
    }
    return z;
}

std::vector<mpz_class> gf_counts(int n_max)
{
    TruncSeries z = solve_Z(n_max);
    TruncSeries g = z * (poly_of(z, {1, -2, 0, 2}));
    std::vector<mpz_class> out;
    for (int n = 1; n <= n_max; ++n) {
        if (g[n].get_den() != 1)
            throw Error(ErrorKind::NonIntegerCoefficient, "coefficient of t^" + std::to_string(n) + " is " + g[n].get_str());
        out.push_back(g[n].get_num());
    }
    return out;
}

bool recurrence_check(const std::vector<mpz_class>& gs)
{
    if (gs.size() < 3)
        throw Error(ErrorKind::InvalidArgument, "need at least three terms");
    for (std::size_t i = 0; i + 2 < gs.size(); ++i) {
        const long n = static_cast<long>(i) + 1;
        mpz_class lhs = (n + 4) * (2 * n + 7) * gs[i + 2];
        mpz_class rhs = 2 * (11 * n * n + 44 * n + 42) * gs[i + 1] + n * (2 * n + 1) * gs[i];
        if (lhs != rhs)
            return false;
    }
    return true;
}

namespace {

constexpr int X = 0;
constexpr int Y = 1;

Poly2 mono(int i, int j) { return Poly2::monomial({i, j}); }

// Next coefficient of G_m from the previous one p (n >= 2):
//   x^m y^m [ p + (y A - B(xy)) / (y - 1) ],
//   A = (p - p(1,y)) / (x - 1),  B(z) = (p(z,1) - p(1,1)) / (z - 1).
Poly2 step_mdyck(const Poly2& p, int m)
{
    Poly2 a = (p - p.evaluate(X, 1)).divide_linear(X, 1);
    Poly2 q = p.evaluate(Y, 1);  // only x-exponents remain
    Poly2 b = (q - q.evaluate(X, 1)).divide_linear(X, 1);
    Poly2 b_xy;
    for (const auto& [e, c] : b.terms())
        b_xy.add_term({e[0], e[0]}, c);
    Poly2 inner = p + (mono(0, 1) * a - b_xy).divide_linear(Y, 1);
    return inner.shifted({m, m});
}

// Mirrored version:
//   x^m y [ (p - p(x,1)) / (y - 1) + (y A - C) / (y - 1) ],
//   A = (p - p(1,y)) / (x - 1),  C = (p(x,1) - p(1,1)) / (x - 1).
Poly2 step_mirrored(const Poly2& p, int m)
{
    Poly2 px1 = p.evaluate(Y, 1);
    Poly2 a = (p - p.evaluate(X, 1)).divide_linear(X, 1);
    Poly2 c = (px1 - px1.evaluate(X, 1)).divide_linear(X, 1);
    Poly2 inner = (p - px1).divide_linear(Y, 1) + (mono(0, 1) * a - c).divide_linear(Y, 1);
    return inner.shifted({m, 1});
}

}  // namespace

std::vector<Poly2> functional_equation_expand(const PathFamily& f, int n_max)
{
    if (n_max < 1)
        throw Error(ErrorKind::InvalidArgument, "order must be positive");
    const int m = f.m;
    std::vector<Poly2> out;
    out.push_back(f.is_mirrored() ? mono(m, 1) : mono(m, m));
    for (int n = 2; n <= n_max; ++n)
        out.push_back(f.is_mirrored() ? step_mirrored(out.back(), m) : step_mdyck(out.back(), m));
    return out;
}

}  // namespace ascent
