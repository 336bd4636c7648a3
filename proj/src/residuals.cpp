#include "ascent/series.hpp"

namespace ascent {

namespace {

constexpr int T = 0;
constexpr int X = 1;
constexpr int Y = 2;

RationalFunction v(int i) { return RationalFunction(Poly3::var(i)); }
RationalFunction c(long k) { return RationalFunction(Poly3(mpq_class(k))); }

// Pol2(q, q1, y, t) with q = Q(y,y) = G(1,y)/(ty) and q1 = Q(1,1) = G(1,1)/t.
bool pol2_vanishes(int order)
{
    PolySeries g1y = closed_form_G_1y(order + 1);
    PolySeries q = g1y.divide_by_t(1);
    for (int n = 0; n <= q.order(); ++n)
        q[n] = q[n].divide_by_power(0, 1);

    TruncSeries z = solve_Z(order + 1);
    TruncSeries g11 = z * poly_of(z, {1, -2, 0, 2});
    PolySeries q1 = lift<1>(g11.divide_by_t(1));

    const Poly1 y = Poly1::var(0);
    const Poly1 ym1 = y - Poly1(1);
    const Poly1 ym2 = y - Poly1(2);
    PolySeries res = (q * q).times(y * y * ym1 * ym1).times_t(2) +
                     q.times(y * (mpq_class(2) * y * y - mpq_class(5) * y + Poly1(1))).times_t(1) -
                     q.times(ym1 * ym2) + (q1 * mpq_class(2)).times_t(1) +
                     PolySeries::constant(order, ym1 * ym2);
    return res.valuation() > order;
}

bool q11_cubic_vanishes(int order)
{
    TruncSeries z = solve_Z(order + 1);
    TruncSeries q = (z * poly_of(z, {1, -2, 0, 2})).divide_by_t(1);
    const TruncSeries t = TruncSeries::t(order);
    auto tp = [&](int k) { return t.pow(k); };
    auto poly_t = [&](const std::vector<long>& coeffs) { return poly_of(t, coeffs); };
    TruncSeries res = tp(6) * q.pow(3) * mpq_class(64) + tp(3) * poly_t({-1, -18, 11}) * q.pow(2) * mpq_class(16) +
                      poly_t({1, -28, 238, -452, 161}) * q + poly_t({-1, 25, -167, 49});
    return res.valuation() > order;
}

RationalFunction kernel()
{
    auto t = v(T), x = v(X), y = v(Y);
    return c(1) - t * x - t * x * y * y / ((x - y) * (y - c(1)));
}

bool ratio0_holds()
{
    auto t = v(T), x = v(X), y = v(Y);
    auto one = c(1);
    RationalFunction i0 = one / (one - t * x) - one / (t * x * x) + (one + t) / (t * x) + x * (one - t) - t * x * x;
    RationalFunction j0 = (c(0) - t) / ((y - one) * (y - one)) + (one - t) / (y - one) - one / (t * y * y) +
                          (one + t) / (y * t) + y;
    RationalFunction rhs = (x - y) * (one - y + t * x * y) * (x + y - x * y - x * y * t * (one + x - x * y)) /
                           (x * x * y * y * t * (x * t - one) * (y - one));
    return same_function((i0 - j0) / kernel(), rhs);
}

bool decoupling_holds()
{
    auto t = v(T), x = v(X), y = v(Y);
    auto one = c(1);
    RationalFunction a = (c(2) + x) / t + one / (t * t * x) + one / (t * (t * x - one));
    RationalFunction b = c(0) - y / t + one / (t * (y - one)) - one / (t * t * y);
    RationalFunction lhs = x * (y - one) / (one - t * x);
    RationalFunction rhs = a + b + kernel() * (x - y) * (one - t * x * y) / (x * y * t * t * (one - t * x));
    return same_function(lhs, rhs);
}

}  // namespace

ResidualReport catalytic_residuals(int order, int cubic_order)
{
    if (order < 1 || cubic_order < 1)
        throw Error(ErrorKind::InvalidArgument, "order must be positive");
    ResidualReport r;
    r.pol2_residual_zero = pol2_vanishes(order);
    r.q11_cubic_residual_zero = q11_cubic_vanishes(cubic_order);
    r.invariant_ratio0_zero = ratio0_holds();
    r.decoupling_zero = decoupling_holds();
    return r;
}

}  // namespace ascent
