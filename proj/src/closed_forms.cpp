#include "ascent/series.hpp"

#include <functional>

namespace ascent {

namespace {

// Shared building blocks at one working order.
struct Ring {
    int order;
    TruncSeries z;
    PolySeries one, x, Z;

    explicit Ring(int working_order)
        : order(working_order),
          z(solve_Z(working_order)),
          one(PolySeries::constant(working_order, Poly1(1))),
          x(PolySeries::constant(working_order, Poly1::var(0))),
          Z(lift<1>(z))
    {
    }

    // Polynomial in Z with integer coefficients, low degree first.
    PolySeries P(const std::vector<long>& c) const { return lift<1>(poly_of(z, c)); }
    PolySeries xp(int k) const { return x.pow(k); }
};

PolySeries map_coeffs(const PolySeries& s, const std::function<Poly1(const Poly1&)>& fn)
{
    PolySeries out(s.order());
    for (int n = 0; n <= s.order(); ++n)
        out[n] = fn(s[n]);
    return out;
}

// Divide by Z^k = t^k (Z/t)^k, losing k orders.
PolySeries divide_by_Z(const PolySeries& num, const TruncSeries& z, int k)
{
    const int out_order = num.order() - k;
    TruncSeries zeta = z.divide_by_t(1).truncated(out_order);
    return num.divide_by_t(k) / lift<1>(zeta.pow(k));
}

}  // namespace

PolySeries closed_form_G_x1(int order)
{
    Ring r(order + 2);
    const auto& x = r.x;
    PolySeries w = r.P({1, 2}).pow(2);  // (1+2Z)^2
    PolySeries a = r.P({1, 1});         // 1+Z
    PolySeries delta1 = (a - x * r.Z) * (w * a - x * r.Z);
    PolySeries c1 = (x - r.one) * (w - x * r.Z * mpq_class(2)) * (a * r.P({1, 2}) * mpq_class(2) - x);
    PolySeries c0 = -(a.pow(2) * w.pow(2) * mpq_class(2)) + a * w * r.P({1, 6, 8, 4}) * x * mpq_class(3) -
                    r.P({1, 16, 70, 134, 132, 64, 12}) * r.xp(2) + r.Z * r.P({3, 16, 24, 12}) * r.xp(3) -
                    r.Z.pow(2) * r.xp(4) * mpq_class(2);
    PolySeries num = c0 - c1 * delta1.sqrt();
    PolySeries g = divide_by_Z(num, r.z, 2);
    return map_coeffs(g, [](const Poly1& p) { return p.divide_by_power(0, 2) * mpq_class(1, 2); });
}

PolySeries closed_form_G_1y(int order)
{
    Ring r(order + 1);
    const auto& y = r.x;
    PolySeries w = r.P({1, 2});  // 1+2Z
    PolySeries a = r.P({1, 1});
    PolySeries delta2 = w.pow(2) - y * r.Z * a * mpq_class(4);
    PolySeries d1 = (w - y) * (a * mpq_class(2) - y * w);
    PolySeries d0 = -(r.Z * r.xp(3) * mpq_class(2)) + r.P({1, 10, 8, 4}) * r.xp(2) - r.P({3, 16, 24, 12}) * y +
                    w.pow(2) * a * mpq_class(2);
    PolySeries num = d0 - d1 * delta2.sqrt();
    PolySeries g = divide_by_Z(num, r.z, 1);
    return map_coeffs(g, [](const Poly1& p) {
        return p.divide_by_power(0, 1).divide_linear(0, 1).divide_linear(0, 1) * mpq_class(1, 2);
    });
}

PolySeries closed_form_Gp_x1(int order)
{
    Ring r(order + 2);
    const auto& x = r.x;
    const auto& Z = r.Z;
    PolySeries w = r.P({1, 2});
    PolySeries a = r.P({1, 1});
    PolySeries delta = a.pow(2) * w.pow(2) - Z * a * r.P({1, 4, 2}) * x * mpq_class(2) + Z.pow(2) * r.xp(2);
    PolySeries c1 = (w.pow(2) - Z.pow(2) * x * mpq_class(2) - Z * r.xp(2)) *
                    (a * w - a.pow(2) * x * mpq_class(2) + r.xp(2));
    PolySeries c0 = a.pow(2) * w.pow(4) - a * w.pow(2) * r.P({2, 9, 16, 8}) * x - Z * a * w.pow(2) * r.xp(4) +
                    Z.pow(2) * r.xp(5) + a * r.P({1, 7, 25, 48, 46, 18}) * r.xp(2) -
                    Z * r.P({-1, -3, -7, -6, 0, 2}) * r.xp(3);
    PolySeries num = c0 - c1 * delta.sqrt();
    PolySeries g = divide_by_Z(num, r.z, 2);
    // 1 - x = -(x - 1)
    return map_coeffs(g, [](const Poly1& p) {
        return p.divide_by_power(0, 3).divide_linear(0, 1) * mpq_class(-1, 2);
    });
}

PolySeries parametrized_G_x1(int order)
{
    Ring r(order);
    const auto& Z = r.Z;
    PolySeries a = r.P({1, 1});
    PolySeries u(order);
    for (int pass = 0; pass < order; ++pass)
        u = r.x * Z * (r.one + u) / (a * (r.P({1, 2}) - Z.pow(2) * u));
    PolySeries p = Z.pow(6) * a * u.pow(3) * mpq_class(2) + Z.pow(4) * r.P({-5, -8, 4, 8}) * u.pow(2) +
                   Z.pow(2) * r.P({4, 9, -5, -20, -6, 6}) * u - r.P({1, 2}) * r.P({1, 1, -3, -2, 4, 4});
    // p(0, 0) = -1, so the quotient as written is -G(x,1).
    return -(u * a * p / (r.P({1, 2}) - Z.pow(2) * u).pow(2));
}

PolySeries parametrized_G_1y(int order)
{
    Ring r(order);
    const auto& Z = r.Z;
    PolySeries a = r.P({1, 1});
    PolySeries v(order);
    for (int pass = 0; pass < order; ++pass)
        v = r.x * Z * a * (r.one + v).pow(2) / r.P({1, 2}).pow(2);
    PolySeries num = Z.pow(2) * a.pow(2) * v.pow(2) * mpq_class(2) + Z * r.P({-3, -4, 4, 4}) * v +
                     a * r.P({1, 0, -2, 2});
    return v * num / (a - Z * v).pow(2);
}

PolySeries parametrized_Gp_x1(int order)
{
    Ring r(order);
    const auto& Z = r.Z;
    PolySeries a = r.P({1, 1});
    PolySeries b = r.P({1, 3, 1});  // 1+3Z+Z^2
    PolySeries tx = r.x.times_t(1);
    PolySeries u(order);
    for (int pass = 0; pass < order; ++pass)
        u = tx * (r.one + u) * (b + Z * a * u);
    PolySeries p = -(Z.pow(7) * a.pow(3) * u.pow(4)) - Z.pow(5) * a.pow(2) * r.P({-2, -4, 3, 2}) * u.pow(3) +
                   Z.pow(3) * a * r.P({-1, 0, 24, 62, 49, 13}) * u.pow(2) +
                   Z.pow(2) * r.P({-4, -31, -80, -48, 120, 221, 140, 35, 2}) * u +
                   b * r.P({1, 6, 9, -7, -19, 10, 31, 15, 1});
    return tx * (r.one + u) * p / (r.P({1, 2}).pow(2) * (b - Z.pow(2) * u));
}

}  // namespace ascent
