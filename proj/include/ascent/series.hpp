#pragma once

// Truncated power series in t. Coefficients are exact rationals (TruncSeries)
// or polynomials in x and possibly y (PolySeries, PolySeries2).

#include <string>
#include <vector>

#include <gmpxx.h>

#include "ascent/error.hpp"
#include "ascent/paths.hpp"
#include "ascent/polynomial.hpp"

namespace ascent {

namespace detail {

inline std::optional<mpq_class> scalar_of(const mpq_class& c) { return c; }
template <int N>
std::optional<mpq_class> scalar_of(const MPoly<N>& c)
{
    return c.constant_value();
}

}  // namespace detail

template <class C>
class Series {
public:
    Series() = default;
    explicit Series(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {}
    Series(int order, std::vector<C> coeffs) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(static_cast<std::size_t>(order) + 1);
    }

    static Series constant(int order, const C& c)
    {
        Series s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static Series t(int order)
    {
        Series s(order);
        if (order >= 1)
            s.coeffs_[1] = C(1);
        return s;
    }

    int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const C& operator[](int n) const { return coeffs_[n]; }
    C& operator[](int n) { return coeffs_[n]; }
    const std::vector<C>& coeffs() const noexcept { return coeffs_; }

    Series truncated(int order) const
    {
        Series s(order);
        for (int n = 0; n <= std::min(order, this->order()); ++n)
            s.coeffs_[n] = coeffs_[n];
        return s;
    }

    Series& operator+=(const Series& o)
    {
        check(o);
        for (int n = 0; n <= order(); ++n)
            coeffs_[n] += o.coeffs_[n];
        return *this;
    }
    Series& operator-=(const Series& o)
    {
        check(o);
        for (int n = 0; n <= order(); ++n)
            coeffs_[n] -= o.coeffs_[n];
        return *this;
    }
    Series& operator*=(const mpq_class& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        return *this;
    }
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator-(Series a) { return a *= mpq_class(-1); }
    friend Series operator*(Series a, const mpq_class& s) { return a *= s; }
    friend Series operator*(const mpq_class& s, Series a) { return a *= s; }

    friend Series operator+(Series a, const C& c)
    {
        a.coeffs_[0] += c;
        return a;
    }
    friend Series operator+(const C& c, Series a) { return std::move(a) + c; }
    friend Series operator-(Series a, const C& c)
    {
        a.coeffs_[0] -= c;
        return a;
    }
    friend Series operator-(const C& c, Series a) { return -std::move(a) + c; }

    friend Series operator*(const Series& a, const Series& b)
    {
        a.check(b);
        const int N = a.order();
        Series out(N);
        for (int i = 0; i <= N; ++i) {
            if (is_zero_coeff(a.coeffs_[i]))
                continue;
            for (int j = 0; i + j <= N; ++j)
                if (!is_zero_coeff(b.coeffs_[j]))
                    out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    // Multiply every coefficient by a t-free factor.
    Series times(const C& c) const
    {
        Series out(order());
        for (int n = 0; n <= order(); ++n)
            out.coeffs_[n] = coeffs_[n] * c;
        return out;
    }

    Series pow(int k) const
    {
        Series out = constant(order(), C(1));
        for (int i = 0; i < k; ++i)
            out *= *this;
        return out;
    }

    Series inverse() const
    {
        auto c0 = detail::scalar_of(coeffs_[0]);
        if (!c0 || *c0 == 0)
            throw Error(ErrorKind::NonInvertibleConstant, "constant term is not an invertible scalar");
        const mpq_class inv0 = 1 / *c0;
        Series out(order());
        out.coeffs_[0] = C(inv0);
        for (int n = 1; n <= order(); ++n) {
            C acc;
            for (int k = 1; k <= n; ++k)
                if (!is_zero_coeff(coeffs_[k]))
                    acc += coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = acc * mpq_class(-inv0);
        }
        return out;
    }
    friend Series operator/(const Series& a, const Series& b) { return a * b.inverse(); }

    // Square root of a series with constant term 1.
    Series sqrt() const
    {
        auto c0 = detail::scalar_of(coeffs_[0]);
        if (!c0 || *c0 != 1)
            throw Error(ErrorKind::BadSqrtConstant, "square root needs constant term 1");
        Series out(order());
        out.coeffs_[0] = C(1);
        const mpq_class half(1, 2);
        for (int n = 1; n <= order(); ++n) {
            C acc = coeffs_[n];
            for (int k = 1; k < n; ++k)
                acc -= out.coeffs_[k] * out.coeffs_[n - k];
            out.coeffs_[n] = acc * half;
        }
        return out;
    }

    // this(g) for g without constant term.
    Series compose(const Series& g) const
    {
        check(g);
        if (!is_zero_coeff(g.coeffs_[0]))
            throw Error(ErrorKind::InvalidArgument, "inner series must have zero constant term");
        Series out = constant(order(), coeffs_[order()]);
        for (int k = order() - 1; k >= 0; --k)
            out = out * g + coeffs_[k];
        return out;
    }

    // Exact division by t^k: the first k coefficients must vanish.
    Series divide_by_t(int k) const
    {
        Series out(order() - k);
        for (int n = 0; n < k; ++n)
            if (!is_zero_coeff(coeffs_[n]))
                throw Error(ErrorKind::DivisionFailure, "series does not vanish to order t^" + std::to_string(k));
        for (int n = k; n <= order(); ++n)
            out.coeffs_[n - k] = coeffs_[n];
        return out;
    }
    Series times_t(int k = 1) const
    {
        Series out(order());
        for (int n = 0; n + k <= order(); ++n)
            out.coeffs_[n + k] = coeffs_[n];
        return out;
    }

    // Index of the first nonzero coefficient, or order()+1 when all vanish.
    int valuation() const
    {
        for (int n = 0; n <= order(); ++n)
            if (!is_zero_coeff(coeffs_[n]))
                return n;
        return order() + 1;
    }

    bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

private:
    static bool is_zero_coeff(const mpq_class& c) { return c == 0; }
    template <int N>
    static bool is_zero_coeff(const MPoly<N>& c)
    {
        return c.is_zero();
    }

    void check(const Series& o) const
    {
        if (o.order() != order())
            throw InternalError("series orders differ: " + std::to_string(order()) + " vs " +
                                std::to_string(o.order()));
    }

    std::vector<C> coeffs_;
};

using TruncSeries = Series<mpq_class>;
using PolySeries = Series<Poly1>;   // coefficients in Q[x]
using PolySeries2 = Series<Poly2>;  // coefficients in Q[x, y]

// Lift a rational series into a polynomial one.
template <int N>
Series<MPoly<N>> lift(const TruncSeries& s)
{
    std::vector<MPoly<N>> c;
    c.reserve(s.order() + 1);
    for (const auto& q : s.coeffs())
        c.emplace_back(q);
    return Series<MPoly<N>>(s.order(), std::move(c));
}

// Evaluate a polynomial in one series, with integer coefficients low degree first.
template <class C>
Series<C> poly_of(const Series<C>& z, const std::vector<long>& coeffs)
{
    Series<C> out(z.order());
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        out = out * z + C(mpq_class(*it));
    return out;
}

// Z = t(1+Z)(1+2Z)^2, solved to order N.
TruncSeries solve_Z(int order);

// g(1..N) read off Z(1-2Z+2Z^3); NonIntegerCoefficient if a denominator survives.
std::vector<mpz_class> gf_counts(int n_max);

// The three-term recurrence for g(n); needs at least 3 values, gs[0] = g(1).
bool recurrence_check(const std::vector<mpz_class>& gs);

// Coefficients G_1..G_N of G_m(t;x,y) or G'_m(t;x,y), by t-adic iteration of
// the functional equation. Entry n-1 holds the coefficient of t^n.
std::vector<Poly2> functional_equation_expand(const PathFamily& f, int n_max);

// Closed forms for m = 1, as series in t with coefficients in Q[x] (resp. Q[y]).
PolySeries closed_form_G_x1(int order);
PolySeries closed_form_G_1y(int order);
PolySeries closed_form_Gp_x1(int order);

// The same three series through their rational parametrizations.
PolySeries parametrized_G_x1(int order);
PolySeries parametrized_G_1y(int order);
PolySeries parametrized_Gp_x1(int order);

struct ResidualReport {
    bool pol2_residual_zero = false;
    bool q11_cubic_residual_zero = false;
    bool invariant_ratio0_zero = false;
    bool decoupling_zero = false;
};

// Pol2 is checked mod t^(order+1), the Q11 cubic mod t^(cubic_order+1).
ResidualReport catalytic_residuals(int order, int cubic_order = 30);

struct AsymptoticData {
    double mu = 0;
    double c = 0;
    double alpha = 0;
    double x0 = 0;
    double y0 = 0;
};

AsymptoticData asymptotics(const PathFamily& f);

// c recomputed from the second derivatives of the step generating function
// at (x0, y0), by central differences.
double correlation_from_derivatives(const PathFamily& f);

struct GrowthFit {
    double mu_hat = 0;
    double alpha_hat = 0;
    double kappa_hat = 0;
};

// Fits on g(1..n_max): Richardson-extrapolated ratios for mu, and a least
// squares fit of log(g(n)/mu^n) against (1, log n, 1/n) for alpha.
GrowthFit empirical_growth(const std::vector<mpz_class>& gs, double mu);
GrowthFit empirical_growth(const PathFamily& f, int n_max);

// Exact m = 1 constant of the leading term.
double kappa_plain();

}  // namespace ascent
