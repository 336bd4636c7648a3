#include <cmath>
#include <numbers>

#include "ascent/counting.hpp"
#include "ascent/series.hpp"

namespace ascent {

namespace {

// Step generating functions of the infinite step sets.
double step_gf(const PathFamily& f, double x, double y)
{
    const double xm = std::pow(x, f.m);
    if (f.is_mirrored())
        return xm * y * (x + y - 1) / ((x - 1) * (y - 1));
    return xm * (x * y - x + y) / ((x - y) * (y - 1));
}

double log_of(const mpz_class& g)
{
    long exp = 0;
    double mant = mpz_get_d_2exp(&exp, g.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

}  // namespace

AsymptoticData asymptotics(const PathFamily& f)
{
    const double m = f.m;
    AsymptoticData d;
    if (!f.is_mirrored()) {
        const double r = std::sqrt(m * m + 4);
        d.x0 = (2 + r) / m;
        d.y0 = m / 2 * (d.x0 - 1);
        d.mu = (m * r + m * m + 2) / 2 * std::pow(d.x0, m);
        d.c = -std::sqrt((m * m + 2 - r) / (2 * m * m + 6));
        if (!(1 < d.y0 && d.y0 < d.x0))
            throw InternalError("critical point outside 1 < y0 < x0");
    } else {
        const double r = std::sqrt(4 * m * m + 1);
        d.x0 = (2 * m * m + 1 + r) / (2 * m * m);
        d.y0 = 1 + m * (d.x0 - 1);
        d.mu = (2 * m + r) * std::pow((1 + r) / (2 * m), 2 * m);
        d.c = -std::sqrt((1 + 2 * m * m - m * r) / (2 * (3 * m * m + 1)));
        if (!(1 < d.x0 && 1 < d.y0))
            throw InternalError("critical point outside 1 < x0, 1 < y0");
    }
    d.alpha = -1 - std::numbers::pi / std::acos(-d.c);
    return d;
}

double correlation_from_derivatives(const PathFamily& f)
{
    const auto d = asymptotics(f);
    const double h = 1e-4;
    const double x = d.x0, y = d.y0;
    auto s = [&](double a, double b) { return step_gf(f, a, b); };
    const double sxx = (s(x + h, y) - 2 * s(x, y) + s(x - h, y)) / (h * h);
    const double syy = (s(x, y + h) - 2 * s(x, y) + s(x, y - h)) / (h * h);
    const double sxy = (s(x + h, y + h) - s(x + h, y - h) - s(x - h, y + h) + s(x - h, y - h)) / (4 * h * h);
    return sxy / std::sqrt(sxx * syy);
}

GrowthFit empirical_growth(const std::vector<mpz_class>& gs, double mu)
{
    const int n_max = static_cast<int>(gs.size());
    if (n_max < 30)
        throw Error(ErrorKind::InvalidArgument, "need at least 30 terms for a fit");
    GrowthFit fit;

    // ratio(n) = g(n+1)/g(n) ~ mu (1 + a/n + b/n^2); depth-2 Richardson at the tail.
    auto ratio = [&](int n) { return std::exp(log_of(gs[n]) - log_of(gs[n - 1])); };
    const int n = n_max - 3;
    const double r0 = ratio(n), r1 = ratio(n + 1), r2 = ratio(n + 2);
    const double nn = n;
    fit.mu_hat = ((nn + 2) * (nn + 2) * r2 - 2 * (nn + 1) * (nn + 1) * r1 + nn * nn * r0) / 2;

    // log(g(n)/mu^n) = log kappa + alpha log n + beta / n, over the upper half.
    double ata[3][3] = {};
    double atb[3] = {};
    for (int k = n_max / 2; k <= n_max; ++k) {
        const double row[3] = {1.0, std::log(double(k)), 1.0 / k};
        const double rhs = log_of(gs[k - 1]) - k * std::log(mu);
        for (int i = 0; i < 3; ++i) {
            atb[i] += row[i] * rhs;
            for (int j = 0; j < 3; ++j)
                ata[i][j] += row[i] * row[j];
        }
    }
    // 3x3 Gaussian elimination with partial pivoting.
    double sol[3];
    for (int col = 0; col < 3; ++col) {
        int piv = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(ata[r][col]) > std::fabs(ata[piv][col]))
                piv = r;
        std::swap(ata[col], ata[piv]);
        std::swap(atb[col], atb[piv]);
        for (int r = col + 1; r < 3; ++r) {
            const double factor = ata[r][col] / ata[col][col];
            for (int j = col; j < 3; ++j)
                ata[r][j] -= factor * ata[col][j];
            atb[r] -= factor * atb[col];
        }
    }
    for (int i = 2; i >= 0; --i) {
        double acc = atb[i];
        for (int j = i + 1; j < 3; ++j)
            acc -= ata[i][j] * sol[j];
        sol[i] = acc / ata[i][i];
    }
    fit.kappa_hat = std::exp(sol[0]);
    fit.alpha_hat = sol[1];
    return fit;
}

GrowthFit empirical_growth(const PathFamily& f, int n_max)
{
    const double mu = asymptotics(f).mu;
    if (f.kind == FamilyKind::Plain || (f.m == 1 && f.kind == FamilyKind::MDyck))
        return empirical_growth(gf_counts(n_max), mu);
    return empirical_growth(gt_count_sequence(f, n_max), mu);
}

double kappa_plain()
{
    return 3.0 / 8.0 * std::sqrt((275 + 123 * std::sqrt(5.0)) / (10 * std::numbers::pi));
}

}  // namespace ascent
