#pragma once

// Sparse multivariate polynomials with exact rational coefficients.
// MPoly<1> is univariate in x, MPoly<2> uses (x, y), MPoly<3> uses (t, x, y).

#include <algorithm>
#include <array>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "ascent/error.hpp"

namespace ascent {

template <int N>
class MPoly {
public:
    using Exponent = std::array<int, N>;
    using Terms = std::map<Exponent, mpq_class>;

    MPoly() = default;
    MPoly(const mpq_class& c)  // NOLINT: constants convert implicitly
    {
        if (c != 0)
            terms_[Exponent{}] = c;
    }
    MPoly(int c) : MPoly(mpq_class(c)) {}

    static MPoly monomial(const Exponent& e, const mpq_class& c = 1)
    {
        MPoly p;
        if (c != 0)
            p.terms_[e] = c;
        return p;
    }
    // The variable with index v.
    static MPoly var(int v)
    {
        Exponent e{};
        e[v] = 1;
        return monomial(e);
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    mpq_class coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpq_class(0) : it->second;
    }

    void add_term(const Exponent& e, const mpq_class& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    std::optional<mpq_class> constant_value() const
    {
        if (terms_.empty())
            return mpq_class(0);
        if (terms_.size() == 1 && terms_.begin()->first == Exponent{})
            return terms_.begin()->second;
        return std::nullopt;
    }

    int degree(int v) const
    {
        int d = -1;
        for (const auto& [e, c] : terms_)
            d = std::max(d, e[v]);
        return d;
    }

    MPoly& operator+=(const MPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }
    MPoly& operator-=(const MPoly& o)
    {
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }
    MPoly& operator*=(const mpq_class& s)
    {
        if (s == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a)
    {
        for (auto& [e, c] : a.terms_)
            c = -c;
        return a;
    }
    friend MPoly operator*(MPoly a, const mpq_class& s) { return a *= s; }
    friend MPoly operator*(const mpq_class& s, MPoly a) { return a *= s; }
    friend MPoly operator*(const MPoly& a, const MPoly& b)
    {
        MPoly out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponent e;
                for (int i = 0; i < N; ++i)
                    e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        return out;
    }
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

    bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

    MPoly pow(int k) const
    {
        MPoly out(1);
        for (int i = 0; i < k; ++i)
            out *= *this;
        return out;
    }

    // Multiply by the monomial with exponent e.
    MPoly shifted(const Exponent& e) const
    {
        MPoly out;
        for (const auto& [ex, c] : terms_) {
            Exponent f;
            for (int i = 0; i < N; ++i)
                f[i] = ex[i] + e[i];
            out.terms_.emplace(f, c);
        }
        return out;
    }

    // Exact division by var(v)^k.
    MPoly divide_by_power(int v, int k) const
    {
        MPoly out;
        for (const auto& [ex, c] : terms_) {
            if (ex[v] < k)
                throw Error(ErrorKind::DivisionFailure, "monomial division leaves a remainder");
            Exponent f = ex;
            f[v] -= k;
            out.terms_.emplace(f, c);
        }
        return out;
    }

    // Substitute var(v) = a.
    MPoly evaluate(int v, const mpq_class& a) const
    {
        MPoly out;
        for (const auto& [ex, c] : terms_) {
            Exponent f = ex;
            f[v] = 0;
            mpq_class p = 1;
            for (int i = 0; i < ex[v]; ++i)
                p *= a;
            out.add_term(f, c * p);
        }
        return out;
    }

    // Exact synthetic division by (var(v) - a); DivisionFailure on a remainder.
    MPoly divide_linear(int v, const mpq_class& a) const
    {
        // Group by the exponents of the other variables.
        std::map<Exponent, std::map<int, mpq_class>> groups;
        for (const auto& [ex, c] : terms_) {
            Exponent rest = ex;
            rest[v] = 0;
            groups[rest][ex[v]] = c;
        }
        MPoly out;
        for (const auto& [rest, row] : groups) {
            int top = row.rbegin()->first;
            mpq_class carry = 0;
            for (int d = top; d >= 1; --d) {
                auto it = row.find(d);
                carry = (it == row.end() ? mpq_class(0) : it->second) + a * carry;
                Exponent e = rest;
                e[v] = d - 1;
                out.add_term(e, carry);
            }
            auto it0 = row.find(0);
            mpq_class rem = (it0 == row.end() ? mpq_class(0) : it0->second) + a * carry;
            if (rem != 0)
                throw Error(ErrorKind::DivisionFailure, "polynomial is not divisible by a linear factor");
        }
        return out;
    }

    MPoly swapped(int v, int w) const
    {
        MPoly out;
        for (const auto& [ex, c] : terms_) {
            Exponent f = ex;
            std::swap(f[v], f[w]);
            out.terms_.emplace(f, c);
        }
        return out;
    }

    // Total of all coefficients, i.e. the value at (1, ..., 1).
    mpq_class sum() const
    {
        mpq_class s = 0;
        for (const auto& [e, c] : terms_)
            s += c;
        return s;
    }

    // Human-readable form; vars names the variables in index order.
    std::string to_string(const std::array<const char*, N>& vars) const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            mpq_class mag = abs(c);
            bool constant = e == Exponent{};
            out += c < 0 ? (out.empty() ? "-" : " - ") : (out.empty() ? "" : " + ");
            bool need_coeff = constant || mag != 1;
            if (need_coeff)
                out += mag.get_str();
            bool first_var = true;
            for (int i = 0; i < N; ++i) {
                if (e[i] == 0)
                    continue;
                if (need_coeff || !first_var)
                    out += "*";
                out += vars[i];
                if (e[i] > 1)
                    out += "^" + std::to_string(e[i]);
                first_var = false;
            }
        }
        return out;
    }

private:
    Terms terms_;
};

using Poly1 = MPoly<1>;
using Poly2 = MPoly<2>;
using Poly3 = MPoly<3>;

// Fractions of (t, x, y) polynomials; identities are decided by cross-multiplying.
struct RationalFunction {
    Poly3 num;
    Poly3 den{1};

    RationalFunction() = default;
    RationalFunction(Poly3 n, Poly3 d = Poly3(1)) : num(std::move(n)), den(std::move(d))
    {
        if (den.is_zero())
            throw Error(ErrorKind::DivisionFailure, "zero denominator");
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den == b.den)
            return {a.num + b.num, a.den};
        return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den == b.den)
            return {a.num - b.num, a.den};
        return {a.num * b.den - b.num * a.den, a.den * b.den};
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num * b.num, a.den * b.den};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.num.is_zero())
            throw Error(ErrorKind::DivisionFailure, "division by the zero function");
        return {a.num * b.den, a.den * b.num};
    }
    bool is_zero() const { return num.is_zero(); }
};

inline bool same_function(const RationalFunction& a, const RationalFunction& b)
{
    return (a.num * b.den - b.num * a.den).is_zero();
}

}  // namespace ascent
