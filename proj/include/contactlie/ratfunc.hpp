#pragma once

#include "contactlie/laurent.hpp"
#include "contactlie/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace contactlie {

namespace detail {

inline MultiPoly monic(const MultiPoly& p)
{
    if (p.is_zero()) return p;
    return p * p.leading_term().second.inverse();
}

inline MultiPoly variable_power(const std::string& x, long k)
{
    return MultiPoly::variable(x).pow(static_cast<unsigned>(k));
}

/// lc(b)^(deg a - deg b + 1) * a reduced modulo b, viewing both as
/// polynomials in x.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, const std::string& x)
{
    const long db = b.degree_in(x);
    const MultiPoly lcb = b.coefficients_in(x).rbegin()->second;
    while (!a.is_zero() && a.degree_in(x) >= db) {
        const long da = a.degree_in(x);
        const MultiPoly lca = a.coefficients_in(x).rbegin()->second;
        a = lcb * a - lca * variable_power(x, da - db) * b;
    }
    return a;
}

}  // namespace detail

inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

namespace detail {

/// gcd of the coefficients of p as a polynomial in x.
inline MultiPoly content_in(const MultiPoly& p, const std::string& x)
{
    MultiPoly g;
    for (const auto& [k, c] : p.coefficients_in(x)) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) return MultiPoly(1);
    }
    return g;
}

inline MultiPoly primitive_part(const MultiPoly& p, const std::string& x)
{
    if (p.is_zero()) return p;
    MultiPoly c = content_in(p, x);
    auto q = divide_exact(p, c);
    if (!q) throw std::logic_error("content does not divide polynomial");
    return *q;
}

}  // namespace detail

/// Monic greatest common divisor over Q(i), by recursive primitive
/// polynomial remainder sequences.
inline MultiPoly gcd(const MultiPoly& a, const MultiPoly& b)
{
    if (a.is_zero()) return detail::monic(b);
    if (b.is_zero()) return detail::monic(a);
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);

    std::string x;
    for (const auto& v : a.support()) {
        x = v;
        break;
    }
    if (x.empty()) return MultiPoly(1);
    if (b.degree_in(x) == 0) return gcd(b, detail::content_in(a, x));

    MultiPoly ca = detail::content_in(a, x);
    MultiPoly cb = detail::content_in(b, x);
    MultiPoly r0 = *divide_exact(a, ca);
    MultiPoly r1 = *divide_exact(b, cb);
    if (r0.degree_in(x) < r1.degree_in(x)) std::swap(r0, r1);
    while (!r1.is_zero()) {
        MultiPoly r = detail::pseudo_remainder(r0, r1, x);
        r0 = std::move(r1);
        r1 = detail::primitive_part(r, x);
    }
    MultiPoly g = r0.degree_in(x) == 0 ? MultiPoly(1) : detail::primitive_part(r0, x);
    return detail::monic(gcd(ca, cb) * g);
}

/// num/den in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(const Scalar& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : RationalFunction(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(const MultiPoly& p) : num_(p), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        normalize();
    }

    /// Negative fiber powers move into the denominator.
    static RationalFunction from_laurent(const LaurentPoly& p)
    {
        if (!p.has_negative_powers()) return RationalFunction(p.to_poly());
        const int shift = -p.min_fiber_degree();
        LaurentPoly lifted = p * LaurentPoly::fiber_power(p.fiber(), shift);
        return RationalFunction(lifted.to_poly(), MultiPoly::variable(p.fiber()).pow(static_cast<unsigned>(shift)));
    }

    static RationalFunction variable(const std::string& name) { return RationalFunction(MultiPoly::variable(name)); }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    RationalFunction inverse() const
    {
        if (is_zero()) throw std::domain_error("inverse of zero rational function");
        return RationalFunction(den_, num_);
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        return a * b.inverse();
    }
    RationalFunction operator-() const
    {
        RationalFunction out = *this;
        out.num_ = -out.num_;
        return out;
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction pow(int k) const
    {
        if (k < 0) return inverse().pow(-k);
        return RationalFunction(num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)));
    }

    RationalFunction derivative(std::string_view name) const
    {
        MultiPoly dn = num_.derivative_or_zero(name);
        MultiPoly dd = den_.derivative_or_zero(name);
        if (dd.is_zero()) return RationalFunction(dn, den_);
        return RationalFunction(dn * den_ - num_ * dd, den_ * den_);
    }

    RationalFunction substitute(const std::map<std::string, RationalFunction>& bindings) const
    {
        return apply(num_, bindings) / apply(den_, bindings);
    }

    Scalar evaluate(const std::map<std::string, Scalar>& point) const
    {
        Scalar d = den_.evaluate(point);
        if (d.is_zero()) throw std::domain_error("rational function evaluated on its pole set");
        return num_.evaluate(point) / d;
    }

    std::string to_string() const
    {
        if (den_.is_constant()) return num_.to_string();
        return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
    }

private:
    static RationalFunction apply(const MultiPoly& p, const std::map<std::string, RationalFunction>& bindings)
    {
        RationalFunction sum;
        for (const auto& [m, c] : p.terms()) {
            RationalFunction term(c);
            VarList kept;
            Monomial km;
            for (std::size_t v = 0; v < m.size(); ++v) {
                auto it = bindings.find(p.vars()[v]);
                if (it == bindings.end()) {
                    kept.push_back(p.vars()[v]);
                    km.push_back(m[v]);
                } else if (m[v] != 0) {
                    term *= it->second.pow(m[v]);
                }
            }
            term *= RationalFunction(MultiPoly::monomial(kept, km, Scalar(1)));
            sum += term;
        }
        return sum;
    }

    void normalize()
    {
        if (num_.is_zero()) {
            den_ = MultiPoly(1);
            return;
        }
        if (!den_.is_constant()) {
            MultiPoly g = gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = *divide_exact(num_, g);
                den_ = *divide_exact(den_, g);
            }
        }
        const Scalar lc = den_.leading_term().second;
        if (!lc.is_one()) {
            const Scalar inv = lc.inverse();
            num_ *= inv;
            den_ *= inv;
        }
    }

    MultiPoly num_;
    MultiPoly den_;
};

}  // namespace contactlie
