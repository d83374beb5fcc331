#pragma once

// Polynomials in base variables with integer (possibly negative) powers of a
// single distinguished fiber variable.

#include "contactlie/poly.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace contactlie {

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Scalar& c)  // NOLINT(google-explicit-constructor)
    {
        if (!c.is_zero()) coeffs_.emplace(0, MultiPoly(c));
    }
    LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

    /// Embed a polynomial; if `fiber` names one of its variables, that
    /// variable's exponent becomes the Laurent index.
    explicit LaurentPoly(const MultiPoly& p, std::string fiber = {}) : fiber_(std::move(fiber))
    {
        if (fiber_.empty() || !p.index_of(fiber_)) {
            if (!p.is_zero()) coeffs_.emplace(0, p);
            return;
        }
        for (auto& [k, c] : p.coefficients_in(fiber_)) coeffs_.emplace(k, strip(c, fiber_));
    }

    /// c * fiber^k for any integer k.
    static LaurentPoly fiber_power(const std::string& fiber, int k, const Scalar& c = Scalar(1))
    {
        if (fiber.empty()) throw std::invalid_argument("fiber power needs a fiber variable name");
        LaurentPoly out;
        out.fiber_ = fiber;
        if (!c.is_zero()) out.coeffs_.emplace(k, MultiPoly(c));
        return out;
    }

    static LaurentPoly variable(const std::string& name, const std::string& fiber = {})
    {
        if (!fiber.empty() && name == fiber) return fiber_power(fiber, 1);
        LaurentPoly out(MultiPoly::variable(name));
        out.fiber_ = fiber;
        return out;
    }

    const std::string& fiber() const { return fiber_; }
    const std::map<int, MultiPoly>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool has_negative_powers() const { return !coeffs_.empty() && coeffs_.begin()->first < 0; }
    int min_fiber_degree() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_fiber_degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    /// Coefficient of fiber^k (zero polynomial if absent).
    MultiPoly coefficient(int k) const
    {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? MultiPoly() : it->second;
    }

    /// True when the value is c * fiber^k with c a nonzero scalar.
    bool is_unit_monomial() const
    {
        return coeffs_.size() == 1 && coeffs_.begin()->second.is_constant();
    }

    LaurentPoly inverse_unit() const
    {
        if (!is_unit_monomial()) throw std::domain_error("only c*fiber^k is invertible in the Laurent ring");
        const auto& [k, c] = *coeffs_.begin();
        if (k != 0 && fiber_.empty()) throw std::logic_error("Laurent exponent without fiber name");
        LaurentPoly out;
        out.fiber_ = fiber_;
        out.coeffs_.emplace(-k, MultiPoly(c.constant_term().inverse()));
        return out;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) { return accumulate(o, false); }
    LaurentPoly& operator-=(const LaurentPoly& o) { return accumulate(o, true); }
    LaurentPoly& operator*=(const Scalar& s)
    {
        if (s.is_zero()) coeffs_.clear();
        for (auto& [k, c] : coeffs_) c *= s;
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const Scalar& s) { return a *= s; }
    friend LaurentPoly operator*(const Scalar& s, LaurentPoly a) { return a *= s; }
    LaurentPoly operator-() const { return *this * Scalar(-1); }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b)
    {
        LaurentPoly out;
        out.fiber_ = join_fiber(a, b);
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) {
                MultiPoly prod = ca * cb;
                if (prod.is_zero()) continue;
                auto [it, inserted] = out.coeffs_.try_emplace(ka + kb, prod);
                if (!inserted) {
                    it->second += prod;
                    if (it->second.is_zero()) out.coeffs_.erase(it);
                }
            }
        return out;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        if (!a.coeffs_.empty() && !a.fiber_.empty() && !b.fiber_.empty() && a.fiber_ != b.fiber_)
            return false;
        auto ia = a.coeffs_.begin();
        auto ib = b.coeffs_.begin();
        for (; ia != a.coeffs_.end(); ++ia, ++ib)
            if (ia->first != ib->first || !(ia->second == ib->second)) return false;
        return true;
    }

    LaurentPoly pow(int k) const
    {
        if (k < 0) return inverse_unit().pow(-k);
        LaurentPoly result(1);
        result.fiber_ = fiber_;
        LaurentPoly base(*this);
        while (k > 0) {
            if (k & 1) result *= base;
            k >>= 1;
            if (k > 0) base *= base;
        }
        return result;
    }

    /// Partial derivative in a base variable or in the fiber variable.
    LaurentPoly derivative(std::string_view name) const
    {
        LaurentPoly out;
        out.fiber_ = fiber_;
        if (!fiber_.empty() && name == fiber_) {
            for (const auto& [k, c] : coeffs_)
                if (k != 0) out.coeffs_.emplace(k - 1, c * Scalar(k));
            return out;
        }
        for (const auto& [k, c] : coeffs_) {
            MultiPoly d = c.derivative_or_zero(name);
            if (!d.is_zero()) out.coeffs_.emplace(k, std::move(d));
        }
        return out;
    }

    /// Ring homomorphism on base variables and the fiber. A fiber^k factor
    /// with k < 0 is only mapped when the fiber's image is a unit c*fiber^m.
    LaurentPoly substitute(const std::map<std::string, LaurentPoly>& bindings) const
    {
        const LaurentPoly* fiber_image = nullptr;
        if (!fiber_.empty()) {
            auto it = bindings.find(fiber_);
            if (it != bindings.end()) fiber_image = &it->second;
        }
        if (fiber_image && has_negative_powers() && !fiber_image->is_unit_monomial())
            throw std::domain_error("negative fiber powers pulled back through a non-unit image of " + fiber_);

        LaurentPoly out;
        for (const auto& [k, c] : coeffs_) {
            LaurentPoly base_part;
            for (const auto& [m, s] : c.terms()) {
                LaurentPoly term(s);
                VarList kept;
                Monomial km;
                for (std::size_t v = 0; v < m.size(); ++v) {
                    const std::string& name = c.vars()[v];
                    auto it = bindings.find(name);
                    if (it == bindings.end()) {
                        kept.push_back(name);
                        km.push_back(m[v]);
                    } else if (m[v] != 0) {
                        term *= it->second.pow(m[v]);
                    }
                }
                term *= LaurentPoly(MultiPoly::monomial(kept, km, Scalar(1)));
                base_part += term;
            }
            LaurentPoly fiber_part = fiber_image ? fiber_image->pow(k) : fiber_power_or_one(fiber_, k);
            out += base_part * fiber_part;
        }
        return out;
    }

    Scalar evaluate(const std::map<std::string, Scalar>& point) const
    {
        Scalar sum(0);
        for (const auto& [k, c] : coeffs_) {
            Scalar v = c.evaluate(point);
            if (k != 0) {
                auto it = point.find(fiber_);
                if (it == point.end()) throw std::invalid_argument("no value for fiber variable " + fiber_);
                if (it->second.is_zero() && k < 0)
                    throw std::domain_error("fiber variable " + fiber_ + " = 0 with a negative exponent");
                v *= it->second.pow(k);
            }
            sum += v;
        }
        return sum;
    }

    /// Ordinary polynomial when no negative fiber powers are present.
    MultiPoly to_poly() const
    {
        if (has_negative_powers()) throw std::domain_error("Laurent polynomial has negative fiber powers");
        MultiPoly out;
        for (const auto& [k, c] : coeffs_) {
            if (k == 0) out += c;
            else out += c * MultiPoly::variable(fiber_).pow(static_cast<unsigned>(k));
        }
        return out;
    }

    std::string to_string() const
    {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            const auto& [k, c] = *it;
            std::string body = c.to_string();
            std::string piece;
            if (k == 0) piece = body;
            else {
                std::string lam = fiber_ + (k == 1 ? "" : "^" + std::to_string(k));
                if (body == "1") piece = lam;
                else if (body == "-1") piece = "-" + lam;
                else if (c.terms().size() == 1) piece = body + "*" + lam;
                else piece = "(" + body + ")*" + lam;
            }
            if (out.empty()) out = piece;
            else if (!piece.empty() && piece[0] == '-') out += " - " + piece.substr(1);
            else out += " + " + piece;
        }
        return out;
    }

private:
    static MultiPoly strip(const MultiPoly& c, const std::string& fiber)
    {
        VarList kept;
        for (const auto& v : c.vars())
            if (v != fiber) kept.push_back(v);
        return c.over(std::make_shared<const VarList>(std::move(kept)));
    }

    static LaurentPoly fiber_power_or_one(const std::string& fiber, int k)
    {
        if (k == 0) return LaurentPoly(1);
        return fiber_power(fiber, k);
    }

    static std::string join_fiber(const LaurentPoly& a, const LaurentPoly& b)
    {
        if (a.fiber_.empty()) return b.fiber_;
        if (b.fiber_.empty() || a.fiber_ == b.fiber_) return a.fiber_;
        const bool a_plain = a.coeffs_.empty() || (a.min_fiber_degree() == 0 && a.max_fiber_degree() == 0);
        const bool b_plain = b.coeffs_.empty() || (b.min_fiber_degree() == 0 && b.max_fiber_degree() == 0);
        if (a_plain) return b.fiber_;
        if (b_plain) return a.fiber_;
        throw std::invalid_argument("Laurent polynomials over different fiber variables");
    }

    LaurentPoly& accumulate(const LaurentPoly& o, bool subtract)
    {
        if (&o == this) {
            const LaurentPoly copy = o;
            return accumulate(copy, subtract);
        }
        fiber_ = join_fiber(*this, o);
        for (const auto& [k, c] : o.coeffs_) {
            auto [it, inserted] = coeffs_.try_emplace(k, subtract ? -c : c);
            if (!inserted) {
                if (subtract) it->second -= c;
                else it->second += c;
                if (it->second.is_zero()) coeffs_.erase(it);
            }
        }
        return *this;
    }

    std::string fiber_;
    std::map<int, MultiPoly> coeffs_;
};

}  // namespace contactlie
