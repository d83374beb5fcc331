#pragma once

// Sparse multivariate polynomials over Q(i).
//
// Text format (stable, used in every JSON report):
//   terms are printed from the largest to the smallest in graded-lex order,
//   joined by " + " / " - "; a term is `coeff*x^2*y`, coefficients equal to
//   one are omitted, coefficients with both a real and an imaginary part are
//   parenthesised, e.g. `(1+i)*x*y - 3/2*z + 5`. The zero polynomial is `0`.

#include "contactlie/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace contactlie {

using Monomial = std::vector<int>;
using VarList = std::vector<std::string>;
using VarTable = std::shared_ptr<const VarList>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first variable most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        const long da = std::accumulate(a.begin(), a.end(), 0L);
        const long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<Monomial, Scalar, GrlexLess>;

    MultiPoly() : vars_(empty_table()) {}
    MultiPoly(const Scalar& c)  // NOLINT(google-explicit-constructor)
        : vars_(empty_table())
    {
        if (!c.is_zero()) terms_.emplace(Monomial{}, c);
    }
    MultiPoly(long c) : MultiPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)

    explicit MultiPoly(VarList vars) : vars_(std::make_shared<const VarList>(std::move(vars))) { check_unique(*vars_); }

    static MultiPoly variable(const std::string& name)
    {
        MultiPoly p(VarList{name});
        p.terms_.emplace(Monomial{1}, Scalar(1));
        return p;
    }

    static MultiPoly monomial(VarList vars, Monomial exps, Scalar coeff)
    {
        if (exps.size() != vars.size()) throw std::invalid_argument("monomial exponent count mismatch");
        for (int e : exps)
            if (e < 0) throw std::invalid_argument("negative exponent in polynomial monomial");
        MultiPoly p(std::move(vars));
        if (!coeff.is_zero()) p.terms_.emplace(std::move(exps), std::move(coeff));
        return p;
    }

    const VarList& vars() const { return *vars_; }
    const VarTable& table() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && total(terms_.begin()->first) == 0);
    }
    Scalar constant_term() const
    {
        for (const auto& [m, c] : terms_)
            if (total(m) == 0) return c;
        return Scalar(0);
    }
    long total_degree() const { return terms_.empty() ? -1 : total(terms_.rbegin()->first); }

    std::optional<std::size_t> index_of(std::string_view name) const
    {
        for (std::size_t k = 0; k < vars_->size(); ++k)
            if ((*vars_)[k] == name) return k;
        return std::nullopt;
    }

    /// Degree in a single variable (0 if absent, -1 for the zero polynomial).
    long degree_in(std::string_view name) const
    {
        if (is_zero()) return -1;
        auto idx = index_of(name);
        if (!idx) return 0;
        long d = 0;
        for (const auto& [m, c] : terms_) d = std::max<long>(d, m[*idx]);
        return d;
    }

    /// Leading term in graded-lex order with variables in canonical name
    /// order, so the choice does not depend on the internal table.
    std::pair<Monomial, Scalar> leading_term() const
    {
        if (is_zero()) throw std::domain_error("leading term of zero polynomial");
        const auto perm = canonical_permutation();
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (canonical_less(best->first, it->first, perm)) best = it;
        return *best;
    }

    /// Copy re-expressed over `target`, which must contain every variable
    /// with a nonzero exponent.
    MultiPoly over(const VarTable& target) const
    {
        if (target == vars_ || *target == *vars_) {
            MultiPoly out = *this;
            out.vars_ = target;
            return out;
        }
        std::vector<std::optional<std::size_t>> map(vars_->size());
        for (std::size_t k = 0; k < vars_->size(); ++k) {
            auto it = std::find(target->begin(), target->end(), (*vars_)[k]);
            if (it != target->end()) map[k] = static_cast<std::size_t>(it - target->begin());
        }
        MultiPoly out;
        out.vars_ = target;
        for (const auto& [m, c] : terms_) {
            Monomial nm(target->size(), 0);
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                if (!map[k]) throw std::invalid_argument("variable " + (*vars_)[k] + " missing from target table");
                nm[*map[k]] = m[k];
            }
            out.terms_.emplace(std::move(nm), c);
        }
        return out;
    }

    /// Variable table containing the variables of both tables, a's first.
    static VarTable merge_tables(const VarTable& a, const VarTable& b)
    {
        if (a == b || *a == *b) return a;
        if (b->empty()) return a;
        if (a->empty()) return b;
        VarList u = *a;
        bool grew = false;
        for (const auto& v : *b)
            if (std::find(u.begin(), u.end(), v) == u.end()) {
                u.push_back(v);
                grew = true;
            }
        if (!grew) return a;
        return std::make_shared<const VarList>(std::move(u));
    }

    MultiPoly& operator+=(const MultiPoly& o) { return accumulate(o, Scalar(1)); }
    MultiPoly& operator-=(const MultiPoly& o) { return accumulate(o, Scalar(-1)); }

    MultiPoly& operator*=(const Scalar& s)
    {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, c] : terms_) c *= s;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const Scalar& s) { return a *= s; }
    friend MultiPoly operator*(const Scalar& s, MultiPoly a) { return a *= s; }
    MultiPoly operator-() const { return *this * Scalar(-1); }

    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.is_zero() || b.is_zero()) {
            MultiPoly z;
            z.vars_ = merge_tables(a.vars_, b.vars_);
            return z;
        }
        const VarTable t = merge_tables(a.vars_, b.vars_);
        std::optional<MultiPoly> ra, rb;
        if (a.vars_ != t) ra = a.over(t);
        if (b.vars_ != t) rb = b.over(t);
        const MultiPoly& aa = ra ? *ra : a;
        const MultiPoly& bb = rb ? *rb : b;
        MultiPoly out;
        out.vars_ = t;
        Monomial m(t->size());
        for (const auto& [ma, ca] : aa.terms_)
            for (const auto& [mb, cb] : bb.terms_) {
                for (std::size_t k = 0; k < m.size(); ++k) m[k] = ma[k] + mb[k];
                auto [it, inserted] = out.terms_.try_emplace(m, ca);
                if (inserted) it->second *= cb;
                else {
                    it->second += ca * cb;
                    if (it->second.is_zero()) out.terms_.erase(it);
                }
            }
        return out;
    }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b)
    {
        if (a.terms_.size() != b.terms_.size()) return false;
        if (a.vars_ == b.vars_ || *a.vars_ == *b.vars_) return a.terms_ == b.terms_;
        const VarTable t = merge_tables(a.vars_, b.vars_);
        return a.over(t).terms_ == b.over(t).terms_;
    }

    MultiPoly pow(unsigned k) const
    {
        MultiPoly result = MultiPoly(1).over(vars_);
        MultiPoly base(*this);
        while (k > 0) {
            if (k & 1u) result *= base;
            k >>= 1u;
            if (k > 0) base *= base;
        }
        return result;
    }

    /// Formal partial derivative. Throws if `name` is not a variable of the
    /// polynomial's table.
    MultiPoly derivative(std::string_view name) const
    {
        auto idx = index_of(name);
        if (!idx) throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
        return derivative_at(*idx);
    }

    /// Derivative with respect to a variable that may be absent (then zero).
    MultiPoly derivative_or_zero(std::string_view name) const
    {
        auto idx = index_of(name);
        if (!idx) {
            MultiPoly z;
            z.vars_ = vars_;
            return z;
        }
        return derivative_at(*idx);
    }

    /// Ring homomorphism sending each bound variable to its image; unbound
    /// variables are kept.
    MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const
    {
        std::vector<const MultiPoly*> image(vars_->size(), nullptr);
        VarList kept;
        for (std::size_t k = 0; k < vars_->size(); ++k) {
            auto it = bindings.find((*vars_)[k]);
            if (it != bindings.end()) image[k] = &it->second;
            else kept.push_back((*vars_)[k]);
        }
        MultiPoly out{VarList(kept)};
        std::vector<std::map<int, MultiPoly>> power_cache(vars_->size());
        for (const auto& [m, c] : terms_) {
            Monomial km;
            km.reserve(kept.size());
            MultiPoly term(c);
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (image[k] == nullptr) {
                    km.push_back(m[k]);
                    continue;
                }
                if (m[k] == 0) continue;
                auto& cache = power_cache[k];
                auto pit = cache.find(m[k]);
                if (pit == cache.end()) pit = cache.emplace(m[k], image[k]->pow(static_cast<unsigned>(m[k]))).first;
                term *= pit->second;
            }
            out += monomial(kept, km, Scalar(1)) * term;
        }
        return out;
    }

    /// Evaluate at a point; every variable with a nonzero exponent must be bound.
    Scalar evaluate(const std::map<std::string, Scalar>& point) const
    {
        Scalar sum(0);
        std::vector<const Scalar*> val(vars_->size(), nullptr);
        for (std::size_t k = 0; k < vars_->size(); ++k) {
            auto it = point.find((*vars_)[k]);
            if (it != point.end()) val[k] = &it->second;
        }
        for (const auto& [m, c] : terms_) {
            Scalar t = c;
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                if (val[k] == nullptr) throw std::invalid_argument("no value for variable " + (*vars_)[k]);
                t *= val[k]->pow(m[k]);
            }
            sum += t;
        }
        return sum;
    }

    /// Coefficients as a polynomial in one variable: exponent -> coefficient
    /// polynomial free of that variable.
    std::map<int, MultiPoly> coefficients_in(std::string_view name) const
    {
        std::map<int, MultiPoly> out;
        auto idx = index_of(name);
        if (!idx) {
            if (!is_zero()) out.emplace(0, *this);
            return out;
        }
        for (const auto& [m, c] : terms_) {
            Monomial rest = m;
            const int e = rest[*idx];
            rest[*idx] = 0;
            auto [it, inserted] = out.try_emplace(e);
            if (inserted) it->second.vars_ = vars_;
            it->second.terms_.emplace(std::move(rest), c);
        }
        return out;
    }

    /// Names of variables that occur with a nonzero exponent, in table order.
    VarList support() const
    {
        VarList out;
        for (std::size_t k = 0; k < vars_->size(); ++k)
            for (const auto& [m, c] : terms_)
                if (m[k] != 0) {
                    out.push_back((*vars_)[k]);
                    break;
                }
        return out;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        VarList sorted = support();
        std::sort(sorted.begin(), sorted.end(), natural_less);
        const auto table = std::make_shared<const VarList>(std::move(sorted));
        if (*table != *vars_) return over(table).to_string();
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            Scalar coeff = c;
            bool negative = c.is_real() ? sgn(c.re()) < 0 : (sgn(c.re()) == 0 && sgn(c.im()) < 0);
            if (negative) coeff = -coeff;
            if (first) out += negative ? "-" : "";
            else out += negative ? " - " : " + ";
            first = false;
            std::string mono;
            for (std::size_t k = 0; k < m.size(); ++k) {
                if (m[k] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += (*vars_)[k];
                if (m[k] != 1) mono += "^" + std::to_string(m[k]);
            }
            std::string cs = coeff.to_string();
            if (!coeff.is_real() && sgn(coeff.re()) != 0) cs = "(" + cs + ")";
            if (mono.empty()) out += cs;
            else if (coeff.is_one()) out += mono;
            else out += cs + "*" + mono;
        }
        return out;
    }

    /// Name order used for printing: alphabetic prefix, then numeric suffix
    /// compared as a number (z2 < z10).
    static bool natural_less(const std::string& a, const std::string& b)
    {
        auto split = [](const std::string& s) {
            std::size_t k = s.size();
            while (k > 0 && std::isdigit(static_cast<unsigned char>(s[k - 1]))) --k;
            return std::pair<std::string, std::string>(s.substr(0, k), s.substr(k));
        };
        const auto [pa, na] = split(a);
        const auto [pb, nb] = split(b);
        if (pa != pb) return pa < pb;
        if (na.size() != nb.size()) return na.size() < nb.size();
        return na < nb;
    }

private:
    std::vector<std::size_t> canonical_permutation() const
    {
        std::vector<std::size_t> perm(vars_->size());
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::sort(perm.begin(), perm.end(), [&](auto x, auto y) { return natural_less((*vars_)[x], (*vars_)[y]); });
        return perm;
    }
    static bool canonical_less(const Monomial& a, const Monomial& b, const std::vector<std::size_t>& perm)
    {
        const long da = total(a), db = total(b);
        if (da != db) return da < db;
        for (std::size_t k : perm)
            if (a[k] != b[k]) return a[k] < b[k];
        return false;
    }

    static VarTable empty_table()
    {
        static const VarTable t = std::make_shared<const VarList>();
        return t;
    }
    static long total(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0L); }
    static void check_unique(const VarList& v)
    {
        for (std::size_t a = 0; a < v.size(); ++a)
            for (std::size_t b = a + 1; b < v.size(); ++b)
                if (v[a] == v[b]) throw std::invalid_argument("duplicate variable name " + v[a]);
    }

    MultiPoly derivative_at(std::size_t idx) const
    {
        MultiPoly out;
        out.vars_ = vars_;
        for (const auto& [m, c] : terms_) {
            if (m[idx] == 0) continue;
            Monomial nm = m;
            nm[idx] -= 1;
            out.terms_.emplace(std::move(nm), c * Scalar(m[idx]));
        }
        return out;
    }

    MultiPoly& accumulate(const MultiPoly& o, const Scalar& sign)
    {
        if (o.is_zero()) return *this;
        if (&o == this) {
            const MultiPoly copy = o;
            return accumulate(copy, sign);
        }
        const VarTable t = merge_tables(vars_, o.vars_);
        if (t != vars_) *this = over(t);
        if (o.vars_ == t) return add_terms(o, sign);
        return add_terms(o.over(t), sign);
    }
    MultiPoly& add_terms(const MultiPoly& src, const Scalar& sign)
    {
        const bool plus = sign.is_one();
        for (const auto& [m, c] : src.terms_) {
            auto [it, inserted] = terms_.try_emplace(m, plus ? c : c * sign);
            if (!inserted) {
                if (plus) it->second += c;
                else it->second -= c;
                if (it->second.is_zero()) terms_.erase(it);
            }
        }
        return *this;
    }

    VarTable vars_;
    TermMap terms_;
};

/// Exact division: returns q with a = q*b, or nullopt if b does not divide a.
inline std::optional<MultiPoly> divide_exact(const MultiPoly& a, const MultiPoly& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const VarTable t = MultiPoly::merge_tables(a.table(), b.table());
    MultiPoly r = a.over(t);
    const MultiPoly d = b.over(t);
    const auto [lm, lc] = d.leading_term();
    const Scalar lc_inv = lc.inverse();
    MultiPoly q{VarList(*t)};
    while (!r.is_zero()) {
        auto [rm, rc] = r.leading_term();
        Monomial qm(rm.size());
        for (std::size_t k = 0; k < rm.size(); ++k) {
            qm[k] = rm[k] - lm[k];
            if (qm[k] < 0) return std::nullopt;
        }
        MultiPoly t_term = MultiPoly::monomial(VarList(*t), qm, rc * lc_inv);
        q += t_term;
        r -= t_term * d;
    }
    return q;
}

}  // namespace contactlie
