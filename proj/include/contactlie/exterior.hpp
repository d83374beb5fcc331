#pragma once

// Holomorphic (p,0)-forms and vector fields on a coordinate chart, with
// coefficients in LaurentPoly (one invertible fiber variable) or
// RationalFunction.
//
// A p-form is a map from strictly increasing index tuples to coefficients.
// Interior product expands from the left slot:
//   i_X(dx_{i1} ^ ... ^ dx_{ip}) = sum_k (-1)^k X^{ik} dx_{i1} ^ ..^ (omit ik) ^ .. dx_{ip}
// so a 2-form evaluates as w(X, Y) = i_Y i_X w.
//
// Text format: terms "(coeff)*dz1^dz2" joined by " + ", ordered by index tuple.

#include "contactlie/laurent.hpp"
#include "contactlie/linalg.hpp"
#include "contactlie/ratfunc.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace contactlie {

class ChartSpace {
public:
    ChartSpace(std::vector<std::string> base_vars, std::string fiber_var = {})
        : base_(std::move(base_vars)), fiber_(std::move(fiber_var))
    {
        std::set<std::string> seen;
        for (const auto& v : base_) {
            if (v.empty()) throw std::invalid_argument("empty coordinate name");
            if (!seen.insert(v).second) throw std::invalid_argument("duplicate coordinate name " + v);
        }
        if (!fiber_.empty() && seen.count(fiber_))
            throw std::invalid_argument("fiber variable " + fiber_ + " is also a base variable");
        coords_ = base_;
        if (!fiber_.empty()) coords_.push_back(fiber_);
    }

    const std::vector<std::string>& base_vars() const { return base_; }
    const std::string& fiber_var() const { return fiber_; }
    bool fibered() const { return !fiber_.empty(); }
    /// Base variables followed by the fiber variable, if any.
    const std::vector<std::string>& coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }

    std::size_t index_of(const std::string& name) const
    {
        for (std::size_t k = 0; k < coords_.size(); ++k)
            if (coords_[k] == name) return k;
        throw std::invalid_argument("unknown chart coordinate " + name);
    }

    friend bool operator==(const ChartSpace& a, const ChartSpace& b)
    {
        return a.base_ == b.base_ && a.fiber_ == b.fiber_;
    }

private:
    std::vector<std::string> base_;
    std::string fiber_;
    std::vector<std::string> coords_;
};

using Chart = std::shared_ptr<const ChartSpace>;

inline Chart make_chart(std::vector<std::string> base_vars, std::string fiber_var = {})
{
    return std::make_shared<const ChartSpace>(std::move(base_vars), std::move(fiber_var));
}

inline LaurentPoly coordinate(const ChartSpace& c, const std::string& name, const LaurentPoly*)
{
    return LaurentPoly::variable(name, c.fiber_var());
}
inline RationalFunction coordinate(const ChartSpace&, const std::string& name, const RationalFunction*)
{
    return RationalFunction::variable(name);
}

/// The coordinate function `name` as a coefficient of type C.
template <class C>
C coordinate(const ChartSpace& c, const std::string& name)
{
    c.index_of(name);
    return coordinate(c, name, static_cast<const C*>(nullptr));
}

using IndexTuple = std::vector<int>;

template <class C>
class VectorField;

template <class C>
class Form {
public:
    Form() = default;
    Form(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree)
    {
        if (!chart_) throw std::invalid_argument("form without a chart");
        if (degree_ < 0) throw std::invalid_argument("negative form degree");
    }

    /// The 0-form f.
    static Form function(Chart chart, const C& f)
    {
        Form out(std::move(chart), 0);
        out.add_term({}, f);
        return out;
    }
    /// d(coordinate name).
    static Form differential(Chart chart, const std::string& name)
    {
        Form out(chart, 1);
        out.add_term({static_cast<int>(chart->index_of(name))}, C(1));
        return out;
    }

    const Chart& chart() const { return chart_; }
    int degree() const { return degree_; }
    const std::map<IndexTuple, C>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    C coefficient(const IndexTuple& idx) const
    {
        auto it = terms_.find(idx);
        return it == terms_.end() ? C() : it->second;
    }
    /// Coefficient of the 0-form (zero if absent).
    C value() const { return coefficient({}); }

    /// Adds c * dx_{idx} where idx need not be sorted.
    void add_term(IndexTuple idx, const C& c)
    {
        if (static_cast<int>(idx.size()) != degree_) throw std::invalid_argument("index tuple length differs from degree");
        for (int k : idx)
            if (k < 0 || static_cast<std::size_t>(k) >= chart_->dim()) throw std::out_of_range("form index outside chart");
        const int sign = sort_with_sign(idx);
        if (sign == 0 || c.is_zero()) return;
        accumulate(idx, sign > 0 ? c : -c);
    }

    Form& operator+=(const Form& o)
    {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) accumulate(k, c);
        return *this;
    }
    Form& operator-=(const Form& o)
    {
        check_compatible(o);
        for (const auto& [k, c] : o.terms_) accumulate(k, -c);
        return *this;
    }
    friend Form operator+(Form a, const Form& b) { return a += b; }
    friend Form operator-(Form a, const Form& b) { return a -= b; }
    Form operator-() const
    {
        Form out = *this;
        for (auto& [k, c] : out.terms_) c = -c;
        return out;
    }
    friend Form operator*(const C& f, const Form& a)
    {
        Form out(a.chart_, a.degree_);
        if (f.is_zero()) return out;
        for (const auto& [k, c] : a.terms_) {
            C v = f * c;
            if (!v.is_zero()) out.terms_.emplace(k, std::move(v));
        }
        return out;
    }

    friend bool operator==(const Form& a, const Form& b)
    {
        if (a.terms_.empty() && b.terms_.empty()) return a.degree_ == b.degree_;
        return a.degree_ == b.degree_ && *a.chart_ == *b.chart_ && a.terms_ == b.terms_;
    }

    friend Form wedge(const Form& a, const Form& b)
    {
        a.check_same_chart(b);
        Form out(a.chart_, a.degree_ + b.degree_);
        if (out.degree_ > static_cast<int>(a.chart_->dim())) return out;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                IndexTuple idx = ka;
                idx.insert(idx.end(), kb.begin(), kb.end());
                const int sign = sort_with_sign(idx);
                if (sign == 0) continue;
                C v = ca * cb;
                out.accumulate(idx, sign > 0 ? v : -v);
            }
        return out;
    }

    /// Exterior derivative.
    Form d() const
    {
        Form out(chart_, degree_ + 1);
        const auto& names = chart_->coords();
        for (const auto& [idx, c] : terms_)
            for (std::size_t v = 0; v < names.size(); ++v) {
                if (std::find(idx.begin(), idx.end(), static_cast<int>(v)) != idx.end()) continue;
                C dc = c.derivative(names[v]);
                if (dc.is_zero()) continue;
                IndexTuple full{static_cast<int>(v)};
                full.insert(full.end(), idx.begin(), idx.end());
                const int sign = sort_with_sign(full);
                out.accumulate(full, sign > 0 ? dc : -dc);
            }
        return out;
    }

    /// Top-degree power w ^ w ^ ... ^ w (k factors).
    Form power(int k) const
    {
        if (k < 0) throw std::invalid_argument("negative wedge power");
        Form out = function(chart_, C(1));
        for (int j = 0; j < k; ++j) out = wedge(out, *this);
        return out;
    }

    /// Evaluate coefficients at a point; returns sorted index tuple -> value.
    std::map<IndexTuple, Scalar> evaluate(const std::map<std::string, Scalar>& point) const
    {
        std::map<IndexTuple, Scalar> out;
        for (const auto& [k, c] : terms_) {
            Scalar v = c.evaluate(point);
            if (!v.is_zero()) out.emplace(k, v);
        }
        return out;
    }

    /// Antisymmetric matrix w(d_i, d_j) of a 2-form at a point.
    ScalarMatrix matrix_at(const std::map<std::string, Scalar>& point) const
    {
        if (degree_ != 2) throw std::invalid_argument("matrix_at needs a 2-form");
        const std::size_t n = chart_->dim();
        ScalarMatrix m(n, n, Scalar(0));
        for (const auto& [k, v] : evaluate(point)) {
            m(k[0], k[1]) = v;
            m(k[1], k[0]) = -v;
        }
        return m;
    }

    std::string to_string() const
    {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [idx, c] : terms_) {
            if (!out.empty()) out += " + ";
            std::string wedge_part;
            for (std::size_t k = 0; k < idx.size(); ++k)
                wedge_part += (k ? "^d" : "d") + chart_->coords()[idx[k]];
            if (idx.empty()) out += "(" + c.to_string() + ")";
            else out += "(" + c.to_string() + ")*" + wedge_part;
        }
        return out;
    }

private:
    template <class>
    friend class VectorField;

    /// Sorts idx in place; returns the permutation sign, or 0 on a repeated index.
    static int sort_with_sign(IndexTuple& idx)
    {
        int sign = 1;
        for (std::size_t i = 1; i < idx.size(); ++i)
            for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
                if (idx[j - 1] == idx[j]) return 0;
                std::swap(idx[j - 1], idx[j]);
                sign = -sign;
            }
        return sign;
    }

    void accumulate(const IndexTuple& idx, const C& c)
    {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(idx, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    void check_same_chart(const Form& o) const
    {
        if (!chart_ || !o.chart_) throw std::invalid_argument("form without a chart");
        if (chart_ != o.chart_ && !(*chart_ == *o.chart_)) throw std::invalid_argument("forms live on different charts");
    }
    void check_compatible(const Form& o) const
    {
        check_same_chart(o);
        if (degree_ != o.degree_) throw std::invalid_argument("adding forms of different degree");
    }

    Chart chart_;
    int degree_ = 0;
    std::map<IndexTuple, C> terms_;
};

template <class C>
class VectorField {
public:
    VectorField() = default;
    explicit VectorField(Chart chart) : chart_(std::move(chart)), comp_(chart_->dim()) {}
    VectorField(Chart chart, std::vector<C> components) : chart_(std::move(chart)), comp_(std::move(components))
    {
        if (comp_.size() != chart_->dim()) throw std::invalid_argument("vector field component count differs from chart dimension");
    }

    /// The coordinate field d/d(name).
    static VectorField partial(Chart chart, const std::string& name)
    {
        VectorField out(chart);
        out.comp_[chart->index_of(name)] = C(1);
        return out;
    }

    const Chart& chart() const { return chart_; }
    const std::vector<C>& components() const { return comp_; }
    const C& component(std::size_t k) const { return comp_.at(k); }
    const C& component(const std::string& name) const { return comp_.at(chart_->index_of(name)); }
    void set_component(const std::string& name, C c) { comp_.at(chart_->index_of(name)) = std::move(c); }

    bool is_zero() const
    {
        return std::all_of(comp_.begin(), comp_.end(), [](const C& c) { return c.is_zero(); });
    }

    VectorField& operator+=(const VectorField& o)
    {
        for (std::size_t k = 0; k < comp_.size(); ++k) comp_[k] += o.comp_.at(k);
        return *this;
    }
    VectorField& operator-=(const VectorField& o)
    {
        for (std::size_t k = 0; k < comp_.size(); ++k) comp_[k] -= o.comp_.at(k);
        return *this;
    }
    friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
    friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
    friend VectorField operator*(const C& f, VectorField a)
    {
        for (auto& c : a.comp_) c = f * c;
        return a;
    }
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.comp_ == b.comp_; }

    /// X(f) = sum_j X^j df/dx_j.
    C apply(const C& f) const
    {
        C out;
        for (std::size_t k = 0; k < comp_.size(); ++k) {
            if (comp_[k].is_zero()) continue;
            C df = f.derivative(chart_->coords()[k]);
            if (!df.is_zero()) out += comp_[k] * df;
        }
        return out;
    }

    /// [X, Y]^j = X(Y^j) - Y(X^j).
    friend VectorField lie_bracket(const VectorField& x, const VectorField& y)
    {
        VectorField out(x.chart_);
        for (std::size_t j = 0; j < out.comp_.size(); ++j) out.comp_[j] = x.apply(y.comp_[j]) - y.apply(x.comp_[j]);
        return out;
    }

    ScalarVector evaluate(const std::map<std::string, Scalar>& point) const
    {
        ScalarVector out;
        for (const auto& c : comp_) out.push_back(c.evaluate(point));
        return out;
    }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < comp_.size(); ++k) {
            if (comp_[k].is_zero()) continue;
            if (!out.empty()) out += " + ";
            out += "(" + comp_[k].to_string() + ")*d/d" + chart_->coords()[k];
        }
        return out.empty() ? "0" : out;
    }

private:
    Chart chart_;
    std::vector<C> comp_;
};

/// Interior product i_X a.
template <class C>
Form<C> interior(const VectorField<C>& x, const Form<C>& a)
{
    if (a.degree() == 0) return Form<C>(a.chart(), 0);
    Form<C> out(a.chart(), a.degree() - 1);
    for (const auto& [idx, c] : a.terms()) {
        for (std::size_t k = 0; k < idx.size(); ++k) {
            const C& xk = x.component(static_cast<std::size_t>(idx[k]));
            if (xk.is_zero()) continue;
            IndexTuple rest;
            for (std::size_t m = 0; m < idx.size(); ++m)
                if (m != k) rest.push_back(idx[m]);
            C v = xk * c;
            out.add_term(rest, k % 2 == 0 ? v : -v);
        }
    }
    return out;
}

/// Lie derivative by Cartan's formula L_X = d i_X + i_X d.
template <class C>
Form<C> lie_derivative(const VectorField<C>& x, const Form<C>& a)
{
    return interior(x, a).d() + interior(x, a.d());
}

/// w(X, Y) for a 2-form w, as a function.
template <class C>
C pair(const Form<C>& w, const VectorField<C>& x, const VectorField<C>& y)
{
    if (w.degree() != 2) throw std::invalid_argument("pairing two vector fields needs a 2-form");
    return interior(y, interior(x, w)).value();
}

/// w(X) for a 1-form w.
template <class C>
C pair(const Form<C>& w, const VectorField<C>& x)
{
    if (w.degree() != 1) throw std::invalid_argument("pairing one vector field needs a 1-form");
    return interior(x, w).value();
}

/// Pullback of a form on `target` along the map whose target coordinate
/// target->coords()[k] is sent to images[k], a function on `source`.
template <class C>
Form<C> pullback(const Chart& source, const std::vector<C>& images, const Form<C>& a)
{
    const Chart& target = a.chart();
    if (images.size() != target->dim()) throw std::invalid_argument("pullback map has the wrong number of components");
    std::map<std::string, C> bindings;
    for (std::size_t k = 0; k < images.size(); ++k) bindings.emplace(target->coords()[k], images[k]);

    std::vector<Form<C>> differentials;
    for (const auto& f : images) {
        Form<C> df = Form<C>::function(source, f).d();
        differentials.push_back(df);
    }
    Form<C> out(source, a.degree());
    for (const auto& [idx, c] : a.terms()) {
        Form<C> term = Form<C>::function(source, c.substitute(bindings));
        for (int k : idx) term = wedge(term, differentials[static_cast<std::size_t>(k)]);
        out += term;
    }
    return out;
}

/// Pullback of a function.
template <class C>
C pullback_function(const Chart& target, const std::vector<C>& images, const C& f)
{
    std::map<std::string, C> bindings;
    for (std::size_t k = 0; k < images.size(); ++k) bindings.emplace(target->coords()[k], images[k]);
    return f.substitute(bindings);
}

}  // namespace contactlie
