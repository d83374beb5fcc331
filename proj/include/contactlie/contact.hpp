#pragma once

// Principal contact bundles of degree delta on a single chart.
//
// Two chart flavours:
//   hopf(n)          C^{2n+2} \ 0 with coordinates z0..z{2n+1}, all of weight 1,
//                    theta = sum_k (z_k dz_{k+n+1} - z_{k+n+1} dz_k), delta = 2
//   fibered(n, d)    base z1..z{2n+1} (weight 0) and fiber lam (weight 1),
//                    theta = lam^d (dz1 + sum_k (z_{2k} dz_{2k+1} - z_{2k+1} dz_{2k}))
//
// With W the antisymmetric matrix W_ij = dtheta(d_i, d_j), the equation
// i_X dtheta = -w for a 1-form w reads W X = w, so X = W^{-1} w. This gives
// the Euler field (w = theta) and the Hamiltonian field X'_f (w = df).

#include "contactlie/exterior.hpp"
#include "contactlie/linalg.hpp"
#include "contactlie/random.hpp"
#include "contactlie/report.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace contactlie {

using LForm = Form<LaurentPoly>;
using LField = VectorField<LaurentPoly>;
using Weights = std::map<std::string, int>;

/// Weighted degree of a Laurent polynomial; nullopt if zero or inhomogeneous.
inline std::optional<int> weighted_degree(const LaurentPoly& f, const Weights& w)
{
    std::optional<int> deg;
    for (const auto& [k, c] : f.coeffs()) {
        const int fiber_part = k == 0 ? 0 : k * w.at(f.fiber());
        for (const auto& [m, s] : c.terms()) {
            int d = fiber_part;
            for (std::size_t v = 0; v < m.size(); ++v)
                if (m[v] != 0) d += m[v] * w.at(c.vars()[v]);
            if (deg && *deg != d) return std::nullopt;
            deg = d;
        }
    }
    return deg;
}

/// Weighted degree of a form, counting dx_j with weight w_j.
inline std::optional<int> weighted_degree(const LForm& a, const Weights& w)
{
    std::optional<int> deg;
    for (const auto& [idx, c] : a.terms()) {
        auto dc = weighted_degree(c, w);
        if (!dc) return std::nullopt;
        int d = *dc;
        for (int k : idx) d += w.at(a.chart()->coords()[static_cast<std::size_t>(k)]);
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

struct HomogeneousFunction {
    LaurentPoly f;
    int ell = 0;
};

class ContactChart {
public:
    ContactChart(Chart chart, LForm theta, int delta, Weights weights, std::string name = "custom")
        : chart_(std::move(chart)), theta_(std::move(theta)), delta_(delta), weights_(std::move(weights)), name_(std::move(name))
    {
        if (delta_ == 0)
            throw std::invalid_argument("contact chart of degree delta = 0 rejected: d theta would be degenerate along the fiber");
        if (theta_.degree() != 1) throw std::invalid_argument("contact form must be a 1-form");
        if (chart_->dim() % 2 != 0 || chart_->dim() < 2) throw std::invalid_argument("chart dimension must be even (2n+2)");
        for (const auto& v : chart_->coords())
            if (!weights_.count(v)) throw std::invalid_argument("no scaling weight for coordinate " + v);
        auto wd = weighted_degree(theta_, weights_);
        if (!wd || *wd != delta_) throw std::invalid_argument("theta is not homogeneous of weight delta");
        dtheta_ = theta_.d();
        build_poisson();
    }

    static ContactChart hopf(int n)
    {
        if (n < 0) throw std::invalid_argument("hopf model needs n >= 0");
        std::vector<std::string> vars;
        for (int k = 0; k < 2 * n + 2; ++k) vars.push_back("z" + std::to_string(k));
        Chart c = make_chart(vars);
        LForm theta(c, 1);
        for (int k = 0; k <= n; ++k) {
            const int j = k + n + 1;
            theta.add_term({j}, coordinate<LaurentPoly>(*c, vars[k]));
            theta.add_term({k}, -coordinate<LaurentPoly>(*c, vars[j]));
        }
        Weights w;
        for (const auto& v : vars) w[v] = 1;
        return ContactChart(c, theta, 2, w, "hopf");
    }

    static ContactChart fibered(int n, int delta)
    {
        if (n < 0) throw std::invalid_argument("fibered model needs n >= 0");
        if (delta == 0)
            throw std::invalid_argument("contact chart of degree delta = 0 rejected: d theta would be degenerate along the fiber");
        std::vector<std::string> vars;
        for (int k = 1; k <= 2 * n + 1; ++k) vars.push_back("z" + std::to_string(k));
        Chart c = make_chart(vars, "lam");
        LForm gamma(c, 1);
        gamma.add_term({0}, LaurentPoly(1));
        for (int k = 1; k <= n; ++k) {
            const int a = 2 * k - 1, b = 2 * k;  // indices of z_{2k}, z_{2k+1}
            gamma.add_term({b}, coordinate<LaurentPoly>(*c, vars[a]));
            gamma.add_term({a}, -coordinate<LaurentPoly>(*c, vars[b]));
        }
        Weights w;
        for (const auto& v : vars) w[v] = 0;
        w["lam"] = 1;
        return ContactChart(c, LaurentPoly::fiber_power("lam", delta) * gamma, delta, w, "fibered");
    }

    const Chart& chart() const { return chart_; }
    const LForm& theta() const { return theta_; }
    const LForm& dtheta() const { return dtheta_; }
    int delta() const { return delta_; }
    int n() const { return static_cast<int>(chart_->dim() / 2) - 1; }
    const Weights& weights() const { return weights_; }
    const std::string& name() const { return name_; }
    bool nondegenerate() const { return poisson_.has_value(); }
    const LaurentPoly& omega_determinant() const { return det_; }

    /// W^{-1}; throws if d theta is degenerate.
    const Matrix<LaurentPoly>& poisson() const
    {
        if (!poisson_) throw std::domain_error("d theta is degenerate on this chart");
        return *poisson_;
    }

    LaurentPoly coord(const std::string& name) const { return coordinate<LaurentPoly>(*chart_, name); }

    /// Infinitesimal generator sum_j w_j x_j d_j of the C^* action.
    LField vertical() const
    {
        LField v(chart_);
        for (const auto& name : chart_->coords())
            if (weights_.at(name) != 0) v.set_component(name, LaurentPoly(weights_.at(name)) * coord(name));
        return v;
    }

    /// The field X with i_X dtheta = -w.
    LField dual_field(const LForm& w) const
    {
        if (w.degree() != 1) throw std::invalid_argument("dual_field needs a 1-form");
        const auto& p = poisson();
        const std::size_t n = chart_->dim();
        std::vector<LaurentPoly> comp(n);
        for (std::size_t j = 0; j < n; ++j) {
            const LaurentPoly wj = w.coefficient({static_cast<int>(j)});
            if (wj.is_zero()) continue;
            for (std::size_t i = 0; i < n; ++i)
                if (!p(i, j).is_zero()) comp[i] += p(i, j) * wj;
        }
        return LField(chart_, comp);
    }

    /// Images x_j -> c^{w_j} x_j of the scaling R_c.
    std::vector<LaurentPoly> scaling_images(const Scalar& c) const
    {
        std::vector<LaurentPoly> out;
        for (const auto& name : chart_->coords()) out.push_back(LaurentPoly(c.pow(weights_.at(name))) * coord(name));
        return out;
    }

    /// Random rational point; the fiber coordinate is never zero.
    std::map<std::string, Scalar> random_point(Rng& rng) const
    {
        std::map<std::string, Scalar> p;
        for (const auto& name : chart_->coords())
            p[name] = (name == chart_->fiber_var()) ? rng.nonzero_rational() : rng.rational();
        return p;
    }

    /// Dense matrix W_ij = dtheta(d_i, d_j) with Laurent entries.
    Matrix<LaurentPoly> omega() const
    {
        const std::size_t n = chart_->dim();
        Matrix<LaurentPoly> m(n, n);
        for (const auto& [idx, c] : dtheta_.terms()) {
            m(idx[0], idx[1]) = c;
            m(idx[1], idx[0]) = -c;
        }
        return m;
    }

private:
    void build_poisson()
    {
        const Matrix<LaurentPoly> m = omega();
        det_ = determinant(m);
        if (det_.is_zero() || !det_.is_unit_monomial()) return;
        const LaurentPoly inv = det_.inverse_unit();
        Matrix<LaurentPoly> adj = adjugate(m);
        for (std::size_t i = 0; i < adj.rows(); ++i)
            for (std::size_t j = 0; j < adj.cols(); ++j) adj(i, j) = adj(i, j) * inv;
        poisson_ = std::move(adj);
    }

    Chart chart_;
    LForm theta_;
    LForm dtheta_;
    int delta_;
    Weights weights_;
    std::string name_;
    LaurentPoly det_;
    std::optional<Matrix<LaurentPoly>> poisson_;
};

/// Fixed scaling parameters used by the exact substitution checks.
inline std::vector<Scalar> scaling_samples()
{
    return {Scalar(2), Scalar::ratio(-1, 3), Scalar(Rational(3, 5), Rational(1)), Scalar::ratio(7, 2)};
}

inline LField euler_field(const ContactChart& cc) { return cc.dual_field(cc.theta()); }

inline LField hamiltonian_field(const ContactChart& cc, const LaurentPoly& f)
{
    return cc.dual_field(LForm::function(cc.chart(), f).d());
}

namespace detail {

/// Coefficient of the monomial (names, exps) in p.
inline Scalar coefficient_of(const MultiPoly& p, const VarList& names, const Monomial& exps)
{
    std::map<std::string, int> want;
    for (std::size_t k = 0; k < names.size(); ++k)
        if (exps[k] != 0) want[names[k]] = exps[k];
    for (const auto& [m, c] : p.terms()) {
        std::map<std::string, int> have;
        for (std::size_t k = 0; k < m.size(); ++k)
            if (m[k] != 0) have[p.vars()[k]] = m[k];
        if (have == want) return c;
    }
    return Scalar(0);
}

/// c with g = c f, if it exists.
inline std::optional<Scalar> proportionality(const LaurentPoly& g, const LaurentPoly& f)
{
    if (f.is_zero()) return std::nullopt;
    const int k = f.max_fiber_degree();
    const MultiPoly fc = f.coefficient(k);
    const auto [mono, lead] = fc.leading_term();
    const Scalar c = coefficient_of(g.coefficient(k), fc.vars(), mono) / lead;
    if (!(g == f * c)) return std::nullopt;
    return c;
}

}  // namespace detail

/// l with Xi(theta) f = -(l/delta) f, or nullopt.
inline std::optional<int> degree_of(const ContactChart& cc, const LaurentPoly& f)
{
    const auto c = detail::proportionality(euler_field(cc).apply(f), f);
    if (!c) return std::nullopt;
    const Scalar ell = -(*c) * Scalar(cc.delta());
    long out = 0;
    if (!scalar_to_integer(ell, out)) return std::nullopt;
    return static_cast<int>(out);
}

/// Degree from the scaling action: weighted monomial count, confirmed by
/// exact substitution R_c^* f = c^l f at fixed sample values of c.
inline std::optional<int> scaling_degree(const ContactChart& cc, const LaurentPoly& f)
{
    const auto wd = weighted_degree(f, cc.weights());
    if (!wd) return std::nullopt;
    for (const Scalar& c : scaling_samples())
        if (!(pullback_function(cc.chart(), cc.scaling_images(c), f) == f * c.pow(*wd))) return std::nullopt;
    return wd;
}

/// Axioms (P.1), (P.2)_delta and (P.3).
inline Report verify_axioms(const ContactChart& cc, Rng& rng, int samples)
{
    Report r;
    const LField vert = cc.vertical();
    const LaurentPoly tv = pair(cc.theta(), vert);
    r.check("P1.vertical_annihilated", tv.is_zero(), [&] { return "theta(V) = " + tv.to_string(); });
    if (cc.chart()->fibered()) {
        const LaurentPoly tl = pair(cc.theta(), LField::partial(cc.chart(), cc.chart()->fiber_var()));
        r.check("P1.fiber_direction_annihilated", tl.is_zero(), [&] { return "theta(d/dlam) = " + tl.to_string(); });
    }

    const auto wd = weighted_degree(cc.theta(), cc.weights());
    r.check("P2.weighted_degree", wd && *wd == cc.delta(),
            [&] { return "weighted degree " + (wd ? std::to_string(*wd) : std::string("inhomogeneous")); });
    bool scaled = true;
    std::string scale_witness;
    for (const Scalar& c : scaling_samples()) {
        const LForm pulled = pullback(cc.chart(), cc.scaling_images(c), cc.theta());
        const LForm expected = LaurentPoly(c.pow(cc.delta())) * cc.theta();
        if (!(pulled == expected)) {
            scaled = false;
            scale_witness = "c = " + c.to_string() + ": R_c^* theta - c^delta theta = " + (pulled - expected).to_string();
            break;
        }
    }
    r.check("P2.scaling_pullback", scaled, [&] { return scale_witness; });

    const LForm top = cc.dtheta().power(cc.n() + 1);
    r.check("P3.top_power_nonzero", !top.is_zero(), [] { return std::string("(d theta)^(n+1) = 0"); });
    r.check("P3.poisson_inverse", cc.nondegenerate(),
            [&] { return "det W = " + cc.omega_determinant().to_string() + " is not a unit"; });
    bool pointwise = true;
    std::string pw_witness;
    for (int s = 0; s < samples; ++s) {
        const auto pt = cc.random_point(rng);
        const ScalarMatrix m = cc.dtheta().matrix_at(pt);
        if (determinant(m).is_zero()) {
            pointwise = false;
            pw_witness = "degenerate at sample " + std::to_string(s);
            break;
        }
    }
    r.check("P3.pointwise_nondegenerate", pointwise, [&] { return pw_witness; });

    if (cc.nondegenerate()) {
        const LField xi = euler_field(cc);
        const LForm res = interior(xi, cc.dtheta()) + cc.theta();
        r.check("euler.defining_equation", res.is_zero(), [&] { return "i_Xi dtheta + theta = " + res.to_string(); });
        const LaurentPoly txi = pair(cc.theta(), xi);
        r.check("euler.theta_of_euler_zero", txi.is_zero(), [&] { return "theta(Xi) = " + txi.to_string(); });
        // Xi = -(1/delta) V
        const LField expected = LaurentPoly(Scalar::ratio(-1, cc.delta())) * vert;
        r.check("euler.closed_form", xi == expected, [&] { return "Xi = " + xi.to_string(); });
    }
    return r;
}

/// X'_f components must be weighted-homogeneous of degree w_j + l - delta.
inline std::optional<std::string> scaling_law_violation(const ContactChart& cc, const LField& x, int ell)
{
    for (std::size_t j = 0; j < cc.chart()->dim(); ++j) {
        const auto& c = x.component(j);
        if (c.is_zero()) continue;
        const std::string& name = cc.chart()->coords()[j];
        const int expected = cc.weights().at(name) + ell - cc.delta();
        const auto got = weighted_degree(c, cc.weights());
        if (!got || *got != expected)
            return "component " + name + " = " + c.to_string() + " has weight " +
                   (got ? std::to_string(*got) : std::string("inhomogeneous")) + ", expected " + std::to_string(expected);
    }
    return std::nullopt;
}

/// Poisson bracket {f, g} = dtheta(X'_f, X'_g).
inline LaurentPoly poisson_bracket(const ContactChart& cc, const LaurentPoly& f, const LaurentPoly& g)
{
    return pair(cc.dtheta(), hamiltonian_field(cc, f), hamiltonian_field(cc, g));
}

inline Report check_lemma21(const ContactChart& cc, const HomogeneousFunction& f, const HomogeneousFunction& g)
{
    Report r;
    const LField xf = hamiltonian_field(cc, f.f);
    const LField xg = hamiltonian_field(cc, g.f);
    const Scalar d(cc.delta());

    auto theta_check = [&](const std::string& id, const HomogeneousFunction& h, const LField& xh) {
        const LaurentPoly lhs = pair(cc.theta(), xh);
        const LaurentPoly rhs = h.f * (Scalar(h.ell) / d);
        r.check(id, lhs == rhs, [&] { return "theta(X'_f) - (l/delta) f = " + (lhs - rhs).to_string(); });
    };
    theta_check("theta_of_Xf", f, xf);
    theta_check("theta_of_Xg", g, xg);

    auto degree_check = [&](const std::string& id, const HomogeneousFunction& h) {
        if (h.f.is_zero()) {
            r.check(id, true);
            return;
        }
        const auto e = degree_of(cc, h.f);
        const auto s = scaling_degree(cc, h.f);
        r.check(id, e && s && *e == *s && *e == h.ell, [&] {
            return "euler degree " + (e ? std::to_string(*e) : "none") + ", scaling degree " +
                   (s ? std::to_string(*s) : "none") + ", declared " + std::to_string(h.ell);
        });
    };
    degree_check("degree_euler_vs_scaling_f", f);
    degree_check("degree_euler_vs_scaling_g", g);

    const LaurentPoly pb = pair(cc.dtheta(), xf, xg);
    const LField lhs = lie_bracket(xf, xg);
    const LField rhs = hamiltonian_field(cc, pb);
    r.check("bracket_is_hamiltonian", lhs == rhs, [&] { return "[X'_f, X'_g] - X'_{dtheta(X'_f,X'_g)} = " + (lhs - rhs).to_string(); });

    const int expected = f.ell + g.ell - cc.delta();
    const auto pd = pb.is_zero() ? std::optional<int>(expected) : degree_of(cc, pb);
    r.check("poisson_degree", pd && *pd == expected, [&] {
        return "dtheta(X'_f, X'_g) = " + pb.to_string() + " has degree " + (pd ? std::to_string(*pd) : "none") +
               ", expected " + std::to_string(expected);
    });

    const auto vf = scaling_law_violation(cc, xf, f.ell);
    r.check("scaling_law_Xf", !vf, [&] { return *vf; });
    const auto vg = scaling_law_violation(cc, xg, g.ell);
    r.check("scaling_law_Xg", !vg, [&] { return *vg; });
    return r;
}

/// Degree-delta functions generate theta-preserving fields, and such a field Y
/// is recovered as X'_{theta(Y)}.
inline Report check_lemma22(const ContactChart& cc, const std::vector<HomogeneousFunction>& samples)
{
    Report r;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        const auto& s = samples[k];
        char id[32];
        std::snprintf(id, sizeof id, "sample%03zu", k);
        if (s.ell != cc.delta()) {
            r.fail(std::string(id) + ".degree", "sample of degree " + std::to_string(s.ell) + " != delta");
            continue;
        }
        const LField y = hamiltonian_field(cc, s.f);
        const LForm lie = lie_derivative(y, cc.theta());
        r.check(std::string(id) + ".lie_derivative_theta_zero", lie.is_zero(), [&] { return "L_Y theta = " + lie.to_string(); });
        const LaurentPoly ty = pair(cc.theta(), y);
        const auto dty = degree_of(cc, ty);
        const LField back = hamiltonian_field(cc, ty);
        const bool ok = (ty.is_zero() || (dty && *dty == cc.delta())) && (y - back).is_zero();
        r.check(std::string(id) + ".reconstruction", ok,
                [&] { return "theta(Y) = " + ty.to_string() + ", Y - X'_{theta(Y)} = " + (y - back).to_string(); });
    }
    return r;
}

struct RankSample {
    std::map<std::string, Scalar> point;
    std::size_t jacobian_rank = 0;
    std::size_t span_dim = 0;
    bool image_nonzero = false;
};

struct RankReport {
    std::size_t dim = 0;
    std::vector<RankSample> samples;

    /// Full Jacobian rank iff the Hamiltonian fields span the tangent space.
    bool consistent() const
    {
        for (const auto& s : samples) {
            if ((s.jacobian_rank == dim) != (s.span_dim == dim)) return false;
            if (s.jacobian_rank != s.span_dim) return false;
            if (s.jacobian_rank == dim && !s.image_nonzero) return false;
        }
        return true;
    }
    bool all_full() const
    {
        for (const auto& s : samples)
            if (s.jacobian_rank != dim || s.span_dim != dim) return false;
        return !samples.empty();
    }
};

/// Jacobian rank of F = (f_0..f_N) against dim span{X'_{f_j}} at each point.
inline RankReport immersion_rank(const ContactChart& cc, const std::vector<HomogeneousFunction>& fs,
                                 const std::vector<std::map<std::string, Scalar>>& points)
{
    if (fs.empty()) throw std::invalid_argument("immersion_rank needs at least one function");
    const int ell = fs.front().ell;
    if (ell == 0) throw std::invalid_argument("immersion_rank: degree 0 functions are rejected");
    for (const auto& f : fs)
        if (f.ell != ell) throw std::invalid_argument("immersion_rank: functions must share one degree");

    const auto& coords = cc.chart()->coords();
    RankReport rep;
    rep.dim = coords.size();
    std::vector<std::vector<LaurentPoly>> grads;
    std::vector<LField> fields;
    for (const auto& f : fs) {
        std::vector<LaurentPoly> g;
        for (const auto& v : coords) g.push_back(f.f.derivative(v));
        grads.push_back(std::move(g));
        fields.push_back(hamiltonian_field(cc, f.f));
    }
    for (const auto& pt : points) {
        if (cc.chart()->fibered() && pt.at(cc.chart()->fiber_var()).is_zero())
            throw std::invalid_argument("immersion_rank: fiber coordinate is zero at a sample point");
        RankSample s;
        s.point = pt;
        ScalarMatrix jac(fs.size(), coords.size());
        ScalarMatrix span(fs.size(), coords.size());
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = 0; j < coords.size(); ++j) jac(i, j) = grads[i][j].evaluate(pt);
            const ScalarVector xv = fields[i].evaluate(pt);
            for (std::size_t j = 0; j < coords.size(); ++j) span(i, j) = xv[j];
            if (!fs[i].f.evaluate(pt).is_zero()) s.image_nonzero = true;
        }
        s.jacobian_rank = rank(jac);
        s.span_dim = rank(span);
        rep.samples.push_back(std::move(s));
    }
    return rep;
}

}  // namespace contactlie
