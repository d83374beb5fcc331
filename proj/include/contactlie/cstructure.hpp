#pragma once

// c-structures induced by sections of a contact chart, and the check that
// (L*)^{n+1} and the canonical bundle share a transition cocycle.
//
// Chart i carries gamma_i. The transition phi_ij expresses the coordinates of
// chart j through those of chart i; f_ij is the function with
// gamma_i = f_ij * phi_ij^* gamma_j.

#include "contactlie/contact.hpp"
#include "contactlie/exterior.hpp"
#include "contactlie/ratfunc.hpp"
#include "contactlie/report.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace contactlie {

using RForm = Form<RationalFunction>;

/// A polynomial section of the total space over a base chart, together with
/// the (rational) projection back onto that chart.
struct Section {
    std::string label;
    Chart base;
    std::vector<RationalFunction> images;      ///< total-space coordinates on the base chart
    std::vector<RationalFunction> projection;  ///< base coordinates as functions of total-space coordinates
};

struct CChart {
    std::string label;
    Chart chart;
    RForm gamma;
};

struct Transition {
    std::size_t i = 0, j = 0;
    std::vector<RationalFunction> phi;  ///< chart-j coordinates in chart-i coordinates
    RationalFunction f;
    std::optional<RationalFunction> g;  ///< gauge with sigma_i = R_g sigma_j, when known
};

struct CStructureData {
    int n = 0;
    std::vector<CChart> charts;
    std::vector<Transition> transitions;
    Report report;  ///< (C.1), (C.2) and gauge checks made during construction
};

/// The same form with rational-function coefficients on a chart without a
/// distinguished fiber.
inline RForm to_rational(const Form<LaurentPoly>& a, const Chart& target)
{
    RForm out(target, a.degree());
    for (const auto& [idx, c] : a.terms()) out.add_term(idx, RationalFunction::from_laurent(c));
    return out;
}

inline Chart rational_chart(const ChartSpace& c) { return make_chart(c.coords()); }

namespace detail {

inline std::optional<RationalFunction> form_ratio(const RForm& a, const RForm& b)
{
    if (b.is_zero()) return std::nullopt;
    const auto& [idx, cb] = *b.terms().begin();
    const RationalFunction f = a.coefficient(idx) / cb;
    if (!(a == f * b)) return std::nullopt;
    return f;
}

inline std::vector<RationalFunction> compose(const Chart& inner_target, const std::vector<RationalFunction>& inner,
                                             const std::vector<RationalFunction>& outer)
{
    std::vector<RationalFunction> out;
    for (const auto& o : outer) out.push_back(pullback_function(inner_target, inner, o));
    return out;
}

}  // namespace detail

/// Charts, transitions and transition functions from explicit local forms.
/// `phis[(i,j)]` gives chart-j coordinates in chart-i coordinates.
inline CStructureData cstructure_from_forms(int n, std::vector<CChart> charts,
                                            const std::map<std::pair<std::size_t, std::size_t>, std::vector<RationalFunction>>& phis)
{
    CStructureData cs;
    cs.n = n;
    cs.charts = std::move(charts);
    for (std::size_t i = 0; i < cs.charts.size(); ++i) {
        const auto& c = cs.charts[i];
        if (static_cast<int>(c.chart->dim()) != 2 * n + 1)
            throw std::invalid_argument("c-structure chart " + c.label + " does not have dimension 2n+1");
        const RForm top = wedge(c.gamma, c.gamma.d().power(n));
        cs.report.check("C1." + c.label, !top.is_zero(), [] { return std::string("gamma ^ (d gamma)^n = 0"); });
    }
    for (const auto& [key, phi] : phis) {
        const auto [i, j] = key;
        const RForm pulled = pullback(cs.charts[i].chart, phi, cs.charts[j].gamma);
        const auto f = detail::form_ratio(cs.charts[i].gamma, pulled);
        if (!f)
            throw std::domain_error("overlap identity fails: gamma_" + cs.charts[i].label + " is not a multiple of gamma_" +
                                    cs.charts[j].label);
        cs.report.check("C2." + cs.charts[i].label + "_" + cs.charts[j].label, true);
        cs.transitions.push_back({i, j, phi, *f, std::nullopt});
    }
    return cs;
}

/// gamma_i = sigma_i^* theta for each section, with transitions between every
/// ordered pair and the gauge identity f_ij = g_ij^delta.
inline CStructureData reconstruct_cstructure(const ContactChart& cc, const std::vector<Section>& sections)
{
    const Chart total = rational_chart(*cc.chart());
    const RForm theta = to_rational(cc.theta(), total);
    const int n = cc.n();

    std::vector<CChart> charts;
    for (const auto& s : sections) {
        if (s.images.size() != total->dim()) throw std::invalid_argument("section " + s.label + " has the wrong number of components");
        if (s.projection.size() != s.base->dim()) throw std::invalid_argument("projection of " + s.label + " has the wrong size");
        const auto round_trip = detail::compose(total, s.images, s.projection);
        for (std::size_t k = 0; k < round_trip.size(); ++k)
            if (!(round_trip[k] == RationalFunction::variable(s.base->coords()[k])))
                throw std::invalid_argument("section " + s.label + " is not a section: projection gives " + round_trip[k].to_string());
        charts.push_back({s.label, s.base, pullback(s.base, s.images, theta)});
    }

    std::map<std::pair<std::size_t, std::size_t>, std::vector<RationalFunction>> phis;
    for (std::size_t i = 0; i < sections.size(); ++i)
        for (std::size_t j = 0; j < sections.size(); ++j)
            if (i != j) phis[{i, j}] = detail::compose(total, sections[i].images, sections[j].projection);
    CStructureData cs = cstructure_from_forms(n, std::move(charts), phis);

    for (auto& t : cs.transitions) {
        const auto& si = sections[t.i].images;
        // sigma_j o phi_ij, a point over the same base point as sigma_i
        const auto tau = detail::compose(sections[t.j].base, t.phi, sections[t.j].images);
        const std::string id = "gauge." + sections[t.i].label + "_" + sections[t.j].label;
        std::optional<RationalFunction> g;
        for (std::size_t k = 0; k < tau.size() && !g; ++k)
            if (cc.weights().at(cc.chart()->coords()[k]) == 1 && !tau[k].is_zero()) g = si[k] / tau[k];
        if (!g) {
            cs.report.fail(id, "no weight-one coordinate to read the gauge from");
            continue;
        }
        bool ok = true;
        std::string witness;
        for (std::size_t k = 0; k < tau.size(); ++k) {
            const RationalFunction expected = g->pow(cc.weights().at(cc.chart()->coords()[k])) * tau[k];
            if (!(si[k] == expected)) {
                ok = false;
                witness = "sigma_i != R_g sigma_j in coordinate " + cc.chart()->coords()[k];
            }
        }
        const RationalFunction gd = g->pow(cc.delta());
        if (ok && !(t.f == gd)) {
            ok = false;
            witness = "f = " + t.f.to_string() + " but g^delta = " + gd.to_string();
        }
        cs.report.check(id, ok, [&] { return witness; });
        t.g = g;
    }
    return cs;
}

/// Affine sections sigma_i(u) = (u_0, .., 1 at slot i, .., u_{2n+1}) of
/// C^{2n+2} \ 0 over the standard charts of P_{2n+1}.
inline std::vector<Section> hopf_sections(int n)
{
    const int N = 2 * n + 2;
    std::vector<Section> out;
    for (int i = 0; i < N; ++i) {
        std::vector<std::string> names;
        for (int j = 0; j < N; ++j)
            if (j != i) names.push_back("u" + std::to_string(j));
        Section s;
        s.label = "U" + std::to_string(i);
        s.base = make_chart(names);
        for (int j = 0; j < N; ++j)
            s.images.push_back(j == i ? RationalFunction(1) : RationalFunction::variable("u" + std::to_string(j)));
        const RationalFunction zi = RationalFunction::variable("z" + std::to_string(i));
        for (int j = 0; j < N; ++j)
            if (j != i) s.projection.push_back(RationalFunction::variable("z" + std::to_string(j)) / zi);
        out.push_back(std::move(s));
    }
    return out;
}

/// sigma(z) = (z, c) in a fibered chart.
inline Section constant_section(const ContactChart& cc, const std::string& label, const Scalar& c)
{
    if (!cc.chart()->fibered()) throw std::invalid_argument("constant sections need a fibered chart");
    Section s;
    s.label = label;
    s.base = make_chart(cc.chart()->base_vars());
    for (const auto& v : cc.chart()->base_vars()) {
        s.images.push_back(RationalFunction::variable(v));
        s.projection.push_back(RationalFunction::variable(v));
    }
    s.images.push_back(RationalFunction(c));
    return s;
}

/// P_1 with gamma_i = dz_i and z1 = 1/z0 on the overlap.
inline CStructureData p1_standard()
{
    const Chart c0 = make_chart({"z0"});
    const Chart c1 = make_chart({"z1"});
    std::vector<CChart> charts{{"U0", c0, RForm::differential(c0, "z0")}, {"U1", c1, RForm::differential(c1, "z1")}};
    std::map<std::pair<std::size_t, std::size_t>, std::vector<RationalFunction>> phis;
    phis[{0, 1}] = {RationalFunction::variable("z0").inverse()};
    phis[{1, 0}] = {RationalFunction::variable("z1").inverse()};
    return cstructure_from_forms(0, std::move(charts), phis);
}

/// Coefficient of the top form du_1 ^ .. ^ du_{2n+1}.
inline RationalFunction top_coefficient(const RForm& top)
{
    IndexTuple all(top.chart()->dim());
    for (std::size_t k = 0; k < all.size(); ++k) all[k] = static_cast<int>(k);
    return top.coefficient(all);
}

inline Matrix<RationalFunction> jacobian(const Chart& source, const std::vector<RationalFunction>& phi)
{
    Matrix<RationalFunction> m(phi.size(), source->dim());
    for (std::size_t a = 0; a < phi.size(); ++a)
        for (std::size_t b = 0; b < source->dim(); ++b) m(a, b) = phi[a].derivative(source->coords()[b]);
    return m;
}

/// f_ij^{n+1} against the canonical-bundle cocycle (c_i / c_j) / det(d phi_ij),
/// where gamma ^ (d gamma)^n = c * (volume form) in each chart.
inline Report canonical_cocycle_check(const CStructureData& cs, int n)
{
    if (cs.n != n) throw std::invalid_argument("c-structure dimension does not match n");
    Report r;
    std::vector<RForm> tops;
    for (const auto& c : cs.charts) tops.push_back(wedge(c.gamma, c.gamma.d().power(n)));
    if (cs.transitions.empty()) {
        r.check("single_chart", true);
        return r;
    }
    for (const auto& t : cs.transitions) {
        const auto& ci = cs.charts[t.i];
        const auto& cj = cs.charts[t.j];
        if (t.phi.size() != cj.chart->dim()) throw std::invalid_argument("charts are not pairwise comparable");
        const std::string id = ci.label + "_" + cj.label;
        const RationalFunction J = determinant(jacobian(ci.chart, t.phi));
        const RationalFunction c_i = top_coefficient(tops[t.i]);
        const RationalFunction c_j = pullback_function(cj.chart, t.phi, top_coefficient(tops[t.j]));
        const RationalFunction kz = c_i / c_j / J;
        const RationalFunction fn = t.f.pow(n + 1);
        r.check("cocycle." + id, fn == kz, [&] { return "f^(n+1) = " + fn.to_string() + ", K_Z cocycle = " + kz.to_string(); });
        const RForm lhs = tops[t.i];
        const RForm rhs = fn * pullback(ci.chart, t.phi, tops[t.j]);
        r.check("top_form." + id, lhs == rhs, [&] { return "residual " + (lhs - rhs).to_string(); });
    }
    return r;
}

}  // namespace contactlie
