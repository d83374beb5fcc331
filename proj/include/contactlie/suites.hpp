#pragma once

// Seeded verification runs shared by the command-line tool and the acceptance
// binary. Every randomized choice goes through one Rng built from the seed.

#include "contactlie/adjoint.hpp"
#include "contactlie/contact.hpp"
#include "contactlie/cstructure.hpp"
#include "contactlie/liealg.hpp"
#include "contactlie/projective.hpp"
#include "contactlie/random.hpp"
#include "contactlie/report.hpp"

#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace contactlie {

/// "hopf" ignores delta (always 2); "fibered" needs delta != 0.
inline ContactChart make_model(const std::string& model, int n, int delta)
{
    if (model == "hopf") return ContactChart::hopf(n);
    if (model == "fibered") return ContactChart::fibered(n, delta);
    throw std::invalid_argument("unknown model '" + model + "' (expected hopf or fibered)");
}

inline std::string indexed(const char* prefix, std::size_t k)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%s%03zu.", prefix, k);
    return buf;
}

/// A random function of weighted degree ell, or nothing when the chart has no
/// such functions (negative degrees on the all-weight-one chart).
inline std::optional<HomogeneousFunction> random_homogeneous(const ContactChart& cc, Rng& rng, int ell, int terms = 3)
{
    const auto& chart = *cc.chart();
    if (!chart.fibered()) {
        if (ell < 0) return std::nullopt;
        const MultiPoly p = rng.homogeneous(chart.coords(), ell, static_cast<int>(rng.uniform(1, terms)));
        return HomogeneousFunction{LaurentPoly(p), ell};
    }
    for (const auto& v : chart.base_vars())
        if (cc.weights().at(v) != 0) throw std::invalid_argument("random_homogeneous: base coordinates must have weight 0");
    const MultiPoly p = rng.polynomial(chart.base_vars(), 2, static_cast<int>(rng.uniform(1, terms)));
    return HomogeneousFunction{LaurentPoly::fiber_power(chart.fiber_var(), ell) * LaurentPoly(p, chart.fiber_var()), ell};
}

inline Report contact_suite(const ContactChart& cc, Rng& rng, int samples) { return verify_axioms(cc, rng, samples); }

/// Hamiltonian field identities on `pairs` random pairs of the given degrees, plus the
/// Poisson Jacobi identity on every fifth pair.
inline Report lemma21_suite(const ContactChart& cc, Rng& rng, int fdeg, int gdeg, int pairs)
{
    Report r;
    for (int k = 0; k < pairs; ++k) {
        const std::string prefix = indexed("pair", static_cast<std::size_t>(k));
        const auto f = random_homogeneous(cc, rng, fdeg);
        const auto g = random_homogeneous(cc, rng, gdeg);
        if (!f || !g) {
            r.skip(prefix + "unsupported_degree", "no functions of degree " + std::to_string(f ? gdeg : fdeg) + " on " + cc.name());
            continue;
        }
        r.append(check_lemma21(cc, *f, *g), prefix);
        if (k % 5 == 0) {
            const auto h = random_homogeneous(cc, rng, std::max(fdeg, 0));
            const auto pb = [&](const LaurentPoly& a, const LaurentPoly& b) { return poisson_bracket(cc, a, b); };
            const LaurentPoly jac = pb(f->f, pb(g->f, h->f)) + pb(g->f, pb(h->f, f->f)) + pb(h->f, pb(f->f, g->f));
            r.check(prefix + "poisson_jacobi", jac.is_zero(), [&] { return "cyclic sum = " + jac.to_string(); });
        }
    }
    return r;
}

inline Report lemma22_suite(const ContactChart& cc, Rng& rng, int samples)
{
    std::vector<HomogeneousFunction> fs;
    for (int k = 0; k < samples; ++k) fs.push_back(*random_homogeneous(cc, rng, cc.delta()));
    return check_lemma22(cc, fs);
}

/// P_1 with dz_i, then the four affine sections of C^4 \ 0 over P_3.
inline Report cocycle_suite()
{
    Report r;
    const CStructureData p1 = p1_standard();
    r.append(p1.report, "p1.");
    r.append(canonical_cocycle_check(p1, 0), "p1.");

    const ContactChart hopf = ContactChart::hopf(1);
    const CStructureData p3 = reconstruct_cstructure(hopf, hopf_sections(1));
    r.append(p3.report, "p3.");
    r.append(canonical_cocycle_check(p3, 1), "p3.");
    return r;
}

inline Report quotient_suite(int n, Rng& rng) { return quotient_check_hopf(n, rng, 100, 3); }

inline std::map<std::string, Scalar> nonzero_point(const ContactChart& cc, Rng& rng)
{
    while (true) {
        auto pt = cc.random_point(rng);
        bool any = false;
        for (const auto& [v, x] : pt) any = any || !x.is_zero();
        if (any) return pt;
    }
}

/// Hopf model: all degree-delta monomials give an immersion at every sampled
/// point, a single one does not.
inline Report immersion_suite(int n, Rng& rng, int points)
{
    Report r;
    const ContactChart cc = ContactChart::hopf(n);
    const VarList vars = cc.chart()->coords();
    std::vector<HomogeneousFunction> fs;
    for (const auto& m : monomial_basis(static_cast<int>(vars.size()) - 1, cc.delta()))
        fs.push_back({LaurentPoly(MultiPoly::monomial(vars, m, Scalar(1))), cc.delta()});
    std::vector<std::map<std::string, Scalar>> pts;
    for (int k = 0; k < points; ++k) pts.push_back(nonzero_point(cc, rng));

    const RankReport full = immersion_rank(cc, fs, pts);
    r.check("all_monomials.full_rank", full.all_full() && full.dim == static_cast<std::size_t>(2 * n + 2), [&] {
        std::string s = "ranks";
        for (const auto& x : full.samples) s += " " + std::to_string(x.jacobian_rank) + "/" + std::to_string(x.span_dim);
        return s;
    });
    r.check("all_monomials.jacobian_equals_span", full.consistent());

    const RankReport single = immersion_rank(cc, {fs.front()}, pts);
    bool deficient = true;
    for (const auto& s : single.samples) deficient = deficient && s.jacobian_rank < single.dim;
    r.check("single_function.deficient", deficient);
    r.check("single_function.jacobian_equals_span", single.consistent());
    return r;
}

struct AlgebraData {
    LieAlgebra g;
    KillingData kd;
    GradedDecomposition gd;
};

inline AlgebraData algebra_of_type(const std::string& type)
{
    LieAlgebra g(RootSystem(CartanMatrix::of_type(type)));
    KillingData kd = killing(g);
    GradedDecomposition gd = grade(g, kd);
    return {std::move(g), std::move(kd), std::move(gd)};
}

/// theta_G, automorphisms, moment map and embedding on `samples` orbit points.
inline Report adjoint_full_suite(const AlgebraData& a, Rng& rng, int samples)
{
    Report r;
    r.append(theta_G_checks(a.g, a.kd, a.gd), "theta_G.");
    r.append(adjoint_suite(a.g, a.kd, a.gd, rng, samples));
    return r;
}

}  // namespace contactlie
