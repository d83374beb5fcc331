#pragma once

// The minimal nilpotent orbit through e_rho: unipotent automorphisms, orbit
// points with their generating words, the form theta_G, the degree-one moment
// map and the projective embedding checks.

#include "contactlie/liealg.hpp"
#include "contactlie/linalg.hpp"
#include "contactlie/random.hpp"
#include "contactlie/report.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace contactlie {

using Word = std::vector<std::pair<Root, Scalar>>;

struct OrbitPoint {
    ScalarVector vector;
    Word word;
};

/// exp(t ad e_alpha) as a matrix; the series stops because ad e_alpha is nilpotent.
inline ScalarMatrix exp_ad(const LieAlgebra& g, const Root& alpha, const Scalar& t)
{
    const std::size_t n = g.dim();
    const std::size_t idx = g.root_index(alpha);
    ScalarVector x(n, Scalar(0));
    x[idx] = t;
    const ScalarMatrix a = g.ad(x);
    ScalarMatrix out = ScalarMatrix::identity(n);
    ScalarMatrix term = ScalarMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        term = a * term;
        if (term.is_zero()) return out;
        term = Scalar::ratio(1, static_cast<long>(k)) * term;
        out = out + term;
    }
    throw std::logic_error("ad e_alpha is not nilpotent");
}

inline ScalarMatrix word_matrix(const LieAlgebra& g, const Word& w)
{
    ScalarMatrix m = ScalarMatrix::identity(g.dim());
    for (const auto& [alpha, t] : w) m = m * exp_ad(g, alpha, t);
    return m;
}

/// M[x, y] = [Mx, My] on all basis pairs.
inline bool preserves_bracket(const LieAlgebra& g, const ScalarMatrix& m)
{
    const std::size_t n = g.dim();
    std::vector<ScalarVector> cols;
    for (std::size_t k = 0; k < n; ++k) cols.push_back(m.col(k));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            ScalarVector bij(n, Scalar(0));
            for (const auto& [k, c] : g.bracket_basis(i, j)) bij[k] = c;
            if (m * bij != g.bracket(cols[i], cols[j])) return false;
        }
    return true;
}

/// M^T G M = G.
inline bool preserves_killing(const KillingData& kd, const ScalarMatrix& m)
{
    return m.transpose() * kd.gram * m == kd.gram;
}

/// exp(t1 ad e_a1) ... exp(tk ad e_ak) e_rho.
inline OrbitPoint orbit_sample(const LieAlgebra& g, const Word& w)
{
    OrbitPoint p;
    p.word = w;
    p.vector = word_matrix(g, w) * g.basis_vector(g.e_rho());
    return p;
}

inline Word random_word(const LieAlgebra& g, Rng& rng, int max_len = 4)
{
    Word w;
    const long len = rng.uniform(1, max_len);
    const auto& roots = g.roots().roots();
    for (long k = 0; k < len; ++k) {
        const auto& a = roots[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(roots.size()) - 1))];
        w.emplace_back(a, rng.nonzero_rational());
    }
    return w;
}

/// <mu(pt), X_i> = B(pt, X_i).
inline ScalarVector moment_map(const KillingData& kd, const OrbitPoint& pt) { return kd.gram * pt.vector; }

/// kappa = flat^{-1} o mu.
inline ScalarVector kappa(const KillingData& kd, const ScalarVector& mu) { return solve(kd.gram, mu); }

/// theta_G at the Lie algebra level: kernel of B(e_rho, [., .]) is L_0,
/// theta_G kills C H_rho, and the weight-two scaling of e_rho.
inline Report theta_G_checks(const LieAlgebra& g, const KillingData& kd, const GradedDecomposition& gd)
{
    Report r;
    const std::size_t n = g.dim();
    const ScalarVector er = g.basis_vector(g.e_rho());
    ScalarMatrix k(n, n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarVector bij(n, Scalar(0));
            for (const auto& [idx, c] : g.bracket_basis(i, j)) bij[idx] = c;
            k(i, j) = killing_value(kd.gram, er, bij);
        }
    const Subspace ker = Subspace::span(kernel(k), n);
    const std::size_t expected = n - (gd.piece_dim(1) + 2);
    r.check("kernel_equals_L0", ker == gd.L0, [&] { return "kernel dim " + std::to_string(ker.dim()) + ", L0 dim " + std::to_string(gd.L0.dim()); });
    r.check("kernel_dim", ker.dim() == expected,
            [&] { return "kernel dim " + std::to_string(ker.dim()) + ", expected " + std::to_string(expected); });
    r.check("L0_decomposition", gd.L0 == gd.G00.sum(gd.piece(1)).sum(gd.piece(2)),
            [] { return std::string("L0 != G00 + G1 + G2"); });

    const Scalar th = killing_value(kd.gram, er, kd.hrho);
    r.check("theta_vanishes_on_H_rho", th.is_zero(), [&] { return "B(e_rho, H_rho) = " + th.to_string(); });

    const ScalarVector hr_er = g.bracket(kd.hrho, er);
    bool scaling = true;
    for (std::size_t i = 0; i < n && scaling; ++i) {
        const ScalarVector x = g.basis_vector(i);
        if (!(killing_value(kd.gram, hr_er, x) == Scalar(2) * killing_value(kd.gram, er, x))) scaling = false;
    }
    r.check("infinitesimal_scaling_weight_two", scaling, [] { return std::string("B([H_rho, e_rho], X) != 2 B(e_rho, X)"); });
    const Scalar chi = chi_differential(kd, g);
    r.check("chi_differential", chi == Scalar(2), [&] { return "d chi(H_rho) = " + chi.to_string(); });

    // Unipotent elements of L_0 fix e_rho, hence preserve theta_G.
    bool fixed = true;
    std::string witness;
    const auto& roots = g.roots().roots();
    for (std::size_t a = 0; a < roots.size(); ++a) {
        const ScalarVector ea = g.basis_vector(g.root_index(a));
        if (!gd.L0.contains(ea)) continue;
        for (const Scalar& t : {Scalar(1), Scalar::ratio(-5, 3)}) {
            if (!(exp_ad(g, roots[a], t) * er == er)) {
                fixed = false;
                witness = "exp(t ad e" + RootSystem::root_to_string(roots[a]) + ") moves e_rho";
            }
        }
    }
    r.check("unipotent_L0_fixes_e_rho", fixed, [&] { return witness; });

    const ScalarMatrix ad_er = g.ad_basis(g.e_rho());
    r.check("ad_e_rho_cubed_zero", (ad_er * ad_er * ad_er).is_zero(), [] { return std::string("(ad e_rho)^3 != 0"); });
    return r;
}

struct EmbeddingSample {
    ScalarVector point;
    std::size_t tangent_rank = 0;
};

struct EmbeddingReport {
    std::size_t expected_rank = 0;
    std::vector<EmbeddingSample> samples;
    std::vector<std::pair<std::size_t, std::size_t>> coincident;    ///< equal sample points, flagged only
    std::vector<std::pair<std::size_t, std::size_t>> proportional;  ///< distinct but projectively equal

    bool ranks_ok() const
    {
        for (const auto& s : samples)
            if (s.tangent_rank != expected_rank) return false;
        return true;
    }
};

/// Tangent rank of the cone over the orbit at each sample, dim span [G, pt],
/// and pairwise projective distinctness.
inline EmbeddingReport embedding_check(const LieAlgebra& g, const GradedDecomposition& gd, const std::vector<Word>& words)
{
    if (words.size() < 2) throw std::invalid_argument("embedding_check needs at least two sample words");
    const std::size_t n = g.dim();
    EmbeddingReport rep;
    rep.expected_rank = gd.piece_dim(1) + 2;
    for (const auto& w : words) {
        EmbeddingSample s;
        s.point = orbit_sample(g, w).vector;
        std::vector<ScalarVector> tangent{s.point};
        for (std::size_t k = 0; k < n; ++k) tangent.push_back(g.bracket(g.basis_vector(k), s.point));
        s.tangent_rank = rank(rows_matrix(tangent, n));
        rep.samples.push_back(std::move(s));
    }
    for (std::size_t a = 0; a < rep.samples.size(); ++a)
        for (std::size_t b = a + 1; b < rep.samples.size(); ++b) {
            if (rep.samples[a].point == rep.samples[b].point)
                rep.coincident.emplace_back(a, b);
            else if (rank(rows_matrix({rep.samples[a].point, rep.samples[b].point}, n)) < 2)
                rep.proportional.emplace_back(a, b);
        }
    return rep;
}

/// Automorphism, moment-map and equivariance checks on seeded words.
inline Report adjoint_suite(const LieAlgebra& g, const KillingData& kd, const GradedDecomposition& gd, Rng& rng, int samples)
{
    Report r;
    const std::size_t n = g.dim();
    const ScalarVector er = g.basis_vector(g.e_rho());

    bool brackets = true, killing_ok = true, inverse_ok = true;
    for (std::size_t a = 0; a < g.roots().size(); ++a) {
        const Root& alpha = g.roots().roots()[a];
        const Scalar t = rng.nonzero_rational();
        const ScalarMatrix m = exp_ad(g, alpha, t);
        brackets = brackets && preserves_bracket(g, m);
        killing_ok = killing_ok && preserves_killing(kd, m);
        inverse_ok = inverse_ok && (m * exp_ad(g, alpha, -t) == ScalarMatrix::identity(n));
    }
    r.check("automorphism.root_exponentials_preserve_bracket", brackets);
    r.check("automorphism.root_exponentials_preserve_killing", killing_ok);
    r.check("automorphism.exp_inverse", inverse_ok);

    const ScalarVector mu0 = moment_map(kd, {er, {}});
    bool mu_er = true;
    for (std::size_t i = 0; i < n; ++i)
        if (!(mu0[i] == (i == g.e_minus_rho() ? Scalar(-1) : Scalar(0)))) mu_er = false;
    r.check("moment.e_rho_pairs_only_with_e_minus_rho", mu_er);

    bool on_orbit = true, round_trip = true, equivariant = true, flat = true, coadjoint = true, word_auto = true;
    std::string witness;
    for (int s = 0; s < samples; ++s) {
        const Word w = random_word(g, rng);
        const OrbitPoint pt = orbit_sample(g, w);
        if (pt.vector == ScalarVector(n, Scalar(0)) || !killing_value(kd.gram, pt.vector, pt.vector).is_zero()) on_orbit = false;
        const ScalarVector k = kappa(kd, moment_map(kd, pt));
        if (k != pt.vector) {
            round_trip = false;
            witness = "sample " + std::to_string(s);
        }
        const ScalarMatrix m = word_matrix(g, random_word(g, rng, 2));
        if (s < 3) word_auto = word_auto && preserves_bracket(g, m) && preserves_killing(kd, m);
        const OrbitPoint moved{m * pt.vector, {}};
        if (kappa(kd, moment_map(kd, moved)) != m * k) equivariant = false;
        // (delta g) o flat = flat o (d g): inverse(M)^T G = G M
        if (s == 0 && !(inverse(m).transpose() * kd.gram == kd.gram * m)) flat = false;
        if (s < 3) {
            const ScalarMatrix minv = inverse(m);
            for (std::size_t i = 0; i < n && coadjoint; ++i)
                if (!(killing_value(kd.gram, moved.vector, g.basis_vector(i)) ==
                      killing_value(kd.gram, pt.vector, minv * g.basis_vector(i))))
                    coadjoint = false;
        }
    }
    r.check("orbit.points_isotropic_nonzero", on_orbit);
    r.check("moment.kappa_round_trip", round_trip, [&] { return witness; });
    r.check("moment.kappa_equivariant", equivariant);
    r.check("moment.flat_intertwines", flat);
    r.check("moment.coadjoint_equivariance", coadjoint);
    r.check("automorphism.words_preserve_bracket_and_killing", word_auto);

    std::vector<Word> words;
    for (int s = 0; s < std::max(samples / 2, 2); ++s) words.push_back(random_word(g, rng));
    const EmbeddingReport emb = embedding_check(g, gd, words);
    r.check("embedding.tangent_rank", emb.ranks_ok(), [&] {
        std::string out = "expected " + std::to_string(emb.expected_rank) + ", got";
        for (const auto& e : emb.samples) out += " " + std::to_string(e.tangent_rank);
        return out;
    });
    r.check("embedding.projectively_distinct", emb.proportional.empty(),
            [&] { return std::to_string(emb.proportional.size()) + " distinct but proportional pairs"; });
    return r;
}

}  // namespace contactlie
