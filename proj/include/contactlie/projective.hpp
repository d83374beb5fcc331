#pragma once

// Homogeneous polynomials on C^{N+1} \ 0 as sections of powers of the
// hyperplane bundle, and the Z_2 quotient of the Hopf model.

#include "contactlie/contact.hpp"
#include "contactlie/report.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace contactlie {

inline unsigned long long binomial(unsigned long long n, unsigned long long k)
{
    if (k > n) return 0;
    unsigned long long r = 1;
    for (unsigned long long j = 1; j <= k; ++j) r = r * (n - k + j) / j;
    return r;
}

/// dim O^m(C^{N+1} \ 0) = binomial(N+m, N).
inline unsigned long long homogeneous_space_dim(int N, int m)
{
    if (N < 1) throw std::invalid_argument("homogeneous_space_dim: N >= 1 required (C^1 \\ 0 has no polynomial model)");
    if (m < 0) throw std::invalid_argument("homogeneous_space_dim: m >= 0 required");
    return binomial(static_cast<unsigned long long>(N + m), static_cast<unsigned long long>(N));
}

/// Exponent vectors of degree m in N+1 variables, lexicographically decreasing.
inline std::vector<Monomial> monomial_basis(int N, int m)
{
    if (N < 0 || m < 0) throw std::invalid_argument("monomial_basis: negative argument");
    std::vector<Monomial> out;
    Monomial cur(static_cast<std::size_t>(N + 1), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
        if (k == cur.size() - 1) {
            cur[k] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[k] = e;
            rec(k + 1, left - e);
        }
    };
    rec(0, m);
    return out;
}

inline VarList hopf_variables(int N)
{
    VarList v;
    for (int k = 0; k <= N; ++k) v.push_back("z" + std::to_string(k));
    return v;
}

/// <eta^{(m)}, phi_f>: the symmetric tensor of f contracted with m copies of eta,
/// summed over all index tuples.
inline Scalar tautological_pairing(const MultiPoly& f, int N, int m, const ScalarVector& eta)
{
    if (eta.size() != static_cast<std::size_t>(N + 1)) throw std::invalid_argument("point has the wrong dimension");
    const VarList vars = hopf_variables(N);
    std::vector<Scalar> factorial(static_cast<std::size_t>(m + 1), Scalar(1));
    for (int k = 1; k <= m; ++k) factorial[k] = factorial[k - 1] * Scalar(k);

    Scalar sum(0);
    std::vector<int> tuple(static_cast<std::size_t>(m), 0);
    while (true) {
        Monomial alpha(static_cast<std::size_t>(N + 1), 0);
        Scalar prod(1);
        for (int i : tuple) {
            ++alpha[i];
            prod *= eta[i];
        }
        const Scalar c = detail::coefficient_of(f, vars, alpha);
        if (!c.is_zero()) {
            // phi_I = c_alpha * alpha! / m!
            Scalar weight = c / factorial[m];
            for (int a : alpha) weight *= factorial[a];
            sum += weight * prod;
        }
        std::size_t k = 0;
        while (k < tuple.size() && ++tuple[k] > N) tuple[k++] = 0;
        if (k == tuple.size()) break;
    }
    return sum;
}

inline ScalarVector negate_all(const ScalarVector& v)
{
    ScalarVector out;
    for (const auto& x : v) out.push_back(-x);
    return out;
}

/// Checks on C^{2n+2} \ 0 -> P_2 = (C^{2n+2} \ 0)/{+-1} with delta = 2.
inline Report quotient_check_hopf(int n, Rng& rng, int monomials = 100, int max_m = 3)
{
    if (n < 0) throw std::invalid_argument("quotient_check_hopf: n >= 0 required");
    Report r;
    const ContactChart cc = ContactChart::hopf(n);
    const auto& coords = cc.chart()->coords();
    const int N = 2 * n + 1;

    std::vector<LaurentPoly> minus;
    for (const auto& v : coords) minus.push_back(-cc.coord(v));
    const LForm theta_minus = pullback(cc.chart(), minus, cc.theta());
    r.check("parity.theta_invariant", theta_minus == cc.theta(), [&] { return "residual " + (theta_minus - cc.theta()).to_string(); });
    const LForm dtheta_minus = pullback(cc.chart(), minus, cc.dtheta());
    r.check("parity.dtheta_invariant", dtheta_minus == cc.dtheta(), [&] { return "residual " + (dtheta_minus - cc.dtheta()).to_string(); });

    // A monomial descends iff it is invariant under z -> -z; that must match
    // the parity of its degree, and even ones have integral downstairs degree.
    int even = 0, odd = 0;
    bool classified = true;
    std::string witness;
    const VarList vars = hopf_variables(N);
    for (int k = 0; k < monomials; ++k) {
        const int d = static_cast<int>(rng.uniform(0, 6));
        const LaurentPoly f(MultiPoly::monomial(vars, rng.monomial(vars.size(), d), Scalar(1)));
        const bool invariant = pullback_function(cc.chart(), minus, f) == f;
        const auto deg = degree_of(cc, f);
        const bool ok = deg && *deg == d && invariant == (d % 2 == 0);
        (invariant ? even : odd) += 1;
        if (!ok && classified) {
            classified = false;
            witness = f.to_string() + ": invariant=" + (invariant ? "yes" : "no") + ", degree " + std::to_string(d);
        }
    }
    r.check("descent.classification", classified, [&] { return witness; });
    r.check("descent.both_classes_sampled", even > 0 && odd > 0,
            [&] { return "even " + std::to_string(even) + ", odd " + std::to_string(odd); });

    // Even polynomials of degree 2m against degree-m polynomials in the
    // quadratic invariants z_a z_b.
    std::vector<Monomial> quadrics = monomial_basis(N, 2);
    for (int m = 0; m <= max_m; ++m) {
        const unsigned long long up = homogeneous_space_dim(N, 2 * m);
        std::set<Monomial> products{Monomial(static_cast<std::size_t>(N + 1), 0)};
        for (int step = 0; step < m; ++step) {
            std::set<Monomial> next;
            for (const auto& p : products)
                for (const auto& q : quadrics) {
                    Monomial s = p;
                    for (std::size_t k = 0; k < s.size(); ++k) s[k] += q[k];
                    next.insert(s);
                }
            products = std::move(next);
        }
        r.check("dimension.m" + std::to_string(m), up == products.size(), [&] {
            return "even degree " + std::to_string(2 * m) + ": " + std::to_string(up) + " vs " + std::to_string(products.size());
        });
    }

    // R~_t covers R_{t^2}: quadratic invariants and theta pick up (t^2)^1.
    bool equivariant = true;
    for (const Scalar& t : scaling_samples()) {
        const Scalar s = t * t;
        const auto images = cc.scaling_images(t);
        for (const auto& q : quadrics) {
            const LaurentPoly w(MultiPoly::monomial(vars, q, Scalar(1)));
            if (!(pullback_function(cc.chart(), images, w) == w * s)) equivariant = false;
        }
        if (!(pullback(cc.chart(), images, cc.theta()) == LaurentPoly(s) * cc.theta())) equivariant = false;
    }
    r.check("scaling.descended_degree_one", equivariant && cc.delta() == 2,
            [] { return std::string("theta or a quadratic invariant does not scale by t^2"); });
    return r;
}

}  // namespace contactlie
