#pragma once

// Simple Lie algebras from root systems.
//
// Basis order: h_1..h_r (simple coroots), then e_alpha in root-system order.
// Structure constants are first fixed as a Chevalley basis with extraspecial
// signs +, then the negative root vectors are rescaled so that
//   [e_alpha, e_{-alpha}] = -h_alpha,   B(e_alpha, e_{-alpha}) = -1,
// where h_alpha is the Killing dual of alpha.

#include "contactlie/linalg.hpp"
#include "contactlie/report.hpp"
#include "contactlie/rootsys.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace contactlie {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

namespace detail {

/// Chevalley constants N_{a,b} (roots given by index) following the standard
/// extraspecial-pair algorithm.
class ChevalleyConstants {
public:
    explicit ChevalleyConstants(const RootSystem& rs) : rs_(rs)
    {
        const std::size_t np = rs.positive_count();
        // positive roots grouped by their sum, processed by increasing height
        std::vector<std::size_t> order(np);
        for (std::size_t k = 0; k < np; ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(),
                         [&](auto a, auto b) { return height(rs.roots()[a]) < height(rs.roots()[b]); });
        for (std::size_t xi : order) {
            std::optional<std::pair<std::size_t, std::size_t>> extra;
            for (std::size_t a = 0; a < np; ++a) {
                for (std::size_t b = a + 1; b < np; ++b) {
                    if (add(rs.roots()[a], rs.roots()[b]) != rs.roots()[xi]) continue;
                    if (!extra) {
                        extra = {a, b};
                        positive_[{a, b}] = Rational(rs.string_down(rs.roots()[a], rs.roots()[b]) + 1);
                    } else {
                        positive_[{a, b}] = from_four_roots(a, b, extra->first, extra->second);
                    }
                }
            }
        }
    }

    /// N_{a,b}; zero when a + b is not a root.
    Rational operator()(std::size_t a, std::size_t b) const
    {
        const Root& ra = rs_.roots()[a];
        const Root& rb = rs_.roots()[b];
        const auto sum = rs_.index_of(add(ra, rb));
        if (!sum) return 0;
        const bool pa = rs_.is_positive(a), pb = rs_.is_positive(b);
        if (pa && pb) {
            if (a < b) return positive_.at({a, b});
            return -positive_.at({b, a});
        }
        if (!pa && !pb) return -(*this)(rs_.negative_of(a), rs_.negative_of(b));
        if (!pa) return -(*this)(b, a);
        // a > 0 > b, c = a + b; use N_{r1,r2}/(r3,r3) = N_{r2,r3}/(r1,r1) = N_{r3,r1}/(r2,r2)
        const std::size_t c = *sum;
        const Root& rc = rs_.roots()[c];
        if (rs_.is_positive(c)) {
            // triple (a, b, -c): N_{a,b} = (c,c)/(a,a) N_{b,-c} = -(c,c)/(a,a) N_{-b,c}
            return -len(rc) / len(ra) * (*this)(rs_.negative_of(b), c);
        }
        // triple (a, b, -c) with -c > 0: N_{a,b} = (c,c)/(b,b) N_{-c,a}
        return len(rc) / len(rb) * (*this)(rs_.negative_of(c), a);
    }

private:
    Rational len(const Root& r) const { return rs_.pairing(r, r); }

    // N_{a,b} from r1+r2+r3+r4 = 0 with (r1,r2,r3,r4) = (a, b, -g, -d), (g,d) extraspecial.
    Rational from_four_roots(std::size_t a, std::size_t b, std::size_t g, std::size_t d) const
    {
        const auto& R = rs_.roots();
        const std::size_t mg = rs_.negative_of(g), md = rs_.negative_of(d);
        Rational total = 0;
        const Root bg = add(R[b], R[mg]);
        if (rs_.contains(bg)) total += (*this)(b, mg) * (*this)(a, md) / len(bg);
        const Root ag = add(R[a], R[mg]);
        if (rs_.contains(ag)) total += (*this)(mg, a) * (*this)(b, md) / len(ag);
        const Rational n_gd = positive_.at({g, d});
        Rational value = len(add(R[a], R[b])) * total / n_gd;
        const Rational expected = rs_.string_down(R[a], R[b]) + 1;
        if (abs(value) != expected) throw std::logic_error("Chevalley constant has wrong magnitude");
        return value;
    }

    const RootSystem& rs_;
    std::map<std::pair<std::size_t, std::size_t>, Rational> positive_;
};

inline void add_to(SparseVec& v, std::size_t k, const Scalar& c)
{
    if (c.is_zero()) return;
    for (auto& [idx, x] : v)
        if (idx == k) {
            x += c;
            return;
        }
    v.emplace_back(k, c);
}

}  // namespace detail

class LieAlgebra {
public:
    explicit LieAlgebra(RootSystem rs) : rs_(std::move(rs))
    {
        const std::size_t r = rs_.rank(), nroots = rs_.size();
        dim_ = r + nroots;
        for (std::size_t i = 0; i < r; ++i) labels_.push_back("h" + std::to_string(i + 1));
        for (const auto& root : rs_.roots()) labels_.push_back("e" + RootSystem::root_to_string(root));

        detail::ChevalleyConstants N(rs_);
        chevalley_ = table_from(N, std::vector<Scalar>(dim_, Scalar(1)));

        // Cartan block of the Killing form: B(h_i, h_j) = sum_alpha alpha(h_i) alpha(h_j).
        ScalarMatrix bh(r, r, Scalar(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                for (const auto& root : rs_.roots())
                    bh(i, j) += Scalar(rs_.cartan().coroot_pairing(root, i) * rs_.cartan().coroot_pairing(root, j));

        // e_{-alpha} -> -c_alpha e_{-alpha}, c_alpha = 2 / B(alpha^vee, alpha^vee)
        scale_.assign(dim_, Scalar(1));
        for (std::size_t k = rs_.positive_count(); k < nroots; ++k) {
            const ScalarVector cv = coroot_coords(rs_.negative_of(k));
            Scalar b(0);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < r; ++j) b += cv[i] * cv[j] * bh(i, j);
            scale_[r + k] = -(Scalar(2) / b);
        }
        table_ = table_from(N, scale_);
    }

    const RootSystem& roots() const { return rs_; }
    std::size_t dim() const { return dim_; }
    std::size_t rank() const { return rs_.rank(); }
    const std::vector<std::string>& labels() const { return labels_; }
    std::size_t root_index(std::size_t k) const { return rs_.rank() + k; }
    std::size_t root_index(const Root& root) const
    {
        auto k = rs_.index_of(root);
        if (!k) throw std::invalid_argument("not a root: " + RootSystem::root_to_string(root));
        return rank() + *k;
    }
    std::size_t e_rho() const { return root_index(rs_.highest_index()); }
    std::size_t e_minus_rho() const { return root_index(rs_.negative_of(rs_.highest_index())); }

    /// [b_i, b_j] in the normalized basis.
    const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim_ + j]; }
    /// [b_i, b_j] in the unscaled Chevalley basis.
    const SparseVec& chevalley_bracket(std::size_t i, std::size_t j) const { return chevalley_[i * dim_ + j]; }
    /// Factor s_k with (normalized b_k) = s_k (Chevalley b_k).
    const Scalar& basis_scale(std::size_t k) const { return scale_[k]; }

    /// Coefficient of e_{a+b} in [e_a, e_b] (root indices), normalized basis.
    Scalar structure_constant(std::size_t a, std::size_t b) const
    {
        const auto sum = rs_.index_of(add(rs_.roots()[a], rs_.roots()[b]));
        if (!sum) return Scalar(0);
        for (const auto& [k, c] : bracket_basis(root_index(a), root_index(b)))
            if (k == root_index(*sum)) return c;
        return Scalar(0);
    }

    ScalarVector basis_vector(std::size_t k) const
    {
        ScalarVector v(dim_, Scalar(0));
        v[k] = Scalar(1);
        return v;
    }

    ScalarVector bracket(const ScalarVector& x, const ScalarVector& y) const
    {
        ScalarVector out(dim_, Scalar(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (y[j].is_zero()) continue;
                const Scalar xy = x[i] * y[j];
                for (const auto& [k, c] : bracket_basis(i, j)) out[k] += xy * c;
            }
        }
        return out;
    }

    /// Matrix of ad x (columns are images of basis vectors).
    ScalarMatrix ad(const ScalarVector& x) const
    {
        ScalarMatrix m(dim_, dim_, Scalar(0));
        for (std::size_t i = 0; i < dim_; ++i) {
            if (x[i].is_zero()) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                for (const auto& [k, c] : bracket_basis(i, j)) m(k, j) += x[i] * c;
        }
        return m;
    }
    ScalarMatrix ad_basis(std::size_t i) const { return ad(basis_vector(i)); }

    /// alpha^vee in the h-basis, for root index k.
    ScalarVector coroot_coords(std::size_t k) const
    {
        const Root& a = rs_.roots()[k];
        const Rational aa = rs_.pairing(a, a);
        ScalarVector out(rank(), Scalar(0));
        for (std::size_t i = 0; i < rank(); ++i)
            out[i] = Scalar(Rational(a[i] * 2 * rs_.cartan().half_lengths()[i] / aa));
        return out;
    }

private:
    std::vector<SparseVec> table_from(const detail::ChevalleyConstants& N, const std::vector<Scalar>& s) const
    {
        const std::size_t r = rank();
        std::vector<SparseVec> t(dim_ * dim_);
        auto at = [&](std::size_t i, std::size_t j) -> SparseVec& { return t[i * dim_ + j]; };
        const auto& R = rs_.roots();
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t k = 0; k < R.size(); ++k) {
                const Scalar v(rs_.cartan().coroot_pairing(R[k], i));
                if (v.is_zero()) continue;
                detail::add_to(at(i, r + k), r + k, v);
                detail::add_to(at(r + k, i), r + k, -v);
            }
        for (std::size_t a = 0; a < R.size(); ++a)
            for (std::size_t b = 0; b < R.size(); ++b) {
                const std::size_t ia = r + a, ib = r + b;
                if (b == rs_.negative_of(a)) {
                    // [e_a, e_{-a}] = a^vee (Chevalley), scaled
                    const ScalarVector cv = coroot_coords(a);
                    for (std::size_t i = 0; i < r; ++i) detail::add_to(at(ia, ib), i, s[ia] * s[ib] * cv[i]);
                    continue;
                }
                const auto sum = rs_.index_of(add(R[a], R[b]));
                if (!sum) continue;
                const std::size_t ic = r + *sum;
                detail::add_to(at(ia, ib), ic, s[ia] * s[ib] / s[ic] * Scalar(N(a, b)));
            }
        for (auto& v : t) std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        return t;
    }

    RootSystem rs_;
    std::size_t dim_ = 0;
    std::vector<std::string> labels_;
    std::vector<SparseVec> chevalley_;
    std::vector<SparseVec> table_;
    std::vector<Scalar> scale_;
};

inline LieAlgebra build_algebra(const RootSystem& rs) { return LieAlgebra(rs); }

struct KillingData {
    ScalarMatrix gram;                  ///< B(b_i, b_j)
    std::vector<ScalarVector> h_alpha;  ///< Killing dual of each root, full coordinates
    ScalarVector hrho;                  ///< H_rho = 2 h_rho / B(h_rho, h_rho)
};

inline Scalar killing_value(const ScalarMatrix& gram, const ScalarVector& x, const ScalarVector& y)
{
    Scalar s(0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero() && !gram(i, j).is_zero()) s += x[i] * gram(i, j) * y[j];
    }
    return s;
}

/// B(x, y) = trace(ad x ad y), then Killing duals of the roots and H_rho.
inline KillingData killing(const LieAlgebra& g)
{
    const std::size_t n = g.dim(), r = g.rank();
    std::vector<ScalarMatrix> ads;
    ads.reserve(n);
    for (std::size_t i = 0; i < n; ++i) ads.push_back(g.ad_basis(i));
    KillingData kd;
    kd.gram = ScalarMatrix(n, n, Scalar(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Scalar tr(0);
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    if (!ads[i](a, b).is_zero() && !ads[j](b, a).is_zero()) tr += ads[i](a, b) * ads[j](b, a);
            kd.gram(i, j) = tr;
            kd.gram(j, i) = tr;
        }

    ScalarMatrix cartan_gram(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) cartan_gram(i, j) = kd.gram(i, j);
    ScalarMatrix cinv;
    try {
        cinv = inverse(cartan_gram);
    } catch (const std::domain_error&) {
        throw std::domain_error("Killing form is degenerate on the Cartan subalgebra");
    }
    const auto& rs = g.roots();
    for (const auto& root : rs.roots()) {
        // B(h_alpha, h_j) = alpha(h_j)
        ScalarVector rhs(r);
        for (std::size_t j = 0; j < r; ++j) rhs[j] = Scalar(rs.cartan().coroot_pairing(root, j));
        ScalarVector h = cinv * rhs;
        h.resize(n, Scalar(0));
        kd.h_alpha.push_back(std::move(h));
    }
    const ScalarVector& hr = kd.h_alpha[rs.highest_index()];
    const Scalar scale = Scalar(2) / killing_value(kd.gram, hr, hr);
    kd.hrho = hr;
    for (auto& x : kd.hrho) x *= scale;
    return kd;
}

struct GradedDecomposition {
    std::map<int, std::vector<std::size_t>> pieces;  ///< eigenvalue of ad H_rho -> basis indices
    std::size_t ambient = 0;
    Subspace L, L0, G0, G00, G_minus, N;

    std::size_t piece_dim(int i) const
    {
        auto it = pieces.find(i);
        return it == pieces.end() ? 0 : it->second.size();
    }
    Subspace piece(int i) const
    {
        std::vector<ScalarVector> vs;
        for (std::size_t k : pieces.count(i) ? pieces.at(i) : std::vector<std::size_t>{}) {
            ScalarVector v(ambient, Scalar(0));
            v[k] = Scalar(1);
            vs.push_back(std::move(v));
        }
        return Subspace::span(vs, ambient);
    }
};

namespace detail {

inline Subspace span_of_indices(const std::vector<std::size_t>& idx, std::size_t n)
{
    std::vector<ScalarVector> vs;
    for (std::size_t k : idx) {
        ScalarVector v(n, Scalar(0));
        v[k] = Scalar(1);
        vs.push_back(std::move(v));
    }
    return Subspace::span(vs, n);
}

}  // namespace detail

/// Eigenspace split under ad H_rho together with L, L_0, G_00, G_-, N.
inline GradedDecomposition grade(const LieAlgebra& g, const KillingData& kd)
{
    const std::size_t n = g.dim();
    const ScalarMatrix adh = g.ad(kd.hrho);
    GradedDecomposition gd;
    gd.ambient = n;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j || adh(i, j).is_zero()) continue;
            throw std::logic_error("ad H_rho is not diagonal in the constructed basis");
        }
    for (std::size_t j = 0; j < n; ++j) {
        long ev = 0;
        if (!scalar_to_integer(adh(j, j), ev))
            throw std::logic_error("ad H_rho has a non-integer eigenvalue " + adh(j, j).to_string());
        if (ev < -2 || ev > 2) throw std::logic_error("ad H_rho eigenvalue outside -2..2");
        gd.pieces[static_cast<int>(ev)].push_back(j);
    }
    for (int i = -2; i <= 2; ++i) gd.pieces[i];

    // [G_i, G_j] in G_{i+j}
    for (const auto& [a, ia] : gd.pieces)
        for (const auto& [b, ib] : gd.pieces)
            for (std::size_t x : ia)
                for (std::size_t y : ib)
                    for (const auto& [k, c] : g.bracket_basis(x, y)) {
                        (void)c;
                        const auto& target = gd.pieces[a + b];
                        if (std::find(target.begin(), target.end(), k) == target.end())
                            throw std::logic_error("bracket violates the grading");
                    }

    std::vector<std::size_t> l_idx;
    for (int i = 0; i <= 2; ++i) l_idx.insert(l_idx.end(), gd.pieces[i].begin(), gd.pieces[i].end());
    gd.L = detail::span_of_indices(l_idx, n);
    gd.G0 = detail::span_of_indices(gd.pieces[0], n);

    // L_0 = ker ad e_rho
    gd.L0 = Subspace::span(kernel(g.ad_basis(g.e_rho())), n);
    gd.G00 = gd.G0.intersect(gd.L0);

    std::vector<std::size_t> minus = gd.pieces[-2];
    minus.insert(minus.end(), gd.pieces[-1].begin(), gd.pieces[-1].end());
    gd.G_minus = detail::span_of_indices(minus, n);
    gd.N = gd.G_minus.sum(Subspace::span({kd.hrho}, n));
    return gd;
}

struct G00Comparison {
    bool agree = false;
    std::size_t kernel_dim = 0;        ///< dim (G_0 ∩ ker ad e_rho)
    std::size_t bracket_dim = 0;       ///< dim of the e_rho-annihilating bracket combinations
    std::size_t plain_span_dim = 0;    ///< dim span [G_-1, G_1] without the constraint
};

/// G_00 a second way: combinations sum t_ab [x_a, y_b] (x_a in G_-1, y_b in G_1)
/// whose e_rho-component of [y_b, [x_a, e_rho]] cancels.
inline G00Comparison g00_compare(const GradedDecomposition& gd, const LieAlgebra& g)
{
    const std::size_t n = g.dim();
    const auto& xs = gd.pieces.at(-1);
    const auto& ys = gd.pieces.at(1);
    const ScalarVector er = g.basis_vector(g.e_rho());

    std::vector<ScalarVector> brackets;
    ScalarMatrix constraint(1, xs.size() * ys.size(), Scalar(0));
    std::size_t col = 0;
    for (std::size_t x : xs)
        for (std::size_t y : ys) {
            const ScalarVector xv = g.basis_vector(x), yv = g.basis_vector(y);
            brackets.push_back(g.bracket(xv, yv));
            constraint(0, col++) = g.bracket(yv, g.bracket(xv, er))[g.e_rho()];
        }

    G00Comparison out;
    out.kernel_dim = gd.G00.dim();
    out.plain_span_dim = Subspace::span(brackets, n).dim();
    std::vector<ScalarVector> combos;
    if (!brackets.empty()) {
        for (const auto& t : kernel(constraint)) {
            ScalarVector v(n, Scalar(0));
            for (std::size_t k = 0; k < t.size(); ++k)
                if (!t[k].is_zero())
                    for (std::size_t m = 0; m < n; ++m) v[m] += t[k] * brackets[k][m];
            combos.push_back(std::move(v));
        }
    }
    const Subspace via_brackets = Subspace::span(combos, n).intersect(gd.G0.dim() ? gd.G0 : Subspace(n));
    out.bracket_dim = via_brackets.dim();
    out.agree = via_brackets == gd.G00;
    return out;
}

inline bool g00_span_check(const GradedDecomposition& gd, const LieAlgebra& g) { return g00_compare(gd, g).agree; }

/// d chi_L(H_rho) = B([H_rho, e_rho], -e_{-rho}).
inline Scalar chi_differential(const KillingData& kd, const LieAlgebra& g)
{
    const ScalarVector x = g.bracket(kd.hrho, g.basis_vector(g.e_rho()));
    ScalarVector y = g.basis_vector(g.e_minus_rho());
    y[g.e_minus_rho()] = Scalar(-1);
    return killing_value(kd.gram, x, y);
}

namespace detail {

inline ScalarVector bracket_sparse(const LieAlgebra& g, const SparseVec& x, std::size_t k)
{
    ScalarVector out(g.dim(), Scalar(0));
    for (const auto& [m, c] : x)
        for (const auto& [t, d] : g.bracket_basis(m, k)) out[t] += c * d;
    return out;
}

}  // namespace detail

/// Structure checks on a built algebra: Jacobi and Killing invariance on all
/// basis triples, Cartan action, Weyl normalization, the product identity for
/// N_{a,b} N_{-a,-b}, and the highest-root grading.
inline Report algebra_suite(const LieAlgebra& g, const KillingData& kd, const GradedDecomposition& gd)
{
    Report r;
    const std::size_t n = g.dim();
    const auto& rs = g.roots();
    const ScalarVector zero(n, Scalar(0));

    std::string witness;
    bool jacobi = true;
    for (std::size_t i = 0; i < n && jacobi; ++i)
        for (std::size_t j = i + 1; j < n && jacobi; ++j)
            for (std::size_t k = j + 1; k < n && jacobi; ++k) {
                ScalarVector sum = detail::bracket_sparse(g, g.bracket_basis(i, j), k);
                const ScalarVector b = detail::bracket_sparse(g, g.bracket_basis(j, k), i);
                const ScalarVector c = detail::bracket_sparse(g, g.bracket_basis(k, i), j);
                for (std::size_t m = 0; m < n; ++m) sum[m] += b[m] + c[m];
                if (sum != zero) {
                    jacobi = false;
                    witness = g.labels()[i] + ", " + g.labels()[j] + ", " + g.labels()[k];
                }
            }
    r.check("jacobi", jacobi, [&] { return "fails on " + witness; });

    // B([x, y], z) = B(x, [y, z])
    bool invariant = true;
    for (std::size_t i = 0; i < n && invariant; ++i)
        for (std::size_t j = 0; j < n && invariant; ++j)
            for (std::size_t k = 0; k < n && invariant; ++k) {
                Scalar lhs(0), rhs(0);
                for (const auto& [m, c] : g.bracket_basis(i, j)) lhs += c * kd.gram(m, k);
                for (const auto& [m, c] : g.bracket_basis(j, k)) rhs += c * kd.gram(i, m);
                if (!(lhs == rhs)) {
                    invariant = false;
                    witness = g.labels()[i] + ", " + g.labels()[j] + ", " + g.labels()[k];
                }
            }
    r.check("killing_invariance", invariant, [&] { return "fails on " + witness; });

    bool cartan = true;
    for (std::size_t a = 0; a < rs.size() && cartan; ++a)
        for (std::size_t i = 0; i < g.rank(); ++i) {
            SparseVec expect;
            const int v = rs.cartan().coroot_pairing(rs.roots()[a], i);
            if (v != 0) expect.emplace_back(g.root_index(a), Scalar(v));
            if (g.bracket_basis(i, g.root_index(a)) != expect) {
                cartan = false;
                witness = "[" + g.labels()[i] + ", " + g.labels()[g.root_index(a)] + "]";
            }
        }
    r.check("cartan_action", cartan, [&] { return witness + " != alpha(h) e_alpha"; });

    bool weyl = true, pairing = true;
    for (std::size_t a = 0; a < rs.size(); ++a) {
        const std::size_t ea = g.root_index(a), fa = g.root_index(rs.negative_of(a));
        ScalarVector minus_h = kd.h_alpha[a];
        for (auto& x : minus_h) x = -x;
        if (g.bracket(g.basis_vector(ea), g.basis_vector(fa)) != minus_h) {
            weyl = false;
            witness = g.labels()[ea];
        }
        for (std::size_t b = 0; b < rs.size(); ++b) {
            const Scalar want = b == rs.negative_of(a) ? Scalar(-1) : Scalar(0);
            if (!(kd.gram(ea, g.root_index(b)) == want)) pairing = false;
        }
    }
    r.check("weyl_normalization", weyl, [&] { return "[" + witness + ", e_-alpha] != -h_alpha"; });
    r.check("killing_root_pairing", pairing, [] { return std::string("B(e_alpha, e_beta) != -delta_{beta,-alpha}"); });

    // N_{a,b} N_{-a,-b} = q (p + 1) / 2 * B(h_a, h_a)
    bool product = true;
    for (std::size_t a = 0; a < rs.size(); ++a)
        for (std::size_t b = 0; b < rs.size(); ++b) {
            if (!rs.contains(add(rs.roots()[a], rs.roots()[b]))) continue;
            const int p = rs.string_down(rs.roots()[a], rs.roots()[b]);
            const int q = rs.string_up(rs.roots()[a], rs.roots()[b]);
            const Scalar lhs = g.structure_constant(a, b) * g.structure_constant(rs.negative_of(a), rs.negative_of(b));
            const Scalar rhs = Scalar::ratio(q * (p + 1), 2) * killing_value(kd.gram, kd.h_alpha[a], kd.h_alpha[a]);
            if (!(lhs == rhs)) {
                product = false;
                witness = RootSystem::root_to_string(rs.roots()[a]) + ", " + RootSystem::root_to_string(rs.roots()[b]) +
                          ": " + lhs.to_string() + " vs " + rhs.to_string();
            }
        }
    r.check("structure_constant_product", product, [&] { return witness; });

    const ScalarVector er = g.basis_vector(g.e_rho());
    ScalarVector two_er = er;
    two_er[g.e_rho()] = Scalar(2);
    r.check("rho_of_H_rho", g.bracket(kd.hrho, er) == two_er, [] { return std::string("[H_rho, e_rho] != 2 e_rho"); });

    bool spectrum = true;
    for (const auto& [ev, idx] : gd.pieces)
        if (!idx.empty() && (ev < -2 || ev > 2)) spectrum = false;
    r.check("grading_spectrum", spectrum);
    r.check("grading_extremes", gd.piece_dim(2) == 1 && gd.piece_dim(-2) == 1, [&] {
        return "dim G_2 = " + std::to_string(gd.piece_dim(2)) + ", dim G_-2 = " + std::to_string(gd.piece_dim(-2));
    });
    const G00Comparison cmp = g00_compare(gd, g);
    r.check("g00_agreement", cmp.agree, [&] {
        return "kernel dim " + std::to_string(cmp.kernel_dim) + ", bracket dim " + std::to_string(cmp.bracket_dim);
    });
    return r;
}

}  // namespace contactlie
