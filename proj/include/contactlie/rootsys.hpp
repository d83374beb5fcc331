#pragma once

// Finite root systems from Cartan matrices.
//
// Convention: A[i][j] = <alpha_i, alpha_j^vee> = 2(alpha_i, alpha_j)/(alpha_j, alpha_j).
// With this convention G2 = [[2,-1],[-3,2]] has alpha_1 short and highest
// root 3*alpha_1 + 2*alpha_2. Roots are integer vectors over the simple roots.

#include "contactlie/scalar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace contactlie {

using Root = std::vector<int>;

class CartanMatrix {
public:
    CartanMatrix() = default;

    /// Validates the generalized-Cartan axioms, symmetrizability, finite type
    /// (positive-definite symmetrization) and connectedness.
    explicit CartanMatrix(std::vector<std::vector<int>> entries) : a_(std::move(entries))
    {
        const std::size_t n = a_.size();
        if (n == 0) throw std::invalid_argument("empty Cartan matrix");
        for (const auto& row : a_)
            if (row.size() != n) throw std::invalid_argument("Cartan matrix must be square");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j && a_[i][j] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
                if (i != j && a_[i][j] > 0) throw std::invalid_argument("Cartan matrix off-diagonal entries must be <= 0");
                if (i != j && (a_[i][j] == 0) != (a_[j][i] == 0))
                    throw std::invalid_argument("Cartan matrix: A[i][j] = 0 iff A[j][i] = 0 violated");
            }
        compute_symmetrizer();
        check_finite_type();
    }

    static CartanMatrix of_type(const std::string& name);
    static std::vector<std::string> shipped_types() { return {"A1", "A2", "A3", "B2", "C2", "B3", "C3", "G2"}; }

    std::size_t rank() const { return a_.size(); }
    int operator()(std::size_t i, std::size_t j) const { return a_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return a_; }

    /// (alpha_i, alpha_i)/2, scaled so the shortest simple root has value 1.
    const std::vector<Rational>& half_lengths() const { return d_; }

    /// Symmetric bilinear form (alpha_i, alpha_j) = A[i][j] * d_j.
    Rational simple_pairing(std::size_t i, std::size_t j) const { return Rational(a_[i][j]) * d_[j]; }

    Rational pairing(const Root& x, const Root& y) const
    {
        Rational s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (x[i] == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j)
                if (y[j] != 0) s += Rational(x[i] * y[j]) * simple_pairing(i, j);
        }
        return s;
    }

    /// <beta, alpha_j^vee> = sum_i beta_i A[i][j].
    int coroot_pairing(const Root& beta, std::size_t j) const
    {
        int s = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) s += beta[i] * a_[i][j];
        return s;
    }

private:
    void compute_symmetrizer()
    {
        const std::size_t n = a_.size();
        std::vector<std::optional<Rational>> d(n);
        d[0] = Rational(1);
        std::vector<std::size_t> queue{0};
        while (!queue.empty()) {
            std::size_t i = queue.back();
            queue.pop_back();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a_[i][j] == 0) continue;
                // A[i][j] d_j = A[j][i] d_i
                Rational dj = Rational(a_[j][i]) * *d[i] / Rational(a_[i][j]);
                if (!d[j]) {
                    d[j] = dj;
                    queue.push_back(j);
                } else if (*d[j] != dj) {
                    throw std::invalid_argument("Cartan matrix is not symmetrizable");
                }
            }
        }
        for (const auto& x : d)
            if (!x) throw std::invalid_argument("Cartan matrix is decomposable (Dynkin diagram not connected)");
        Rational smallest = *d[0];
        for (const auto& x : d) smallest = std::min(smallest, *x);
        d_.clear();
        for (const auto& x : d) d_.push_back(Rational(*x / smallest));
    }

    void check_finite_type() const
    {
        // Leading principal minors of the symmetrized matrix must be positive.
        const std::size_t n = a_.size();
        std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) s[i][j] = simple_pairing(i, j);
        for (std::size_t k = 0; k < n; ++k) {
            // Gaussian elimination keeps the pivots equal to ratios of minors.
            if (sgn(s[k][k]) <= 0) throw std::invalid_argument("Cartan matrix is not of finite type");
            for (std::size_t r = k + 1; r < n; ++r) {
                Rational f = s[r][k] / s[k][k];
                for (std::size_t c = k; c < n; ++c) s[r][c] -= f * s[k][c];
            }
        }
    }

    std::vector<std::vector<int>> a_;
    std::vector<Rational> d_;
};

inline CartanMatrix CartanMatrix::of_type(const std::string& name)
{
    static const std::map<std::string, std::vector<std::vector<int>>> table = {
        {"A1", {{2}}},
        {"A2", {{2, -1}, {-1, 2}}},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        // alpha_1 long, alpha_2 short
        {"B2", {{2, -2}, {-1, 2}}},
        // alpha_1 short, alpha_2 long
        {"C2", {{2, -1}, {-2, 2}}},
        {"B3", {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}},
        {"C3", {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
    };
    auto it = table.find(name);
    if (it == table.end()) throw std::invalid_argument("unknown root system type '" + name + "'");
    return CartanMatrix(it->second);
}

inline int height(const Root& r) { return std::accumulate(r.begin(), r.end(), 0); }

inline Root negate(Root r)
{
    for (auto& x : r) x = -x;
    return r;
}

inline Root add(Root a, const Root& b)
{
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

/// Lexicographic positivity: the first nonzero coordinate is positive.
inline bool lex_positive(const Root& r)
{
    for (int x : r)
        if (x != 0) return x > 0;
    return false;
}

class RootSystem {
public:
    /// Roots generated by simple-root strings.
    explicit RootSystem(CartanMatrix cartan) : cartan_(std::move(cartan))
    {
        const std::size_t n = cartan_.rank();
        std::set<Root> known;
        std::vector<std::vector<Root>> levels(1);
        for (std::size_t i = 0; i < n; ++i) {
            Root s(n, 0);
            s[i] = 1;
            levels[0].push_back(s);
            known.insert(s);
        }
        while (!levels.back().empty()) {
            std::vector<Root> next;
            for (const Root& beta : levels.back())
                for (std::size_t j = 0; j < n; ++j) {
                    // alpha_j-string through beta runs from beta - q alpha_j to beta + p alpha_j
                    int q = 0;
                    Root down = beta;
                    while (true) {
                        down[j] -= 1;
                        if (!known.count(down)) break;
                        ++q;
                    }
                    const int p = q - cartan_.coroot_pairing(beta, j);
                    if (p <= 0) continue;
                    Root up = beta;
                    up[j] += 1;
                    if (known.insert(up).second) next.push_back(up);
                }
            std::sort(next.begin(), next.end(), std::greater<>());
            levels.push_back(std::move(next));
        }
        std::vector<Root> positive;
        for (const auto& level : levels) positive.insert(positive.end(), level.begin(), level.end());
        for (const auto& r : positive) roots_.push_back(r);
        for (const auto& r : positive) roots_.push_back(negate(r));
        for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k], k);
        n_positive_ = positive.size();

        highest_ = 0;
        for (std::size_t k = 0; k < n_positive_; ++k)
            if (height(roots_[k]) > height(roots_[highest_])) highest_ = k;
        for (std::size_t k = 0; k < n_positive_; ++k)
            for (std::size_t i = 0; i < n; ++i)
                if (roots_[highest_][i] < roots_[k][i])
                    throw std::logic_error("highest root does not dominate every positive root");
    }

    const CartanMatrix& cartan() const { return cartan_; }
    std::size_t rank() const { return cartan_.rank(); }
    const std::vector<Root>& roots() const { return roots_; }
    std::size_t size() const { return roots_.size(); }
    std::size_t positive_count() const { return n_positive_; }
    bool is_positive(std::size_t k) const { return k < n_positive_; }
    std::size_t highest_index() const { return highest_; }
    const Root& highest() const { return roots_[highest_]; }

    std::optional<std::size_t> index_of(const Root& r) const
    {
        auto it = index_.find(r);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const Root& r) const { return index_.count(r) > 0; }
    std::size_t negative_of(std::size_t k) const { return k < n_positive_ ? k + n_positive_ : k - n_positive_; }

    Rational pairing(const Root& a, const Root& b) const { return cartan_.pairing(a, b); }

    /// alpha(H_rho) = 2 (alpha, rho)/(rho, rho); always in {-2,...,2}.
    int rho_height(const Root& alpha) const
    {
        if (!contains(alpha)) throw std::invalid_argument("rho_height: argument is not a root");
        Rational v = 2 * pairing(alpha, highest()) / pairing(highest(), highest());
        if (v.get_den() != 1) throw std::logic_error("non-integral rho height");
        return static_cast<int>(v.get_num().get_si());
    }

    /// Largest p with beta - p*alpha a root (beta itself must be a root).
    int string_down(const Root& alpha, const Root& beta) const
    {
        int p = 0;
        Root r = beta;
        while (true) {
            for (std::size_t k = 0; k < r.size(); ++k) r[k] -= alpha[k];
            if (!contains(r)) return p;
            ++p;
        }
    }
    /// Largest q with beta + q*alpha a root.
    int string_up(const Root& alpha, const Root& beta) const { return string_down(negate(alpha), beta); }

    static std::string root_to_string(const Root& r)
    {
        std::string s = "[";
        for (std::size_t k = 0; k < r.size(); ++k) s += (k ? "," : "") + std::to_string(r[k]);
        return s + "]";
    }

private:
    CartanMatrix cartan_;
    std::vector<Root> roots_;
    std::map<Root, std::size_t> index_;
    std::size_t n_positive_ = 0;
    std::size_t highest_ = 0;
};

inline RootSystem build_root_system(const CartanMatrix& cartan) { return RootSystem(cartan); }

}  // namespace contactlie
