#pragma once

// Dense exact matrices. Elimination routines (rank, kernel, inverse) need a
// field and are provided for Scalar; determinant and adjugate only need a
// commutative ring and work for polynomial entries too.

#include "contactlie/scalar.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace contactlie {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T()) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n)
    {
        Matrix m(n, n, T(0));
        for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<T>>& rows)
    {
        if (rows.empty()) return Matrix();
        Matrix m(rows.size(), rows.front().size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> row(std::size_t r) const { return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }
    std::vector<T> col(std::size_t c) const
    {
        std::vector<T> out(rows_);
        for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
        return out;
    }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b)
    {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix out(a.rows_, b.cols_, T(0));
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& x = a(r, k);
                if (is_zero_value(x)) continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!is_zero_value(b(k, c))) out(r, c) += x * b(k, c);
            }
        return out;
    }

    friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v)
    {
        if (a.cols_ != v.size()) throw std::invalid_argument("matrix/vector shape mismatch");
        std::vector<T> out(a.rows_, T(0));
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c)
                if (!is_zero_value(v[c]) && !is_zero_value(a(r, c))) out[r] += a(r, c) * v[c];
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b)
    {
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b)
    {
        for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
        return a;
    }
    friend Matrix operator*(const T& s, Matrix a)
    {
        for (auto& x : a.data_) x = s * x;
        return a;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    bool is_zero() const
    {
        for (const auto& x : data_)
            if (!is_zero_value(x)) return false;
        return true;
    }

    static bool is_zero_value(const T& x) { return x.is_zero(); }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;
using ScalarVector = std::vector<Scalar>;

/// Determinant by Laplace expansion along rows with memoised column subsets.
/// Exponential in n but division-free, so it works over any commutative ring.
template <class T>
T determinant(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return T(1);
    if (n > 20) throw std::invalid_argument("determinant: matrix too large for Laplace expansion");
    std::unordered_map<std::uint32_t, T> memo;
    // minor(rowStart, cols) = det of rows [rowStart, n) restricted to column mask
    auto rec = [&](auto&& self, std::size_t row, std::uint32_t mask) -> T {
        if (row == n) return T(1);
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        T sum(0);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const T& x = m(row, c);
            if (!x.is_zero()) {
                T sub = self(self, row + 1, mask & ~(1u << c));
                if (!sub.is_zero()) {
                    if (sign > 0) sum += x * sub;
                    else sum -= x * sub;
                }
            }
            sign = -sign;
        }
        memo.emplace(mask, sum);
        return sum;
    };
    return rec(rec, 0, (n == 32) ? 0xffffffffu : ((1u << n) - 1u));
}

/// Matrix with row r and column c removed.
template <class T>
Matrix<T> minor_matrix(const Matrix<T>& m, std::size_t r, std::size_t c)
{
    Matrix<T> out(m.rows() - 1, m.cols() - 1);
    for (std::size_t i = 0, oi = 0; i < m.rows(); ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, oj = 0; j < m.cols(); ++j) {
            if (j == c) continue;
            out(oi, oj++) = m(i, j);
        }
        ++oi;
    }
    return out;
}

/// Classical adjugate: adj(m) * m = det(m) * I.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m)
{
    const std::size_t n = m.rows();
    Matrix<T> adj(n, n, T(0));
    if (n == 1) {
        adj(0, 0) = T(1);
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            T d = determinant(minor_matrix(m, r, c));
            adj(c, r) = ((r + c) % 2 == 0) ? d : T(0) - d;
        }
    return adj;
}

/// Reduced row echelon form over Q(i); returns pivot columns.
inline std::vector<std::size_t> row_reduce(ScalarMatrix& m)
{
    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
        std::size_t sel = prow;
        while (sel < m.rows() && m(sel, c).is_zero()) ++sel;
        if (sel == m.rows()) continue;
        if (sel != prow)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(prow, k));
        const Scalar inv = m(prow, c).inverse();
        for (std::size_t k = c; k < m.cols(); ++k) m(prow, k) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == prow || m(r, c).is_zero()) continue;
            const Scalar f = m(r, c);
            for (std::size_t k = c; k < m.cols(); ++k)
                if (!m(prow, k).is_zero()) m(r, k) -= f * m(prow, k);
        }
        pivots.push_back(c);
        ++prow;
    }
    return pivots;
}

inline std::size_t rank(ScalarMatrix m) { return row_reduce(m).size(); }

/// Basis of {x : m x = 0}.
inline std::vector<ScalarVector> kernel(ScalarMatrix m)
{
    const auto pivots = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<ScalarVector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        ScalarVector v(m.cols(), Scalar(0));
        v[free] = Scalar(1);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

inline ScalarMatrix inverse(const ScalarMatrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
    ScalarMatrix aug(n, 2 * n, Scalar(0));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(1);
    }
    const auto pivots = row_reduce(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
    ScalarMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
    return out;
}

/// Solves m x = b for square nonsingular m.
inline ScalarVector solve(const ScalarMatrix& m, const ScalarVector& b)
{
    return inverse(m) * b;
}

/// Matrix whose rows are the given vectors.
inline ScalarMatrix rows_matrix(const std::vector<ScalarVector>& vs, std::size_t width)
{
    ScalarMatrix m(vs.size(), width, Scalar(0));
    for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t c = 0; c < width; ++c) m(r, c) = vs[r][c];
    return m;
}

/// A linear subspace of Q(i)^n held as a reduced row echelon basis, so that
/// equal subspaces have identical representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}

    static Subspace span(const std::vector<ScalarVector>& vs, std::size_t ambient)
    {
        Subspace s(ambient);
        if (vs.empty()) return s;
        ScalarMatrix m = rows_matrix(vs, ambient);
        const auto pivots = row_reduce(m);
        for (std::size_t r = 0; r < pivots.size(); ++r) s.basis_.push_back(m.row(r));
        return s;
    }

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<ScalarVector>& basis() const { return basis_; }

    bool contains(const ScalarVector& v) const
    {
        std::vector<ScalarVector> vs = basis_;
        vs.push_back(v);
        return rank(rows_matrix(vs, ambient_)) == basis_.size();
    }

    Subspace sum(const Subspace& o) const
    {
        std::vector<ScalarVector> vs = basis_;
        vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
        return span(vs, ambient_);
    }

    /// Intersection via the kernel of [A^T | -B^T].
    Subspace intersect(const Subspace& o) const
    {
        const std::size_t a = basis_.size(), b = o.basis_.size();
        if (a == 0 || b == 0) return Subspace(ambient_);
        ScalarMatrix m(ambient_, a + b, Scalar(0));
        for (std::size_t k = 0; k < ambient_; ++k) {
            for (std::size_t i = 0; i < a; ++i) m(k, i) = basis_[i][k];
            for (std::size_t j = 0; j < b; ++j) m(k, a + j) = -o.basis_[j][k];
        }
        std::vector<ScalarVector> vs;
        for (const auto& coeffs : kernel(m)) {
            ScalarVector v(ambient_, Scalar(0));
            for (std::size_t i = 0; i < a; ++i)
                if (!coeffs[i].is_zero())
                    for (std::size_t k = 0; k < ambient_; ++k) v[k] += coeffs[i] * basis_[i][k];
            vs.push_back(std::move(v));
        }
        return span(vs, ambient_);
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    std::vector<ScalarVector> basis_;
};

}  // namespace contactlie
