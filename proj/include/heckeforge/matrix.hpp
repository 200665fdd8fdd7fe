// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "heckeforge/errors.hpp"
#include "heckeforge/rational.hpp"
#include "heckeforge/zmod.hpp"

namespace hf {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols, const T& fill = T()) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {}

    static Matrix identity(int n, const T& one) {
        Matrix m(n, n, one - one);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return r_; }
    int cols() const { return c_; }
    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * c_ + j)]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * c_ + j)]; }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (int i = 0; i < r_; ++i)
            for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        require(a.c_ == b.r_, "matrix size mismatch in product");
        Matrix m(a.r_, b.c_);
        for (int i = 0; i < a.r_; ++i)
            for (int k = 0; k < a.c_; ++k) {
                const T& x = a(i, k);
                if (hf::is_zero(x)) continue;
                for (int j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + x * b(k, j);
            }
        return m;
    }
    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, "matrix size mismatch in sum");
        Matrix m(a);
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] + b.a_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        require(a.r_ == b.r_ && a.c_ == b.c_, "matrix size mismatch in difference");
        Matrix m(a);
        for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] = m.a_[i] - b.a_[i];
        return m;
    }
    Matrix scaled(const T& s) const {
        Matrix m(*this);
        for (auto& x : m.a_) x = x * s;
        return m;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.r_ != b.r_ || a.c_ != b.c_) return false;
        for (std::size_t i = 0; i < a.a_.size(); ++i)
            if (!(a.a_[i] == b.a_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!hf::is_zero(x)) return false;
        return true;
    }
    T trace() const {
        T t = T();
        for (int i = 0; i < std::min(r_, c_); ++i) t = t + (*this)(i, i);
        return t;
    }
    Matrix column(int j) const {
        Matrix v(r_, 1);
        for (int i = 0; i < r_; ++i) v(i, 0) = (*this)(i, j);
        return v;
    }
    const std::vector<T>& data() const { return a_; }

private:
    int r_ = 0, c_ = 0;
    std::vector<T> a_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<Zmod>;

ZMatrix zmatrix(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t modulus);
ZMatrix reduce(const ZMatrix& m, std::uint64_t modulus);
ZMatrix hstack(const ZMatrix& a, const ZMatrix& b);

// Linear algebra over Z/p^e. With e = 1 these are field algorithms.
// Pivots are always units, so over a local ring a failed pivot search means
// the residual matrix is singular.
struct LocalLinalg {
    ResidueRing ring;

    // Rank of the reduction mod p.
    int residual_rank(const ZMatrix& m) const;
    bool is_invertible(const ZMatrix& m) const;
    std::optional<ZMatrix> inverse(const ZMatrix& m) const;
    // Determinant (exact when the matrix is invertible; otherwise the residue is 0
    // and the returned value is only guaranteed to be a non-unit).
    Zmod det(const ZMatrix& m) const;
    // Columns of m that form a basis of the column span, valid when the span is a
    // free direct summand (e.g. the image of an idempotent).
    ZMatrix summand_basis(const ZMatrix& m) const;
};

// Field-only helpers (F_p or Q).
template <class T>
struct FieldLinalg {
    // Reduced row echelon form in place; returns pivot columns.
    static std::vector<int> rref(Matrix<T>& m);
    static int rank(Matrix<T> m) { return static_cast<int>(rref(m).size()); }
    // Basis of the right kernel as columns of the returned matrix.
    static Matrix<T> kernel(const Matrix<T>& m, const T& one);
    static std::optional<Matrix<T>> inverse(const Matrix<T>& m, const T& one);
};

template <class T>
std::vector<int> FieldLinalg<T>::rref(Matrix<T>& m) {
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int sel = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!hf::is_zero(m(i, col))) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(row, j));
        T iv = inv(m(row, col));
        for (int j = 0; j < m.cols(); ++j) m(row, j) = m(row, j) * iv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || hf::is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (int j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    return piv;
}

template <class T>
Matrix<T> FieldLinalg<T>::kernel(const Matrix<T>& m, const T& one) {
    Matrix<T> r(m);
    auto piv = rref(r);
    std::vector<bool> is_piv(static_cast<std::size_t>(m.cols()), false);
    for (int c : piv) is_piv[static_cast<std::size_t>(c)] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_piv[static_cast<std::size_t>(c)]) free.push_back(c);
    Matrix<T> k(m.cols(), static_cast<int>(free.size()), one - one);
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], static_cast<int>(f)) = one;
        for (std::size_t i = 0; i < piv.size(); ++i) k(piv[i], static_cast<int>(f)) = -r(static_cast<int>(i), free[f]);
    }
    return k;
}

template <class T>
std::optional<Matrix<T>> FieldLinalg<T>::inverse(const Matrix<T>& m, const T& one) {
    int n = m.rows();
    require(n == m.cols(), "inverse of a non-square matrix");
    Matrix<T> aug(n, 2 * n, one - one);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
    Matrix<T> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

}  // namespace hf
