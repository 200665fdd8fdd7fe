// SPDX-License-Identifier: Apache-2.0
#include "heckeforge/matrix.hpp"

namespace hf {

ZMatrix zmatrix(const std::vector<std::vector<std::int64_t>>& rows, std::uint64_t modulus) {
    int r = static_cast<int>(rows.size());
    int c = r ? static_cast<int>(rows[0].size()) : 0;
    ZMatrix m(r, c, Zmod(0, modulus));
    for (int i = 0; i < r; ++i) {
        require(static_cast<int>(rows[static_cast<std::size_t>(i)].size()) == c, "ragged matrix rows");
        for (int j = 0; j < c; ++j) m(i, j) = Zmod(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], modulus);
    }
    return m;
}

ZMatrix reduce(const ZMatrix& m, std::uint64_t modulus) {
    ZMatrix r(m.rows(), m.cols(), Zmod(0, modulus));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Zmod(m(i, j).value(), modulus);
    return r;
}

ZMatrix hstack(const ZMatrix& a, const ZMatrix& b) {
    require(a.rows() == b.rows(), "hstack row mismatch");
    ZMatrix m(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

int LocalLinalg::residual_rank(const ZMatrix& m) const {
    return FieldLinalg<Zmod>::rank(reduce(m, ring.p));
}

bool LocalLinalg::is_invertible(const ZMatrix& m) const {
    return m.rows() == m.cols() && residual_rank(m) == m.rows();
}

std::optional<ZMatrix> LocalLinalg::inverse(const ZMatrix& m) const {
    int n = m.rows();
    require(n == m.cols(), "inverse of a non-square matrix");
    ZMatrix a = reduce(m, ring.modulus);
    ZMatrix inv = ZMatrix::identity(n, ring(1));
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col).is_unit()) {
                sel = i;
                break;
            }
        if (sel < 0) return std::nullopt;
        for (int j = 0; j < n; ++j) {
            std::swap(a(sel, j), a(col, j));
            std::swap(inv(sel, j), inv(col, j));
        }
        Zmod iv = a(col, col).inv();
        for (int j = 0; j < n; ++j) {
            a(col, j) *= iv;
            inv(col, j) *= iv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            Zmod f = a(i, col);
            for (int j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

Zmod LocalLinalg::det(const ZMatrix& m) const {
    int n = m.rows();
    require(n == m.cols(), "det of a non-square matrix");
    ZMatrix a = reduce(m, ring.modulus);
    Zmod d = ring(1);
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int i = col; i < n; ++i)
            if (a(i, col).is_unit()) {
                sel = i;
                break;
            }
        if (sel < 0) {
            // No unit pivot: residually singular. Fall back to a non-unit witness.
            Zmod acc = d;
            for (int i = col; i < n; ++i) acc *= a(i, i);
            return acc.is_unit() ? ring(0) : acc;
        }
        if (sel != col) {
            for (int j = 0; j < n; ++j) std::swap(a(sel, j), a(col, j));
            d = -d;
        }
        d *= a(col, col);
        Zmod iv = a(col, col).inv();
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col).is_zero()) continue;
            Zmod f = a(i, col) * iv;
            for (int j = col; j < n; ++j) a(i, j) -= f * a(col, j);
        }
    }
    return d;
}

ZMatrix LocalLinalg::summand_basis(const ZMatrix& m) const {
    ZMatrix red = reduce(m, ring.p);
    std::vector<int> cols;
    ZMatrix acc(m.rows(), 0);
    int rank = 0;
    for (int j = 0; j < m.cols(); ++j) {
        ZMatrix trial = hstack(acc, red.column(j));
        int r = FieldLinalg<Zmod>::rank(trial);
        if (r > rank) {
            acc = trial;
            rank = r;
            cols.push_back(j);
        }
    }
    ZMatrix b(m.rows(), static_cast<int>(cols.size()), ring(0));
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (int i = 0; i < m.rows(); ++i) b(i, static_cast<int>(k)) = m(i, cols[k]);
    return b;
}

}  // namespace hf
