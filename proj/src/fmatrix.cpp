#include "loopslice/fmatrix.hpp"

#include <algorithm>

#include "loopslice/errors.hpp"

namespace loopslice {

FMatrix FMatrix::identity(int k) {
    FMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = Laurent::exact(Rational(1));
    return m;
}

FMatrix FMatrix::from_q(const QMat& q) {
    FMatrix m(q.rows, q.cols);
    for (int i = 0; i < q.rows; ++i)
        for (int j = 0; j < q.cols; ++j)
            if (!q.at(i, j).is_zero()) m.at(i, j) = Laurent::exact(q.at(i, j));
    return m;
}

FMatrix FMatrix::operator*(const FMatrix& b) const {
    if (cols != b.rows) throw internal_error("F-matrix product shape mismatch");
    FMatrix r(rows, b.cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            Laurent s = Laurent::zero();
            for (int k = 0; k < cols; ++k) s = s + at(i, k) * b.at(k, j);
            r.at(i, j) = s;
        }
    return r;
}

FMatrix FMatrix::operator+(const FMatrix& b) const {
    if (rows != b.rows || cols != b.cols) throw internal_error("F-matrix sum shape mismatch");
    FMatrix r = *this;
    for (size_t i = 0; i < e.size(); ++i) r.e[i] = r.e[i] + b.e[i];
    return r;
}

FMatrix FMatrix::operator-(const FMatrix& b) const { return *this + (-b); }

FMatrix FMatrix::operator-() const {
    FMatrix r = *this;
    for (auto& x : r.e) x = -x;
    return r;
}

FMatrix FMatrix::transpose() const {
    FMatrix r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

FMatrix FMatrix::scaled(const Laurent& c) const {
    FMatrix r = *this;
    for (auto& x : r.e) x = x * c;
    return r;
}

FMatrix FMatrix::submatrix(int r0, int r1, int c0, int c1) const {
    FMatrix r(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
    return r;
}

long FMatrix::min_precision() const {
    long p = Laurent::kInfPrec;
    for (const auto& x : e) p = std::min(p, x.precision());
    return p;
}

FMatrix FMatrix::polar_part() const {
    FMatrix r = *this;
    for (auto& x : r.e) x = x.polar_part();
    return r;
}

bool FMatrix::is_integral() const {
    bool ok = true;
    for (const auto& x : e) ok = x.is_integral() && ok;
    return ok;
}

FMatrix FMatrix::inverse() const {
    if (rows != cols) throw internal_error("inverse of non-square F-matrix");
    const int n = rows;
    FMatrix a = *this;
    FMatrix inv = FMatrix::identity(n);
    for (int k = 0; k < n; ++k) {
        // Pivot on the lowest-valuation decidable entry in column k.
        int piv = -1;
        long best = Laurent::kInfPrec;
        for (int i = k; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            if (a.at(i, k).valuation() < best) {
                best = a.at(i, k).valuation();
                piv = i;
            }
        }
        if (piv < 0) throw precondition_error("matrix inversion: no pivot decidable at precision");
        if (piv != k) {
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(piv, j), a.at(k, j));
                std::swap(inv.at(piv, j), inv.at(k, j));
            }
        }
        const Laurent pinv = a.at(k, k).inverse();
        for (int j = 0; j < n; ++j) {
            a.at(k, j) = a.at(k, j) * pinv;
            inv.at(k, j) = inv.at(k, j) * pinv;
        }
        for (int i = 0; i < n; ++i) {
            if (i == k || a.at(i, k).is_zero()) continue;
            const Laurent f = a.at(i, k);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = a.at(i, j) - f * a.at(k, j);
                inv.at(i, j) = inv.at(i, j) - f * inv.at(k, j);
            }
        }
    }
    return inv;
}

Laurent fdet(FMatrix m) {
    if (m.rows != m.cols) throw internal_error("determinant of non-square F-matrix");
    const int n = m.rows;
    Laurent det = Laurent::exact(Rational(1));
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        long best = Laurent::kInfPrec;
        for (int i = k; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            if (m.at(i, k).valuation() < best) {
                best = m.at(i, k).valuation();
                piv = i;
            }
        }
        if (piv < 0) {
            // Apparently-zero column: the determinant is zero to the
            // precision the column certifies.
            long p = Laurent::kInfPrec;
            for (int i = k; i < n; ++i) p = std::min(p, m.at(i, k).precision());
            return Laurent::zero(p);
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            det = -det;
        }
        det = det * m.at(k, k);
        const Laurent pinv = m.at(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            const Laurent f = m.at(i, k) * pinv;
            for (int j = k; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(k, j);
        }
    }
    return det;
}

} // namespace loopslice
