#include "loopslice/qlinalg.hpp"

#include <algorithm>

#include "loopslice/errors.hpp"

namespace loopslice {

QMat QMat::identity(int k) {
    QMat m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = Rational(1);
    return m;
}

QMat QMat::operator*(const QMat& b) const {
    if (cols != b.rows) throw internal_error("matrix product shape mismatch");
    QMat r(rows, b.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            const Rational& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols; ++j) r.at(i, j) += x * b.at(k, j);
        }
    return r;
}

QMat QMat::operator+(const QMat& b) const {
    if (rows != b.rows || cols != b.cols) throw internal_error("matrix sum shape mismatch");
    QMat r = *this;
    for (size_t i = 0; i < a.size(); ++i) r.a[i] += b.a[i];
    return r;
}

QMat QMat::operator-(const QMat& b) const { return *this + (-b); }

QMat QMat::operator-() const {
    QMat r = *this;
    for (auto& x : r.a) x = -x;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols, rows);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) r.at(j, i) = at(i, j);
    return r;
}

QMat QMat::scaled(const Rational& c) const {
    QMat r = *this;
    for (auto& x : r.a) x *= c;
    return r;
}

bool QMat::is_zero() const {
    return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational qdet(QMat m) {
    if (m.rows != m.cols) throw internal_error("determinant of non-square matrix");
    Rational det(1);
    const int n = m.rows;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        while (piv < n && m.at(piv, k).is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        const Rational inv = m.at(k, k).inverse();
        for (int i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            const Rational f = m.at(i, k) * inv;
            for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
        }
    }
    return det;
}

namespace {

// Reduced row echelon form in place; returns pivot column indices.
std::vector<int> rref(QMat& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int piv = row;
        while (piv < m.rows && m.at(piv, col).is_zero()) ++piv;
        if (piv == m.rows) continue;
        if (piv != row)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
        const Rational inv = m.at(row, col).inverse();
        for (int j = col; j < m.cols; ++j) m.at(row, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            const Rational f = m.at(i, col);
            for (int j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

int qrank(QMat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Rational>> qkernel(const QMat& m_in) {
    QMat m = m_in;
    const std::vector<int> pivots = rref(m);
    std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
    for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (is_pivot[static_cast<size_t>(free)]) continue;
        std::vector<Rational> v(static_cast<size_t>(m.cols), Rational(0));
        v[static_cast<size_t>(free)] = Rational(1);
        for (size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<size_t>(pivots[r])] = -m.at(static_cast<int>(r), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

QMat qinverse(const QMat& m_in) {
    if (m_in.rows != m_in.cols) throw internal_error("inverse of non-square matrix");
    const int n = m_in.rows;
    QMat aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m_in.at(i, j);
        aug.at(i, n + i) = Rational(1);
    }
    const auto pivots = rref(aug);
    if (static_cast<int>(pivots.size()) != n || pivots.back() != n - 1)
        throw precondition_error("inverse of singular matrix");
    QMat inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

Poly qcharpoly(const QMat& m) {
    if (m.rows != m.cols) throw internal_error("characteristic polynomial of non-square matrix");
    const int n = m.rows;
    // Faddeev-LeVerrier: p(x) = x^n + a1 x^{n-1} + ... + an.
    std::vector<Rational> coef(static_cast<size_t>(n) + 1, Rational(0));
    coef[static_cast<size_t>(n)] = Rational(1);
    QMat M(n, n);
    Rational prev_a(1);
    for (int k = 1; k <= n; ++k) {
        QMat ident = QMat::identity(n).scaled(prev_a);
        M = m * M + ident;
        QMat AM = m * M;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += AM.at(i, i);
        const Rational ak = -tr / Rational(k);
        coef[static_cast<size_t>(n - k)] = ak;
        prev_a = ak;
    }
    return Poly(std::move(coef));
}

} // namespace loopslice
