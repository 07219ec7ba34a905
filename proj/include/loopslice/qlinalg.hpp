#pragma once

#include <vector>

#include "loopslice/poly.hpp"
#include "loopslice/rational.hpp"

namespace loopslice {

/// Dense rational matrix, row-major.
struct QMat {
    int rows = 0, cols = 0;
    std::vector<Rational> a;

    QMat() = default;
    QMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, Rational(0)) {}

    static QMat identity(int k);

    Rational& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const Rational& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    QMat operator*(const QMat& b) const;
    QMat operator+(const QMat& b) const;
    QMat operator-(const QMat& b) const;
    QMat operator-() const;
    QMat transpose() const;
    QMat scaled(const Rational& c) const;
    bool operator==(const QMat& b) const { return rows == b.rows && cols == b.cols && a == b.a; }
    bool is_zero() const;
};

inline QMat commutator(const QMat& x, const QMat& y) { return x * y - y * x; }

Rational qdet(QMat m);
int qrank(QMat m);
/// Basis of the right kernel {x : m x = 0}, as column vectors.
std::vector<std::vector<Rational>> qkernel(const QMat& m);
/// Inverse of a square nonsingular matrix; throws on singular input.
QMat qinverse(const QMat& m);
/// Monic characteristic polynomial det(xI - m), by Faddeev-LeVerrier.
Poly qcharpoly(const QMat& m);

} // namespace loopslice
