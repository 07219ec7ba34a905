#pragma once

#include <vector>

#include "loopslice/laurent.hpp"
#include "loopslice/qlinalg.hpp"

namespace loopslice {

/// Rectangular matrix over the Laurent series field, row-major. The common
/// minimum precision of the entries is the matrix precision.
struct FMatrix {
    int rows = 0, cols = 0;
    std::vector<Laurent> e;

    FMatrix() = default;
    FMatrix(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c) {}

    static FMatrix identity(int k);
    /// Exact lift of a rational matrix.
    static FMatrix from_q(const QMat& q);

    Laurent& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const Laurent& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    FMatrix operator*(const FMatrix& b) const;
    FMatrix operator+(const FMatrix& b) const;
    FMatrix operator-(const FMatrix& b) const;
    FMatrix operator-() const;
    FMatrix transpose() const;
    FMatrix scaled(const Laurent& c) const;
    FMatrix submatrix(int r0, int r1, int c0, int c1) const; // half-open ranges
    bool operator==(const FMatrix& b) const {
        return rows == b.rows && cols == b.cols && e == b.e;
    }

    long min_precision() const;
    /// Entry-wise class representatives modulo O (polar parts).
    FMatrix polar_part() const;
    /// True iff every entry certifies valuation >= 0; throws when undecidable.
    bool is_integral() const;

    /// Inverse of a square matrix with unit determinant over O (or more
    /// generally one whose pivots are decidable at precision).
    FMatrix inverse() const;
};

/// Determinant by Laurent Gaussian elimination (small matrices).
Laurent fdet(FMatrix m);

} // namespace loopslice
