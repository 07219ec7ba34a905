#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopslice/multipoly.hpp"
#include "loopslice/qlinalg.hpp"

namespace loopslice {

/// An sl2-triple: [e,f] = h, [h,e] = 2e, [h,f] = -2f.
struct Sl2Triple {
    QMat e, h, f;
};

/// The principal triple in gl_k: e the unit superdiagonal,
/// h = diag(k-1, k-3, ..., 1-k), f with subdiagonal i(k-i).
Sl2Triple principal_sl2(int k);

/// Basis of the centralizer {z in gl_m : [e, z] = 0} of the principal
/// nilpotent of gl_{m-n} embedded in the lower-right block, by solving the
/// exact linear system. dim = n^2 + 2n + (m-n) for m > n, m^2 for m = n.
std::vector<QMat> centralizer_basis(int n, int m);

struct SliceCoordinate {
    std::string name;
    int row = 0, col = 0; // position in the m x m slice matrix
    int grading = 0;      // 2 + ad(h)-weight of the position
};

/// Coordinate chart on the slice f + z(e) in gl_m: an n x n block x, a
/// column v, a row v*, and the Toeplitz band a_1..a_{m-n}; the subdiagonal
/// carries the structure constants c_i = i(m-n-i) of f.
struct SliceChart {
    int n = 0, m = 0;
    std::vector<SliceCoordinate> coords;
    std::vector<Rational> c;

    std::vector<std::string> coord_names() const;
    const SliceCoordinate& find(const std::string& name) const;
    /// Generic slice matrix over the polynomial ring on the coordinates.
    std::vector<std::vector<MultiPoly>> generic_matrix() const;
    /// Same, inside a larger ring containing all coordinate names.
    std::vector<std::vector<MultiPoly>> generic_matrix(
        const std::vector<std::string>& vars) const;
};

SliceChart build_slice_chart(int n, int m);

/// Cohomological degree of a chart coordinate: 2 for x, 2i for a_i,
/// m-n+1 for v and v* entries.
int grading_of(const SliceChart& chart, const std::string& coordinate);

/// Rational coordinates of a point of the slice.
struct SlicePoint {
    int n = 0, m = 0;
    QMat x;                      // n x n
    std::vector<Rational> v;     // n
    std::vector<Rational> vstar; // n
    std::vector<Rational> a;     // m - n
};

QMat assemble_slice_matrix(const SliceChart& chart, const SlicePoint& p);
std::map<std::string, Rational> point_values(const SliceChart& chart, const SlicePoint& p);

} // namespace loopslice
