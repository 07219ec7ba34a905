#pragma once

#include <string>
#include <vector>

#include "loopslice/poly.hpp"
#include "loopslice/slodowy.hpp"

namespace loopslice {

/// Monic characteristic polynomials (of the x block, of the whole slice
/// matrix), the value of the invariant map.
struct InvariantPair {
    Poly f, g;

    static InvariantPair make(Poly f, Poly g); // validates monic, deg f < deg g
    bool operator==(const InvariantPair& o) const { return f == o.f && g == o.g; }
};

InvariantPair invariant_map(const SliceChart& chart, const SlicePoint& p);

/// The structure constants of the factorization
///   det(lambda I - P) = chi_x(lambda) * q_band(lambda; a)
///                       + d_{m-n+1} * v* adj(lambda I - x) v,
/// verified as an exact symbolic identity over the chart coordinates.
/// q_band is the characteristic polynomial of the Toeplitz band block;
/// d_k is (-1)^k times its a_k lambda^{m-n-k} coefficient.
struct SliceConstants {
    int n = 0, m = 0;
    std::vector<Rational> d;            // d_1 .. d_{m-n+1}
    MultiPoly q_band;                   // ring: lm, a_1 .. a_{m-n}
    std::vector<std::string> band_vars; // that ring's variable list
};

SliceConstants derive_constants(int n, int m);

/// Band coordinates a_1..a_{m-n} with q_band(lambda; a) = q, solved
/// triangularly. q must be monic of degree m-n.
std::vector<Rational> solve_band(const SliceConstants& sc, const Poly& q);

enum class Stratum { Generic, ResultantZero, DoubleRoot };

struct FiberDescription {
    Stratum stratum = Stratum::Generic;
    std::string structure; // the fiber's group-theoretic shape
    InvariantPair invariants;
    SlicePoint base;
    std::vector<Rational> roots; // roots of f backing the base point
    std::vector<Rational> e;     // residue values e_i
    int pinched_index = -1;      // resultant stratum: the i0 with e_{i0} = 0
};

/// Fiber over (f, g) with disc(f) != 0, res(f, g) != 0, f split with
/// distinct rational roots: x = diag(roots), v = (1..1), v* = (e_i).
FiberDescription generic_fiber(const Poly& f, const Poly& g);

/// Fiber over (f, g) with disc(f) != 0 and res(f, g) = 0 at exactly one
/// root: the (X, Y) pinch with X*Y = 0.
FiberDescription resultant_stratum_fiber(const Poly& f, const Poly& g);

/// The pinched-fiber point at coordinates (X, Y).
SlicePoint resultant_stratum_point(const FiberDescription& fd, const Rational& X,
                                   const Rational& Y);

/// Fiber over (f, g) where f has exactly one double rational root and
/// res(f, g) != 0: x is the Jordan form, v = (0,1,...,1).
FiberDescription double_root_fiber(const Poly& f, const Poly& g);

/// (A x A^{-1}, A v, v* A^{-1}); the a-band is untouched.
SlicePoint transport(const SlicePoint& p, const QMat& A);

/// For two points of one generic fiber with diagonalizable x: the explicit
/// A with transport(p1, A) = p2, found by eigenbasis matching and diagonal
/// rescaling. Throws if the points are not related.
QMat find_fiber_isomorphism(const SliceChart& chart, const SlicePoint& p1, const SlicePoint& p2);

} // namespace loopslice
