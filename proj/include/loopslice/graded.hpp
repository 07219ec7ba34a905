#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopslice/multipoly.hpp"
#include "loopslice/poly.hpp"

namespace loopslice {

/// Graded dimensions: degree -> dimension, finite support, no zeros stored.
using GradedDims = std::map<long, long>;

/// Shift [k]: labels drop by k (M[k]^d = M^{d+k}).
GradedDims gd_shift(const GradedDims& g, long k);
GradedDims gd_sum(const GradedDims& a, const GradedDims& b);
long gd_total(const GradedDims& g);

/// Truncated polynomial ring: variables with cohomological degrees and
/// truncation orders (var^trunc = 0). The truncation ideal is monomial, so
/// reduction just drops monomials past the bound.
struct TruncPolyRing {
    std::vector<std::string> vars;
    std::vector<int> degrees;
    std::vector<int> trunc;

    MultiPoly reduce(const MultiPoly& p) const;
    std::vector<MultiPoly::Expo> monomials() const;
    GradedDims graded_dims() const;
};

/// H^*(P^{n-1}): one degree-2 variable truncated at n.
TruncPolyRing proj_cohomology(int n);
/// H^*(P^{n-1} x P^{m-1}).
TruncPolyRing product_proj_ring(int n, int m);

struct ConeDims {
    GradedDims coker, ker;
};

/// Kernel and cokernel of multiplication by alpha + beta on
/// H^*(P^{n-1} x P^{m-1}), degreewise by exact linear algebra.
ConeDims cone_of_c1(int n, int m);

/// Stalk dimensions at 0: the truncation tau_{<= -1} of the c1 cone shifted
/// by [m+n-1]. Asserts both closed forms of the answer.
GradedDims stalk_ic(int n, int m);

/// Shift list (m-n-1, m-n-3, ..., -m+n+1) of the complementary summand,
/// computed from tau_{>= 2n} H^*(P^{m-1}) shifted by [m+n-1].
std::vector<long> decomposition_remainder(int n, int m);

/// Rational-function Poincare series: s^offset * num / prod (1-s^d)^mult.
struct PoincareSeries {
    Poly num{Rational(1)};
    long offset = 0;
    std::map<long, int> denom;

    /// Coefficients of degrees 0..order (negative degrees are rejected).
    std::vector<Rational> expand(long order) const;
    Rational coefficient(long k) const;
    long min_degree() const; // smallest degree with a nonzero coefficient
    PoincareSeries operator*(const PoincareSeries& o) const;
    PoincareSeries operator+(const PoincareSeries& o) const;
    /// Exact equality of rational functions (cross-multiplied).
    bool equals(const PoincareSeries& o) const;
};

/// 1 / prod_i (1 - s^{deg_i}) for a free commutative ring on the generators.
PoincareSeries free_ring_series(const std::vector<long>& gen_degrees);

/// Poincare series of Hom(delta * std, delta) bookkeeping: the sum over
/// j < n of A tensor A' shifted by [2j+1-m-n]; minimal degree m-n+1 with
/// coefficient 1.
PoincareSeries ext_poincare(int n, int m);

struct AlgebraCheckReport {
    bool series_ok = false;
    bool euler_ok = false;
    long first_mismatch = -1;
    Rational lhs_at_mismatch, rhs_at_mismatch;
    bool ok() const { return series_ok && euler_ok; }
};

/// The n = 1 coordinate-ring check for H = GL_m: the free polynomial ring
/// on a, e_1..e_{m-1}, x, y has the Hilbert series of A + sum_k A x^k +
/// sum_k A y^k (order `order`), and the Euler class of std expands as
/// a^m + e_1 a^{m-1} + ... + e_m.
AlgebraCheckReport gl1_algebra_check_report(int m, long order = 30);
bool gl1_algebra_check(int m);

/// Localization fixtures: the degree of the one-dimensional
/// Hom(i2* IC_0, i2* IC_k), i.e. C[-kn] for k >= 0 and C[2k-kn] for k <= 0.
long localization_hom_degree(long k, int n);

} // namespace loopslice
