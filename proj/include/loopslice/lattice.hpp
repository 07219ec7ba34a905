#pragma once

#include <random>
#include <vector>

#include "loopslice/fmatrix.hpp"
#include "loopslice/rational.hpp"

namespace loopslice {

enum class GroupContext { GL, OSp };
enum class Side { G, H }; // G: the rank-n group, H: the rank-m group

/// Weakly decreasing integer vector indexing an orbit.
struct Coweight {
    std::vector<long> entries;

    Coweight() = default;
    explicit Coweight(std::vector<long> e);

    bool operator==(const Coweight& o) const { return entries == o.entries; }
    std::string str() const;
};

/// Pair (v, v*) over F with its group context. For GL(n, m), v is m x n and
/// v* is n x m. For OSp(n, m), v is 2m x 2n and v* is the derived dual
/// (-v4^t, -v2^t, v3^t, v1^t), so the pair is determined by v alone.
struct LatticePair {
    GroupContext context = GroupContext::GL;
    int n = 0, m = 0;
    FMatrix v;
    FMatrix vstar;

    static LatticePair gl(FMatrix v, FMatrix vstar);
    static LatticePair osp(const FMatrix& v);
};

/// The OSp dual of a 2m x 2n matrix over F.
FMatrix osp_dual(const FMatrix& v);

/// A GL_m(O) x GL_n(O) change of basis. Acts on an m x n matrix as
/// left * x * right; on a pair, v* transforms by right^{-1} * v* * left^{-1}
/// so that v*v and vv* are conjugated.
struct OUnitTransform {
    FMatrix left;  // m x m, invertible over O
    FMatrix right; // n x n, invertible over O

    static OUnitTransform identity(int m, int n);
    FMatrix apply(const FMatrix& x) const { return left * x * right; }
    LatticePair apply(const LatticePair& p) const;
    /// this, then `second`.
    OUnitTransform then(const OUnitTransform& second) const;
};

/// True iff v*v and vv* both have all entries in O. Throws when an entry's
/// known terms vanish but its precision cannot certify integrality.
bool check_integrality(const LatticePair& p);

struct SmithResult {
    OUnitTransform transform;
    std::vector<long> exponents; // weakly decreasing; one per nonzero diagonal
    FMatrix reduced;             // left * v * right
};

/// Reduction of an F-matrix to diag(t^{-a_1}, ..., t^{-a_k}), zero-padded,
/// by elementary O-operations, a_1 >= ... >= a_k. Pivots take the
/// lowest-valuation entry, ties broken row-major.
SmithResult smith_diagonalize(const FMatrix& v);

struct GlNormalForm {
    Coweight coweight;
    OUnitTransform transform;
    LatticePair normal_form; // polar-part representatives modulo (V(O), V*(O))
};

/// Orbit reduction for the GL(n, m) context, n <= m: coweight
/// (a_1, ..., a_r, 0, ..., 0, -b_1, ..., -b_s) and the transform carrying
/// (v, v*) to the block normal form modulo (V(O), V*(O)).
GlNormalForm gl_normal_form(const LatticePair& p);

struct OspReduction {
    Coweight coweight;
    std::vector<long> a, b;
    FMatrix v2_sym, v3_sym; // post-symmetrization blocks, for verification
};

/// Orbit reduction for the OSp context: diagonalize v1 with global-minimum
/// pivoting, symmetrize v2 by Sym^2 O^m and v3 by Lambda^2 O^n, reduce the
/// v4 block, and merge exponent lists into one nonnegative coweight.
OspReduction sp_so_reduce(const FMatrix& v);
Coweight sp_so_normal_form(const FMatrix& v);

/// res(omega(v, g v)) for a Lie-algebra element g over O on the given side.
Rational moment_map(const LatticePair& p, const FMatrix& g, Side side);

// --- fixtures and randomized transforms (shared by tests and the
// --- acceptance suite) ---

/// The displayed GL block normal form for a coweight, at finite precision.
LatticePair gl_fixture(int n, int m, const Coweight& w, long prec);

/// The displayed OSp block normal form: diag(t^-a) in v1, diag(t^-b)
/// right-aligned in v4.
FMatrix osp_fixture(int n, int m, const std::vector<long>& a, const std::vector<long>& b,
                    long prec);

long rand_range(std::mt19937_64& rng, long lo, long hi);
Rational rand_rational(std::mt19937_64& rng);
/// Random element of O (a polynomial in t with small rational coefficients).
Laurent rand_O_element(std::mt19937_64& rng, long prec);
/// Random k x k matrix invertible over O, built from elementary operations.
FMatrix rand_O_unit(int k, std::mt19937_64& rng, long prec);
OUnitTransform rand_pair_transform(int n, int m, std::mt19937_64& rng, long prec);
/// Random element of O_{2n}(O) x Sp_{2m}(O) applied to v: block GL units,
/// Sym^2 O^m and Lambda^2 O^n unipotents.
FMatrix osp_random_transform(const FMatrix& v, std::mt19937_64& rng, long prec);

} // namespace loopslice
