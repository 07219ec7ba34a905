#include "loopslice/lattice.hpp"

#include <algorithm>
#include <sstream>

#include "loopslice/errors.hpp"

namespace loopslice {

Coweight::Coweight(std::vector<long> e) : entries(std::move(e)) {
    for (size_t i = 1; i < entries.size(); ++i)
        if (entries[i - 1] < entries[i])
            throw precondition_error("coweight entries must be weakly decreasing");
}

std::string Coweight::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size(); ++i) {
        if (i) os << ",";
        os << entries[i];
    }
    os << ")";
    return os.str();
}

LatticePair LatticePair::gl(FMatrix v, FMatrix vstar) {
    if (v.rows != vstar.cols || v.cols != vstar.rows)
        throw precondition_error("GL pair shape mismatch: v is m x n, v* must be n x m");
    LatticePair p;
    p.context = GroupContext::GL;
    p.m = v.rows;
    p.n = v.cols;
    p.v = std::move(v);
    p.vstar = std::move(vstar);
    return p;
}

FMatrix osp_dual(const FMatrix& v) {
    if (v.rows % 2 != 0 || v.cols % 2 != 0)
        throw precondition_error("OSp matrix must have even dimensions");
    const int m = v.rows / 2, n = v.cols / 2;
    const FMatrix v1 = v.submatrix(0, m, 0, n);
    const FMatrix v3 = v.submatrix(0, m, n, 2 * n);
    const FMatrix v2 = v.submatrix(m, 2 * m, 0, n);
    const FMatrix v4 = v.submatrix(m, 2 * m, n, 2 * n);
    FMatrix d(2 * n, 2 * m);
    const FMatrix b11 = -v4.transpose(); // Hom(F^m, F^n)
    const FMatrix b12 = v3.transpose();  // Hom((F^m)*, F^n)
    const FMatrix b21 = -v2.transpose(); // Hom(F^m, (F^n)*)
    const FMatrix b22 = v1.transpose();  // Hom((F^m)*, (F^n)*)
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            d.at(i, j) = b11.at(i, j);
            d.at(i, m + j) = b12.at(i, j);
            d.at(n + i, j) = b21.at(i, j);
            d.at(n + i, m + j) = b22.at(i, j);
        }
    return d;
}

LatticePair LatticePair::osp(const FMatrix& v) {
    LatticePair p;
    p.context = GroupContext::OSp;
    p.m = v.rows / 2;
    p.n = v.cols / 2;
    p.v = v;
    p.vstar = osp_dual(v);
    return p;
}

OUnitTransform OUnitTransform::identity(int m, int n) {
    return {FMatrix::identity(m), FMatrix::identity(n)};
}

LatticePair OUnitTransform::apply(const LatticePair& p) const {
    LatticePair q = p;
    q.v = left * p.v * right;
    q.vstar = right.inverse() * p.vstar * left.inverse();
    return q;
}

OUnitTransform OUnitTransform::then(const OUnitTransform& second) const {
    return {second.left * left, right * second.right};
}

bool check_integrality(const LatticePair& p) {
    const FMatrix sv = p.vstar * p.v;
    const FMatrix vs = p.v * p.vstar;
    return sv.is_integral() && vs.is_integral();
}

namespace {

struct Pivot {
    int i = -1, j = -1;
    long val = Laurent::kInfPrec;
};

} // namespace

SmithResult smith_diagonalize(const FMatrix& v) {
    FMatrix a = v;
    FMatrix left = FMatrix::identity(v.rows);
    FMatrix right = FMatrix::identity(v.cols);
    std::vector<long> exps;
    const int kmax = std::min(v.rows, v.cols);
    for (int k = 0; k < kmax; ++k) {
        Pivot p;
        for (int i = k; i < a.rows; ++i)
            for (int j = k; j < a.cols; ++j) {
                const Laurent& x = a.at(i, j);
                if (x.is_zero()) continue;
                if (x.valuation() < p.val) p = {i, j, x.valuation()};
            }
        if (p.i < 0) {
            long residual_prec = Laurent::kInfPrec;
            for (int i = k; i < a.rows; ++i)
                for (int j = k; j < a.cols; ++j)
                    residual_prec = std::min(residual_prec, a.at(i, j).precision());
            if (residual_prec < 0)
                throw precondition_error("insufficient precision to select a pivot");
            break;
        }
        if (p.i != k)
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(p.i, j), a.at(k, j));
        if (p.i != k)
            for (int j = 0; j < left.cols; ++j) std::swap(left.at(p.i, j), left.at(k, j));
        if (p.j != k) {
            for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, p.j), a.at(i, k));
            for (int i = 0; i < right.rows; ++i) std::swap(right.at(i, p.j), right.at(i, k));
        }
        const long e = -a.at(k, k).valuation();
        // Scale row k by the inverse of the pivot's unit part.
        const Laurent unit = a.at(k, k) * Laurent::exact(Rational(1), -p.val);
        if (!(unit.raw_coeffs().size() == 1 && unit.coeff(0).is_one() && unit.is_exact())) {
            const Laurent uinv = unit.inverse();
            for (int j = 0; j < a.cols; ++j) a.at(k, j) = a.at(k, j) * uinv;
            for (int j = 0; j < left.cols; ++j) left.at(k, j) = left.at(k, j) * uinv;
        }
        const Laurent pinv = a.at(k, k).inverse();
        for (int j = k + 1; j < a.cols; ++j) {
            if (a.at(k, j).is_zero()) continue;
            const Laurent q = a.at(k, j) * pinv;
            for (int i = 0; i < a.rows; ++i) a.at(i, j) = a.at(i, j) - q * a.at(i, k);
            for (int i = 0; i < right.rows; ++i)
                right.at(i, j) = right.at(i, j) - q * right.at(i, k);
        }
        for (int i = k + 1; i < a.rows; ++i) {
            if (a.at(i, k).is_zero()) continue;
            const Laurent q = a.at(i, k) * pinv;
            for (int j = 0; j < a.cols; ++j) a.at(i, j) = a.at(i, j) - q * a.at(k, j);
            for (int j = 0; j < left.cols; ++j) left.at(i, j) = left.at(i, j) - q * left.at(k, j);
        }
        exps.push_back(e);
    }
    for (size_t i = 1; i < exps.size(); ++i)
        if (exps[i - 1] < exps[i]) throw internal_error("smith exponents not weakly decreasing");
    return {{std::move(left), std::move(right)}, std::move(exps), std::move(a)};
}

namespace {

// I_off (+) b, as an identity matrix with b in the lower-right block.
FMatrix embed_block(int size, int off, const FMatrix& b) {
    FMatrix r = FMatrix::identity(size);
    for (int i = 0; i < b.rows; ++i)
        for (int j = 0; j < b.cols; ++j) r.at(off + i, off + j) = b.at(i, j);
    return r;
}

// Permutation sending visible positive exponents, reversed, to the tail.
// sigma(i) = size-1-i for i < s; i - s otherwise.
FMatrix tail_reversal_perm(int size, int s) {
    FMatrix p(size, size);
    for (int i = 0; i < size; ++i) {
        const int to = i < s ? size - 1 - i : i - s;
        p.at(to, i) = Laurent::exact(Rational(1));
    }
    return p;
}

} // namespace

GlNormalForm gl_normal_form(const LatticePair& p) {
    if (p.context != GroupContext::GL)
        throw precondition_error("gl_normal_form requires the GL context");
    if (p.n > p.m) throw precondition_error("gl_normal_form requires n <= m");
    if (!check_integrality(p))
        throw precondition_error("integrality violation: v*v or vv* has a pole");
    const int n = p.n, m = p.m;

    SmithResult s1 = smith_diagonalize(p.v);
    const LatticePair p1 = s1.transform.apply(p);
    int r = 0;
    for (long a : s1.exponents)
        if (a >= 1) ++r;
    std::vector<long> apart(s1.exponents.begin(), s1.exponents.begin() + r);

    // Reduce the complementary block of v* with GL_{n-r}(O) x GL_{m-r}(O).
    const FMatrix b = p1.vstar.submatrix(r, n, r, m);
    SmithResult s2 = smith_diagonalize(b);
    int s = 0;
    for (long be : s2.exponents)
        if (be >= 1) ++s;
    std::vector<long> bpart(s2.exponents.begin(), s2.exponents.begin() + s);

    // v* block moves by (P, Q); right-align the positive part in reverse.
    const FMatrix perm_rows = tail_reversal_perm(n - r, s);
    const FMatrix perm_cols = tail_reversal_perm(m - r, s);
    const FMatrix bp = perm_rows * s2.transform.left;
    const FMatrix bq = s2.transform.right * perm_cols.transpose();
    // Pair-consistent lift: v* -> (I + bp) v* (I + bq) corresponds to the
    // transform (left, right) = (I + bq^{-1}, I + bp^{-1}) acting on v.
    OUnitTransform t2{embed_block(m, r, bq.inverse()), embed_block(n, r, bp.inverse())};
    const LatticePair p2 = t2.apply(p1);

    std::vector<long> w = apart;
    w.resize(static_cast<size_t>(n - s), 0);
    for (int i = s - 1; i >= 0; --i) w.push_back(-bpart[static_cast<size_t>(i)]);
    Coweight cw(std::move(w));

    GlNormalForm out;
    out.coweight = std::move(cw);
    out.transform = s1.transform.then(t2);
    out.normal_form = p2;
    out.normal_form.v = p2.v.polar_part();
    out.normal_form.vstar = p2.vstar.polar_part();
    return out;
}

// ---------------------------------------------------------------------------
// OSp reduction
// ---------------------------------------------------------------------------

namespace {

struct OspBlocks {
    int n = 0, m = 0;
    FMatrix v1, v2, v3, v4; // each m x n
};

OspBlocks split_osp(const FMatrix& v) {
    const int m = v.rows / 2, n = v.cols / 2;
    return {n,
            m,
            v.submatrix(0, m, 0, n),
            v.submatrix(m, 2 * m, 0, n),
            v.submatrix(0, m, n, 2 * n),
            v.submatrix(m, 2 * m, n, 2 * n)};
}

FMatrix join_osp(const OspBlocks& b) {
    FMatrix v(2 * b.m, 2 * b.n);
    for (int i = 0; i < b.m; ++i)
        for (int j = 0; j < b.n; ++j) {
            v.at(i, j) = b.v1.at(i, j);
            v.at(i, b.n + j) = b.v3.at(i, j);
            v.at(b.m + i, j) = b.v2.at(i, j);
            v.at(b.m + i, b.n + j) = b.v4.at(i, j);
        }
    return v;
}

// e_i <-> e_i^* on the symplectic (rank-m) side, with the Sp sign.
void m_dual_swap(OspBlocks& b, int i) {
    for (int j = 0; j < b.n; ++j) {
        const Laurent t1 = b.v1.at(i, j), t2 = b.v2.at(i, j);
        b.v1.at(i, j) = -t2;
        b.v2.at(i, j) = t1;
        const Laurent t3 = b.v3.at(i, j), t4 = b.v4.at(i, j);
        b.v3.at(i, j) = -t4;
        b.v4.at(i, j) = t3;
    }
}

// e_j <-> e_j^* on the orthogonal (rank-n) side.
void n_dual_swap(OspBlocks& b, int j) {
    for (int i = 0; i < b.m; ++i) {
        std::swap(b.v1.at(i, j), b.v3.at(i, j));
        std::swap(b.v2.at(i, j), b.v4.at(i, j));
    }
}

void m_row_swap(OspBlocks& b, int i1, int i2) {
    for (int j = 0; j < b.n; ++j) {
        std::swap(b.v1.at(i1, j), b.v1.at(i2, j));
        std::swap(b.v2.at(i1, j), b.v2.at(i2, j));
        std::swap(b.v3.at(i1, j), b.v3.at(i2, j));
        std::swap(b.v4.at(i1, j), b.v4.at(i2, j));
    }
}

void n_col_swap(OspBlocks& b, int j1, int j2) {
    for (int i = 0; i < b.m; ++i) {
        std::swap(b.v1.at(i, j1), b.v1.at(i, j2));
        std::swap(b.v2.at(i, j1), b.v2.at(i, j2));
        std::swap(b.v3.at(i, j1), b.v3.at(i, j2));
        std::swap(b.v4.at(i, j1), b.v4.at(i, j2));
    }
}

// GL_m element diag(..., u at row k, ...): scales (v1, v3) row k by u and
// (v2, v4) row k by u^{-1}.
void m_row_scale(OspBlocks& b, int k, const Laurent& u, const Laurent& uinv) {
    for (int j = 0; j < b.n; ++j) {
        b.v1.at(k, j) = b.v1.at(k, j) * u;
        b.v3.at(k, j) = b.v3.at(k, j) * u;
        b.v2.at(k, j) = b.v2.at(k, j) * uinv;
        b.v4.at(k, j) = b.v4.at(k, j) * uinv;
    }
}

// GL_n column operation col_j -= q col_k on (v1, v2); the dual blocks
// (v3, v4) transform by the inverse transpose: col_k += q col_j.
void n_col_op(OspBlocks& b, int j, int k, const Laurent& q) {
    for (int i = 0; i < b.m; ++i) {
        b.v1.at(i, j) = b.v1.at(i, j) - q * b.v1.at(i, k);
        b.v2.at(i, j) = b.v2.at(i, j) - q * b.v2.at(i, k);
        b.v3.at(i, k) = b.v3.at(i, k) + q * b.v3.at(i, j);
        b.v4.at(i, k) = b.v4.at(i, k) + q * b.v4.at(i, j);
    }
}

// GL_m row operation row_i -= q row_k on (v1, v3); (v2, v4) transform by
// the inverse transpose: row_k += q row_i.
void m_row_op(OspBlocks& b, int i, int k, const Laurent& q) {
    for (int j = 0; j < b.n; ++j) {
        b.v1.at(i, j) = b.v1.at(i, j) - q * b.v1.at(k, j);
        b.v3.at(i, j) = b.v3.at(i, j) - q * b.v3.at(k, j);
        b.v2.at(k, j) = b.v2.at(k, j) + q * b.v2.at(i, j);
        b.v4.at(k, j) = b.v4.at(k, j) + q * b.v4.at(i, j);
    }
}

// Diagonalize v1 with the pivot chosen as the lowest-valuation entry across
// all four blocks (ties: block order v1, v2, v3, v4, then row-major); dual
// swaps move entries of v2/v3/v4 into v1.
std::vector<long> osp_phase1(OspBlocks& b) {
    std::vector<long> exps;
    for (int k = 0; k < b.n; ++k) {
        const FMatrix* blocks[4] = {&b.v1, &b.v2, &b.v3, &b.v4};
        int bi = -1, pi = -1, pj = -1;
        long best = Laurent::kInfPrec;
        for (int t = 0; t < 4; ++t)
            for (int i = k; i < b.m; ++i)
                for (int j = k; j < b.n; ++j) {
                    const Laurent& x = blocks[t]->at(i, j);
                    if (x.is_zero()) continue;
                    if (x.valuation() < best) {
                        best = x.valuation();
                        bi = t;
                        pi = i;
                        pj = j;
                    }
                }
        if (bi < 0) {
            long residual = Laurent::kInfPrec;
            for (int t = 0; t < 4; ++t)
                for (int i = k; i < b.m; ++i)
                    for (int j = k; j < b.n; ++j)
                        residual = std::min(residual, blocks[t]->at(i, j).precision());
            if (residual < 0)
                throw precondition_error("insufficient precision to select a pivot");
            break;
        }
        if (bi == 1 || bi == 3) m_dual_swap(b, pi);
        if (bi == 2 || bi == 3) n_dual_swap(b, pj);
        if (pi != k) m_row_swap(b, pi, k);
        if (pj != k) n_col_swap(b, pj, k);
        const long e = -b.v1.at(k, k).valuation();
        const Laurent unit = b.v1.at(k, k) * Laurent::exact(Rational(1), e);
        if (!(unit.raw_coeffs().size() == 1 && unit.coeff(0).is_one() && unit.is_exact())) {
            const Laurent uinv = unit.inverse();
            m_row_scale(b, k, uinv, unit);
        }
        const Laurent pinv = b.v1.at(k, k).inverse();
        for (int j = k + 1; j < b.n; ++j) {
            if (b.v1.at(k, j).is_zero()) continue;
            n_col_op(b, j, k, b.v1.at(k, j) * pinv);
        }
        for (int i = k + 1; i < b.m; ++i) {
            if (b.v1.at(i, k).is_zero()) continue;
            m_row_op(b, i, k, b.v1.at(i, k) * pinv);
        }
        exps.push_back(e);
    }
    return exps;
}

} // namespace

OspReduction sp_so_reduce(const FMatrix& v) {
    if (v.rows % 2 != 0 || v.cols % 2 != 0)
        throw precondition_error("OSp matrix must have even dimensions");
    {
        const LatticePair p = LatticePair::osp(v);
        if (p.n > p.m) throw precondition_error("sp_so_normal_form requires n <= m");
        if (!check_integrality(p))
            throw precondition_error("integrality violation: v*v or vv* has a pole");
    }
    OspBlocks b = split_osp(v);
    const int n = b.n, m = b.m;

    std::vector<long> a = osp_phase1(b);
    int r = 0;
    for (long e : a)
        if (e >= 1) ++r;

    // Symmetrize v2 with Y in Sym^2 O^m: v2 -= Y v1, v4 -= Y v3, where
    // Y_{pq} = Y_{qp} = t^{a_p} (v2)_{qp} for p < r <= q (p the smaller index).
    FMatrix y(m, m);
    for (int p = 0; p < r; ++p)
        for (int q = p; q < m; ++q) {
            const Laurent x = Laurent::exact(Rational(1), a[static_cast<size_t>(p)]) *
                              b.v2.at(q, p);
            y.at(p, q) = x;
            y.at(q, p) = x;
        }
    b.v2 = b.v2 - y * b.v1;
    b.v4 = b.v4 - y * b.v3;

    // Symmetrize v3 with Z in Lambda^2 O^n: v3 -= v1 Z, v4 -= v2 Z, where
    // Z_{pq} = -Z_{qp} = t^{a_p} (v3)_{pq} for the smaller index p < r.
    FMatrix z(n, n);
    for (int p = 0; p < r; ++p)
        for (int q = p + 1; q < n; ++q) {
            const Laurent x = Laurent::exact(Rational(1), a[static_cast<size_t>(p)]) *
                              b.v3.at(p, q);
            z.at(p, q) = x;
            z.at(q, p) = -x;
        }
    b.v3 = b.v3 - b.v1 * z;
    b.v4 = b.v4 - b.v2 * z;

    if (!b.v2.is_integral() || !b.v3.is_integral())
        throw internal_error("osp symmetrization left a pole in v2 or v3");

    // v1 v4^t, v4^t v1 are now over O; reduce the complementary v4 block.
    SmithResult s4 = smith_diagonalize(b.v4.submatrix(r, m, r, n));
    std::vector<long> bexp;
    for (long e : s4.exponents)
        if (e >= 1) bexp.push_back(e);

    std::vector<long> w;
    for (long e : a)
        if (e >= 1) w.push_back(e);
    w.insert(w.end(), bexp.begin(), bexp.end());
    std::sort(w.rbegin(), w.rend());
    if (static_cast<int>(w.size()) > n)
        throw internal_error("osp reduction produced more than n positive exponents");
    w.resize(static_cast<size_t>(n), 0);

    OspReduction out;
    out.coweight = Coweight(std::move(w));
    out.a = std::move(a);
    out.b = std::move(bexp);
    out.v2_sym = std::move(b.v2);
    out.v3_sym = std::move(b.v3);
    return out;
}

Coweight sp_so_normal_form(const FMatrix& v) { return sp_so_reduce(v).coweight; }

Rational moment_map(const LatticePair& p, const FMatrix& g, Side side) {
    Laurent s = Laurent::zero();
    if (p.context == GroupContext::GL) {
        if (side == Side::G) {
            // omega(z, g.z) = -2 res tr((v* v) g), g in gl_n(O).
            const FMatrix a = (p.vstar * p.v) * g;
            for (int i = 0; i < a.rows; ++i) s = s + a.at(i, i);
            return Rational(-2) * s.residue();
        }
        const FMatrix a = (p.v * p.vstar) * g;
        for (int i = 0; i < a.rows; ++i) s = s + a.at(i, i);
        return Rational(2) * s.residue();
    }
    // OSp: omega(v, w) = res tr(v^* w); the derivative action is -v g / g v.
    if (side == Side::G) {
        const FMatrix a = (p.vstar * p.v) * g;
        for (int i = 0; i < a.rows; ++i) s = s + a.at(i, i);
        return -s.residue();
    }
    const FMatrix a = (p.v * p.vstar) * g;
    for (int i = 0; i < a.rows; ++i) s = s + a.at(i, i);
    return s.residue();
}

// ---------------------------------------------------------------------------
// Fixtures and randomized transforms
// ---------------------------------------------------------------------------

LatticePair gl_fixture(int n, int m, const Coweight& w, long prec) {
    if (static_cast<int>(w.entries.size()) != n)
        throw precondition_error("fixture coweight length must equal n");
    if (n > m) throw precondition_error("fixture requires n <= m");
    FMatrix v(m, n), vstar(n, m);
    for (auto& x : v.e) x = Laurent::zero(prec);
    for (auto& x : vstar.e) x = Laurent::zero(prec);
    int s = 0;
    for (int i = 0; i < n; ++i) {
        const long e = w.entries[static_cast<size_t>(i)];
        if (e >= 1) v.at(i, i) = Laurent::monomial(Rational(1), -e, prec);
        if (e <= -1) ++s;
    }
    for (int j = 0; j < s; ++j) {
        // Ascending pole order ending at the (n, m) corner.
        const long bj = -w.entries[static_cast<size_t>(n - s + j)];
        vstar.at(n - s + j, m - s + j) = Laurent::monomial(Rational(1), -bj, prec);
    }
    return LatticePair::gl(std::move(v), std::move(vstar));
}

FMatrix osp_fixture(int n, int m, const std::vector<long>& a, const std::vector<long>& b,
                    long prec) {
    if (a.size() + b.size() > static_cast<size_t>(n))
        throw precondition_error("fixture requires r + s <= n");
    FMatrix v(2 * m, 2 * n);
    for (auto& x : v.e) x = Laurent::zero(prec);
    for (size_t i = 0; i < a.size(); ++i)
        v.at(static_cast<int>(i), static_cast<int>(i)) =
            Laurent::monomial(Rational(1), -a[i], prec);
    for (size_t j = 0; j < b.size(); ++j) {
        const int i = 2 * m - static_cast<int>(b.size()) + static_cast<int>(j);
        const int c = 2 * n - static_cast<int>(b.size()) + static_cast<int>(j);
        v.at(i, c) = Laurent::monomial(Rational(1), -b[j], prec);
    }
    return v;
}

long rand_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

Rational rand_rational(std::mt19937_64& rng) {
    const long num = rand_range(rng, -4, 4);
    const long den = rand_range(rng, 1, 2);
    return {num, den};
}

Laurent rand_O_element(std::mt19937_64& rng, long prec) {
    std::vector<Rational> c(static_cast<size_t>(std::min<long>(prec, 4)), Rational(0));
    for (auto& x : c)
        if (rand_range(rng, 0, 2) == 0) x = rand_rational(rng);
    return Laurent::make(0, std::move(c), prec);
}

Laurent rand_O_unit_scalar(std::mt19937_64& rng, long prec) {
    Laurent u = rand_O_element(rng, prec);
    Rational c0 = rand_rational(rng);
    if (c0.is_zero()) c0 = Rational(1);
    return u - Laurent::monomial(u.coeff(0), 0, prec) + Laurent::monomial(c0, 0, prec);
}

FMatrix rand_O_unit(int k, std::mt19937_64& rng, long prec) {
    FMatrix u = FMatrix::identity(k);
    for (auto& x : u.e) x = x.truncated(prec);
    const int ops = 2 * k + 2;
    for (int t = 0; t < ops; ++t) {
        const int kind = static_cast<int>(rand_range(rng, 0, 2));
        const int i = static_cast<int>(rand_range(rng, 0, k - 1));
        int j = static_cast<int>(rand_range(rng, 0, k - 1));
        if (kind == 0 && k > 1) { // transvection
            if (j == i) j = (j + 1) % k;
            const Laurent c = rand_O_element(rng, prec);
            for (int col = 0; col < k; ++col) u.at(i, col) = u.at(i, col) + c * u.at(j, col);
        } else if (kind == 1) { // unit scaling
            const Laurent c = rand_O_unit_scalar(rng, prec);
            for (int col = 0; col < k; ++col) u.at(i, col) = u.at(i, col) * c;
        } else if (k > 1) { // swap
            if (j == i) j = (j + 1) % k;
            for (int col = 0; col < k; ++col) std::swap(u.at(i, col), u.at(j, col));
        }
    }
    return u;
}

OUnitTransform rand_pair_transform(int n, int m, std::mt19937_64& rng, long prec) {
    return {rand_O_unit(m, rng, prec), rand_O_unit(n, rng, prec)};
}

FMatrix osp_random_transform(const FMatrix& v, std::mt19937_64& rng, long prec) {
    OspBlocks b = split_osp(v);
    const int n = b.n, m = b.m;
    const int moves = 6;
    for (int t = 0; t < moves; ++t) {
        switch (rand_range(rng, 0, 5)) {
        case 0: { // GL_m block unit: v1,v3 -> h v1, h v3; v2,v4 -> (h^t)^{-1} ...
            const FMatrix h = rand_O_unit(m, rng, prec);
            const FMatrix hti = h.transpose().inverse();
            b.v1 = h * b.v1;
            b.v3 = h * b.v3;
            b.v2 = hti * b.v2;
            b.v4 = hti * b.v4;
            break;
        }
        case 1: { // GL_n block unit acting on columns
            const FMatrix g = rand_O_unit(n, rng, prec);
            const FMatrix gti = g.transpose().inverse();
            b.v1 = b.v1 * g;
            b.v2 = b.v2 * g;
            b.v3 = b.v3 * gti;
            b.v4 = b.v4 * gti;
            break;
        }
        case 2: { // Sym^2 O^m, lower unipotent: v2 += Y v1, v4 += Y v3
            FMatrix y(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j) {
                    const Laurent c = rand_O_element(rng, prec);
                    y.at(i, j) = c;
                    y.at(j, i) = c;
                }
            b.v2 = b.v2 + y * b.v1;
            b.v4 = b.v4 + y * b.v3;
            break;
        }
        case 3: { // Sym^2 O^m, upper unipotent: v1 += Y v2, v3 += Y v4
            FMatrix y(m, m);
            for (int i = 0; i < m; ++i)
                for (int j = i; j < m; ++j) {
                    const Laurent c = rand_O_element(rng, prec);
                    y.at(i, j) = c;
                    y.at(j, i) = c;
                }
            b.v1 = b.v1 + y * b.v2;
            b.v3 = b.v3 + y * b.v4;
            break;
        }
        case 4: { // Lambda^2 O^n, one side: v3 += v1 Z, v4 += v2 Z
            FMatrix z(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const Laurent c = rand_O_element(rng, prec);
                    z.at(i, j) = c;
                    z.at(j, i) = -c;
                }
            b.v3 = b.v3 + b.v1 * z;
            b.v4 = b.v4 + b.v2 * z;
            break;
        }
        default: { // Lambda^2 O^n, other side: v1 += v3 W, v2 += v4 W
            FMatrix w(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    const Laurent c = rand_O_element(rng, prec);
                    w.at(i, j) = c;
                    w.at(j, i) = -c;
                }
            b.v1 = b.v1 + b.v3 * w;
            b.v2 = b.v2 + b.v4 * w;
            break;
        }
        }
    }
    return join_osp(b);
}

} // namespace loopslice
