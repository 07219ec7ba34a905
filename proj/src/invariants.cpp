#include "loopslice/invariants.hpp"

#include <algorithm>

#include "loopslice/errors.hpp"

namespace loopslice {

InvariantPair InvariantPair::make(Poly f, Poly g) {
    if (!f.is_monic() || !g.is_monic())
        throw precondition_error("invariant pair polynomials must be monic");
    if (f.degree() >= g.degree())
        throw precondition_error("invariant pair requires deg f < deg g");
    return {std::move(f), std::move(g)};
}

InvariantPair invariant_map(const SliceChart& chart, const SlicePoint& p) {
    return {qcharpoly(p.x), qcharpoly(assemble_slice_matrix(chart, p))};
}

namespace {

std::vector<std::string> band_ring_vars(int k) {
    std::vector<std::string> vars{"lm"};
    for (int i = 1; i <= k; ++i) vars.push_back("a_" + std::to_string(i));
    return vars;
}

// lambda * I - M over the given ring.
std::vector<std::vector<MultiPoly>> lambda_minus(const std::vector<std::vector<MultiPoly>>& mat,
                                                 const std::vector<std::string>& vars) {
    const MultiPoly lm = MultiPoly::variable(vars, "lm");
    auto out = mat;
    for (size_t i = 0; i < mat.size(); ++i)
        for (size_t j = 0; j < mat.size(); ++j) {
            out[i][j] = -mat[i][j];
            if (i == j) out[i][j] = out[i][j] + lm;
        }
    return out;
}

} // namespace

SliceConstants derive_constants(int n, int m) {
    const SliceChart chart = build_slice_chart(n, m);
    const int k = m - n;

    std::vector<std::string> vars{"lm"};
    for (const auto& name : chart.coord_names()) vars.push_back(name);

    const auto gen = chart.generic_matrix(vars);
    const auto chi_p = mp_det(lambda_minus(gen, vars));

    std::vector<std::vector<MultiPoly>> xblk(static_cast<size_t>(n),
                                             std::vector<MultiPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) xblk[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            gen[static_cast<size_t>(i)][static_cast<size_t>(j)];
    const auto lmx = lambda_minus(xblk, vars);
    const auto chi_x = mp_det(lmx);
    const auto adj = mp_adjugate(lmx);

    std::vector<std::vector<MultiPoly>> band(static_cast<size_t>(k),
                                             std::vector<MultiPoly>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) band[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            gen[static_cast<size_t>(n + i)][static_cast<size_t>(n + j)];
    const auto q_band_big = mp_det(lambda_minus(band, vars));

    // v* adj(lambda I - x) v.
    MultiPoly corr(vars);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const MultiPoly vsj = MultiPoly::variable(vars, "vs_" + std::to_string(j + 1));
            const MultiPoly vi = MultiPoly::variable(vars, "v_" + std::to_string(i + 1));
            corr = corr + vsj * adj[static_cast<size_t>(j)][static_cast<size_t>(i)] * vi;
        }

    const MultiPoly rest = chi_p - chi_x * q_band_big;
    if (rest.is_zero() != corr.is_zero())
        throw precondition_error("no consistent constants; residual: " + rest.str());
    Rational d_last(0);
    if (!corr.is_zero()) {
        const auto [lead, lead_c] = corr.leading_term();
        d_last = rest.coefficient(lead) / lead_c;
    }
    const MultiPoly residual = rest - corr.scaled(d_last);
    if (!residual.is_zero())
        throw precondition_error("no consistent constants; residual: " + residual.str());

    // Restrict the band polynomial to its own ring (lm and the a_i).
    const auto bvars = band_ring_vars(k);
    std::map<std::string, MultiPoly> to_band;
    to_band.emplace("lm", MultiPoly::variable(bvars, "lm"));
    for (int i = 1; i <= k; ++i)
        to_band.emplace("a_" + std::to_string(i),
                        MultiPoly::variable(bvars, "a_" + std::to_string(i)));
    const MultiPoly q_band = q_band_big.substitute_monomials(to_band, bvars);

    SliceConstants sc;
    sc.n = n;
    sc.m = m;
    sc.q_band = q_band;
    sc.band_vars = bvars;
    for (int i = 1; i <= k; ++i) {
        MultiPoly::Expo e(bvars.size(), 0);
        e[0] = k - i;
        e[static_cast<size_t>(i)] = 1;
        Rational di = q_band.coefficient(e);
        if (i % 2 == 1) di = -di;
        if (di.is_zero()) throw internal_error("vanishing band constant d_" + std::to_string(i));
        sc.d.push_back(di);
    }
    sc.d.push_back(d_last);
    return sc;
}

std::vector<Rational> solve_band(const SliceConstants& sc, const Poly& q) {
    const int k = sc.m - sc.n;
    if (q.degree() != k || !q.is_monic())
        throw precondition_error("band solve requires monic q of degree m-n");
    std::vector<Rational> a;
    std::map<std::string, Rational> known;
    known.emplace("lm", Rational(0)); // unused placeholder for eval
    for (int i = 1; i <= k; ++i) {
        // Coefficient of lambda^{k-i} in q_band: (-1)^i d_i a_i + h(a_1..a_{i-1}).
        const MultiPoly ci = sc.q_band.coeff_of_power(0, k - i);
        const MultiPoly lin = ci.coeff_of_power(sc.q_band.var_index("a_" + std::to_string(i)), 1);
        const MultiPoly cst = ci.coeff_of_power(sc.q_band.var_index("a_" + std::to_string(i)), 0);
        std::map<std::string, Rational> point = known;
        for (int j = i; j <= k; ++j) point["a_" + std::to_string(j)] = Rational(0);
        const Rational beta = lin.eval(point);
        const Rational alpha = cst.eval(point);
        if (beta.is_zero()) throw internal_error("band solve: singular step");
        const Rational ai = (q.coeff(k - i) - alpha) / beta;
        a.push_back(ai);
        known["a_" + std::to_string(i)] = ai;
    }
    return a;
}

namespace {

struct Prepared {
    int n, m;
    SliceConstants sc;
    SliceChart chart;
    Poly q, r;
    std::vector<Rational> a;
};

Prepared prepare(const Poly& f, const Poly& g) {
    const int n = f.degree(), m = g.degree();
    if (n < 1) throw precondition_error("fiber requires deg f >= 1");
    if (!f.is_monic() || !g.is_monic()) throw precondition_error("fiber polynomials must be monic");
    if (n >= m) throw precondition_error("fiber requires deg f < deg g");
    Prepared p{n, m, derive_constants(n, m), build_slice_chart(n, m), {}, {}, {}};
    auto qr = poly_divmod(g, f);
    p.q = std::move(qr.first);
    p.r = std::move(qr.second);
    p.a = solve_band(p.sc, p.q);
    return p;
}

void verify_point(const Prepared& pre, const SlicePoint& pt, const Poly& f, const Poly& g) {
    const InvariantPair got = invariant_map(pre.chart, pt);
    if (!(got.f == f) || !(got.g == g))
        throw internal_error("fiber reconstruction failed to reproduce (f, g)");
}

} // namespace

FiberDescription generic_fiber(const Poly& f, const Poly& g) {
    Prepared pre = prepare(f, g);
    if (discriminant(f).is_zero())
        throw precondition_error("repeated root of f: not on the generic stratum");
    if (resultant(f, g).is_zero())
        throw precondition_error("resultant(f, g) = 0: not on the generic stratum");
    const auto roots = rational_roots(f);
    if (static_cast<int>(roots.size()) != pre.n)
        throw precondition_error("f must split with distinct rational roots");

    const Rational d = pre.sc.d.back();
    std::vector<Rational> e;
    for (int i = 0; i < pre.n; ++i) {
        Rational prod(1);
        for (int j = 0; j < pre.n; ++j)
            if (j != i) prod *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
        e.push_back(pre.r.eval(roots[static_cast<size_t>(i)]) / (d * prod));
    }

    SlicePoint pt;
    pt.n = pre.n;
    pt.m = pre.m;
    pt.x = QMat(pre.n, pre.n);
    for (int i = 0; i < pre.n; ++i) pt.x.at(i, i) = roots[static_cast<size_t>(i)];
    pt.v.assign(static_cast<size_t>(pre.n), Rational(1));
    pt.vstar = e;
    pt.a = pre.a;
    verify_point(pre, pt, f, g);

    FiberDescription fd;
    fd.stratum = Stratum::Generic;
    fd.structure = "free torsor by GL_n";
    fd.invariants = {f, g};
    fd.base = std::move(pt);
    fd.roots = roots;
    fd.e = std::move(e);
    return fd;
}

FiberDescription resultant_stratum_fiber(const Poly& f, const Poly& g) {
    Prepared pre = prepare(f, g);
    if (discriminant(f).is_zero())
        throw precondition_error("repeated root of f: not on the resultant stratum");
    if (!resultant(f, g).is_zero())
        throw precondition_error("resultant(f, g) != 0: not on the resultant stratum");
    const auto roots = rational_roots(f);
    if (static_cast<int>(roots.size()) != pre.n)
        throw precondition_error("f must split with distinct rational roots");

    const Rational d = pre.sc.d.back();
    int i0 = -1;
    std::vector<Rational> e;
    for (int i = 0; i < pre.n; ++i) {
        const Rational ri = pre.r.eval(roots[static_cast<size_t>(i)]);
        if (ri.is_zero()) {
            if (i0 >= 0)
                throw precondition_error(
                    "more than one vanishing e_i: deeper stratum, unsupported");
            i0 = i;
            e.emplace_back(0);
            continue;
        }
        Rational prod(1);
        for (int j = 0; j < pre.n; ++j)
            if (j != i) prod *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
        e.push_back(ri / (d * prod));
    }
    if (i0 < 0) throw internal_error("resultant zero but no root of f kills r");

    FiberDescription fd;
    fd.stratum = Stratum::ResultantZero;
    fd.structure = "(GL_n x +)/G_m";
    fd.invariants = {f, g};
    fd.roots = roots;
    fd.e = e;
    fd.pinched_index = i0;
    fd.base = resultant_stratum_point(fd, Rational(0), Rational(0));
    verify_point(pre, fd.base, f, g);
    return fd;
}

SlicePoint resultant_stratum_point(const FiberDescription& fd, const Rational& X,
                                   const Rational& Y) {
    if (fd.stratum != Stratum::ResultantZero)
        throw precondition_error("pinched point requires the resultant stratum");
    const int n = static_cast<int>(fd.roots.size());
    const SliceChart chart = build_slice_chart(n, fd.invariants.g.degree());
    const SliceConstants sc = derive_constants(n, fd.invariants.g.degree());
    SlicePoint pt;
    pt.n = n;
    pt.m = fd.invariants.g.degree();
    pt.x = QMat(n, n);
    for (int i = 0; i < n; ++i) pt.x.at(i, i) = fd.roots[static_cast<size_t>(i)];
    pt.v.assign(static_cast<size_t>(n), Rational(1));
    pt.vstar = fd.e;
    pt.v[static_cast<size_t>(fd.pinched_index)] = X;
    pt.vstar[static_cast<size_t>(fd.pinched_index)] = Y;
    pt.a = solve_band(sc, poly_divmod(fd.invariants.g, fd.invariants.f).first);
    (void)chart;
    return pt;
}

FiberDescription double_root_fiber(const Poly& f, const Poly& g) {
    Prepared pre = prepare(f, g);
    if (resultant(f, g).is_zero())
        throw precondition_error("resultant(f, g) = 0: unsupported on the double-root stratum");
    const auto roots = rational_roots(f);
    if (static_cast<int>(roots.size()) != pre.n)
        throw precondition_error("f must split with rational roots");
    // Exactly one double root, the rest simple.
    Rational lambda0(0);
    std::vector<Rational> rest;
    {
        std::vector<Rational> sorted = roots;
        int doubles = 0;
        for (size_t i = 0; i < sorted.size();) {
            size_t j = i;
            while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
            const size_t mult = j - i;
            if (mult == 2) {
                ++doubles;
                lambda0 = sorted[i];
            } else if (mult == 1) {
                rest.push_back(sorted[i]);
            } else {
                throw precondition_error("root pattern outside the supported stratum");
            }
            i = j;
        }
        if (doubles != 1) throw precondition_error("root pattern outside the supported stratum");
    }

    const Rational d = pre.sc.d.back();
    const Poly pi_rest = Poly::from_roots(rest); // prod (lambda - lambda_i), i >= 3
    const Rational pi0 = pi_rest.eval(lambda0);
    const Rational pi0p = pi_rest.derivative().eval(lambda0);
    const Rational e1 = pre.r.eval(lambda0) / (d * pi0);
    const Rational s2 = (pre.r.derivative().eval(lambda0) - d * pi0p * e1) / (d * pi0);

    SlicePoint pt;
    pt.n = pre.n;
    pt.m = pre.m;
    pt.x = QMat(pre.n, pre.n);
    pt.x.at(0, 0) = lambda0;
    pt.x.at(0, 1) = Rational(1);
    pt.x.at(1, 1) = lambda0;
    for (size_t i = 0; i < rest.size(); ++i)
        pt.x.at(2 + static_cast<int>(i), 2 + static_cast<int>(i)) = rest[i];
    pt.v.assign(static_cast<size_t>(pre.n), Rational(1));
    pt.v[0] = Rational(0);
    pt.vstar.assign(static_cast<size_t>(pre.n), Rational(0));
    pt.vstar[0] = e1;
    pt.vstar[1] = s2;
    for (size_t i = 0; i < rest.size(); ++i) {
        Rational prod = (rest[i] - lambda0) * (rest[i] - lambda0);
        for (size_t j = 0; j < rest.size(); ++j)
            if (j != i) prod *= rest[i] - rest[j];
        pt.vstar[2 + i] = pre.r.eval(rest[i]) / (d * prod);
    }
    pt.a = pre.a;
    verify_point(pre, pt, f, g);

    FiberDescription fd;
    fd.stratum = Stratum::DoubleRoot;
    fd.structure = "GL_n";
    fd.invariants = {f, g};
    fd.base = std::move(pt);
    fd.roots = roots;
    fd.e = {e1, s2};
    return fd;
}

SlicePoint transport(const SlicePoint& p, const QMat& A) {
    SlicePoint q = p;
    const QMat ainv = qinverse(A);
    q.x = A * p.x * ainv;
    QMat vcol(p.n, 1), vsrow(1, p.n);
    for (int i = 0; i < p.n; ++i) {
        vcol.at(i, 0) = p.v[static_cast<size_t>(i)];
        vsrow.at(0, i) = p.vstar[static_cast<size_t>(i)];
    }
    const QMat nv = A * vcol;
    const QMat nvs = vsrow * ainv;
    for (int i = 0; i < p.n; ++i) {
        q.v[static_cast<size_t>(i)] = nv.at(i, 0);
        q.vstar[static_cast<size_t>(i)] = nvs.at(0, i);
    }
    return q;
}

QMat find_fiber_isomorphism(const SliceChart& chart, const SlicePoint& p1, const SlicePoint& p2) {
    const Poly chi1 = qcharpoly(p1.x);
    const Poly chi2 = qcharpoly(p2.x);
    if (!(chi1 == chi2)) throw precondition_error("points have different x spectra");
    const auto roots = rational_roots(chi1);
    if (static_cast<int>(roots.size()) != p1.n || discriminant(chi1).is_zero())
        throw precondition_error("fiber isomorphism needs distinct rational eigenvalues");

    // Eigenbasis of x, columns ordered by the sorted roots, scaled so that
    // g^{-1} v = (1, ..., 1).
    const auto frame = [&](const SlicePoint& p) {
        QMat g(p.n, p.n);
        for (int i = 0; i < p.n; ++i) {
            QMat shifted = p.x;
            for (int k = 0; k < p.n; ++k) shifted.at(k, k) -= roots[static_cast<size_t>(i)];
            const auto ker = qkernel(shifted);
            if (ker.size() != 1) throw precondition_error("eigenvalue multiplicity > 1");
            for (int k = 0; k < p.n; ++k) g.at(k, i) = ker[0][static_cast<size_t>(k)];
        }
        QMat vcol(p.n, 1);
        for (int i = 0; i < p.n; ++i) vcol.at(i, 0) = p.v[static_cast<size_t>(i)];
        const QMat gv = qinverse(g) * vcol;
        for (int i = 0; i < p.n; ++i) {
            if (gv.at(i, 0).is_zero())
                throw precondition_error("fiber isomorphism needs nonvanishing v components");
            for (int k = 0; k < p.n; ++k) g.at(k, i) *= gv.at(i, 0);
        }
        return g;
    };
    const QMat a = frame(p2) * qinverse(frame(p1));
    const SlicePoint moved = transport(p1, a);
    if (!(moved.x == p2.x) || moved.v != p2.v || moved.vstar != p2.vstar || moved.a != p2.a)
        throw precondition_error("points are not related by conjugation and rescaling");
    (void)chart;
    return a;
}

} // namespace loopslice
