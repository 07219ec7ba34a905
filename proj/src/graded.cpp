#include "loopslice/graded.hpp"

#include <algorithm>

#include "loopslice/errors.hpp"
#include "loopslice/qlinalg.hpp"

namespace loopslice {

GradedDims gd_shift(const GradedDims& g, long k) {
    GradedDims out;
    for (const auto& [d, v] : g) out.emplace(d - k, v);
    return out;
}

GradedDims gd_sum(const GradedDims& a, const GradedDims& b) {
    GradedDims out = a;
    for (const auto& [d, v] : b) {
        out[d] += v;
        if (out[d] == 0) out.erase(d);
    }
    return out;
}

long gd_total(const GradedDims& g) {
    long t = 0;
    for (const auto& [d, v] : g) t += v;
    return t;
}

MultiPoly TruncPolyRing::reduce(const MultiPoly& p) const {
    MultiPoly out(vars);
    for (const auto& [e, c] : p.terms()) {
        bool dead = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] < 0) throw precondition_error("negative exponent in truncated ring");
            if (e[i] >= trunc[i]) dead = true;
        }
        if (!dead) out = out + MultiPoly::monomial(vars, e, c);
    }
    return out;
}

std::vector<MultiPoly::Expo> TruncPolyRing::monomials() const {
    std::vector<MultiPoly::Expo> out;
    MultiPoly::Expo e(vars.size(), 0);
    while (true) {
        out.push_back(e);
        size_t i = 0;
        for (; i < e.size(); ++i) {
            if (++e[i] < trunc[i]) break;
            e[i] = 0;
        }
        if (i == e.size()) break;
    }
    return out;
}

GradedDims TruncPolyRing::graded_dims() const {
    GradedDims out;
    for (const auto& e : monomials()) {
        long d = 0;
        for (size_t i = 0; i < e.size(); ++i) d += static_cast<long>(e[i]) * degrees[i];
        out[d] += 1;
    }
    return out;
}

TruncPolyRing proj_cohomology(int n) {
    if (n < 1) throw precondition_error("proj_cohomology requires n >= 1");
    return {{"al"}, {2}, {n}};
}

TruncPolyRing product_proj_ring(int n, int m) {
    if (n < 1 || m < 1) throw precondition_error("product_proj_ring requires n, m >= 1");
    return {{"al", "be"}, {2, 2}, {n, m}};
}

ConeDims cone_of_c1(int n, int m) {
    const TruncPolyRing ring = product_proj_ring(n, m);
    // Basis at cohomological degree 2d: monomials al^i be^j, i + j = d.
    const auto basis_at = [&](int d) {
        std::vector<std::pair<int, int>> b;
        for (int i = 0; i < n; ++i) {
            const int j = d - i;
            if (j >= 0 && j < m) b.emplace_back(i, j);
        }
        return b;
    };
    const int top = n + m - 2;
    ConeDims out;
    for (int d = 0; d <= top; ++d) {
        const auto src = basis_at(d);
        const auto dst = basis_at(d + 1);
        QMat mat(static_cast<int>(dst.size()), static_cast<int>(src.size()));
        for (size_t c = 0; c < src.size(); ++c) {
            const auto [i, j] = src[c];
            for (size_t rr = 0; rr < dst.size(); ++rr) {
                if (dst[rr] == std::make_pair(i + 1, j) || dst[rr] == std::make_pair(i, j + 1))
                    mat.at(static_cast<int>(rr), static_cast<int>(c)) = Rational(1);
            }
        }
        const int rank = src.empty() || dst.empty() ? 0 : qrank(mat);
        const long kerdim = static_cast<long>(src.size()) - rank;
        if (kerdim > 0) out.ker[2L * d] = kerdim;
        // Cokernel at degree 2(d+1)(entries of degree 0 map from nothing).
        const long cokdim = static_cast<long>(dst.size()) - rank;
        if (cokdim > 0) out.coker[2L * (d + 1)] = cokdim;
    }
    if (!basis_at(0).empty()) out.coker[0] = static_cast<long>(basis_at(0).size());
    return out;
}

GradedDims stalk_ic(int n, int m) {
    if (n >= m) throw precondition_error("stalk_ic requires n < m");
    const ConeDims cone = cone_of_c1(n, m);
    // Cone = coker + ker placed one degree higher; shift by [m+n-1]; then
    // truncate tau_{<= -1}.
    GradedDims shifted = gd_sum(gd_shift(cone.coker, m + n - 1), gd_shift(cone.ker, m + n - 2));
    GradedDims stalk;
    for (const auto& [d, v] : shifted)
        if (d <= -1) stalk[d] = v;

    const GradedDims closed1 = gd_shift(proj_cohomology(n).graded_dims(), m + n - 1);
    GradedDims closed2;
    for (const auto& [d, v] : proj_cohomology(m).graded_dims())
        if (d <= 2 * n - 2) closed2[d - (m + n - 1)] = v;
    if (stalk != closed1 || stalk != closed2)
        throw internal_error("stalk_ic disagrees with its closed forms");
    return stalk;
}

std::vector<long> decomposition_remainder(int n, int m) {
    if (n >= m) throw precondition_error("decomposition_remainder requires n < m");
    std::vector<long> shifts;
    for (const auto& [d, v] : proj_cohomology(m).graded_dims()) {
        if (d < 2 * n) continue;
        for (long i = 0; i < v; ++i) shifts.push_back(-(d - (m + n - 1)));
    }
    std::sort(shifts.rbegin(), shifts.rend());
    return shifts;
}

std::vector<Rational> PoincareSeries::expand(long order) const {
    if (order < 0) throw precondition_error("series order must be nonnegative");
    std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
    for (int i = 0; i <= num.degree(); ++i) {
        const long d = offset + i;
        if (d < 0) throw precondition_error("series has terms of negative degree");
        if (d <= order) c[static_cast<size_t>(d)] = num.coeff(i);
    }
    for (const auto& [d, mult] : denom) {
        if (d <= 0) throw internal_error("nonpositive denominator degree");
        for (int t = 0; t < mult; ++t)
            for (size_t k = static_cast<size_t>(d); k <= static_cast<size_t>(order); ++k)
                c[k] += c[k - static_cast<size_t>(d)];
    }
    return c;
}

Rational PoincareSeries::coefficient(long k) const {
    if (k < 0) return Rational(0);
    return expand(k)[static_cast<size_t>(k)];
}

long PoincareSeries::min_degree() const {
    if (num.is_zero()) throw precondition_error("minimal degree of the zero series");
    for (int i = 0; i <= num.degree(); ++i)
        if (!num.coeff(i).is_zero()) return offset + i;
    throw internal_error("unreachable");
}

PoincareSeries PoincareSeries::operator*(const PoincareSeries& o) const {
    PoincareSeries r;
    r.num = num * o.num;
    r.offset = offset + o.offset;
    r.denom = denom;
    for (const auto& [d, mult] : o.denom) r.denom[d] += mult;
    return r;
}

PoincareSeries PoincareSeries::operator+(const PoincareSeries& o) const {
    PoincareSeries r;
    r.offset = std::min(offset, o.offset);
    r.denom = denom;
    for (const auto& [d, mult] : o.denom) r.denom[d] = std::max(r.denom[d], mult);
    Poly a = num, b = o.num;
    // Multiply each numerator by the factors it is missing.
    for (const auto& [d, mult] : r.denom) {
        const Poly fac = Poly(Rational(1)) - Poly::monomial(static_cast<int>(d), Rational(1));
        auto it = denom.find(d);
        const int have_a = it == denom.end() ? 0 : it->second;
        auto jt = o.denom.find(d);
        const int have_b = jt == o.denom.end() ? 0 : jt->second;
        a = a * fac.pow(mult - have_a);
        b = b * fac.pow(mult - have_b);
    }
    a = a * Poly::monomial(static_cast<int>(offset - r.offset), Rational(1));
    b = b * Poly::monomial(static_cast<int>(o.offset - r.offset), Rational(1));
    r.num = a + b;
    return r;
}

bool PoincareSeries::equals(const PoincareSeries& o) const {
    Poly a = num, b = o.num;
    for (const auto& [d, mult] : o.denom)
        a = a * (Poly(Rational(1)) - Poly::monomial(static_cast<int>(d), Rational(1))).pow(mult);
    for (const auto& [d, mult] : denom)
        b = b * (Poly(Rational(1)) - Poly::monomial(static_cast<int>(d), Rational(1))).pow(mult);
    const long shift = std::min(offset, o.offset);
    a = a * Poly::monomial(static_cast<int>(offset - shift), Rational(1));
    b = b * Poly::monomial(static_cast<int>(o.offset - shift), Rational(1));
    return a == b;
}

PoincareSeries free_ring_series(const std::vector<long>& gen_degrees) {
    PoincareSeries s;
    for (long d : gen_degrees) {
        if (d <= 0) throw precondition_error("generator degrees must be positive");
        s.denom[d] += 1;
    }
    return s;
}

PoincareSeries ext_poincare(int n, int m) {
    if (n >= m) throw precondition_error("ext_poincare requires n < m");
    std::vector<long> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(2L * i);
    for (int i = 1; i <= m; ++i) gens.push_back(2L * i);
    PoincareSeries s = free_ring_series(gens);
    Poly numsum;
    for (int j = 0; j < n; ++j)
        numsum = numsum + Poly::monomial(m + n - 1 - 2 * j, Rational(1));
    s.num = numsum;
    return s;
}

AlgebraCheckReport gl1_algebra_check_report(int m, long order) {
    if (m < 1) throw precondition_error("gl1_algebra_check requires m >= 1");
    AlgebraCheckReport rep;

    std::vector<long> lhs_gens{2};
    for (int i = 1; i <= m - 1; ++i) lhs_gens.push_back(2L * i);
    lhs_gens.push_back(m);
    lhs_gens.push_back(m);
    const PoincareSeries lhs = free_ring_series(lhs_gens);

    std::vector<long> a_gens{2};
    for (int i = 1; i <= m; ++i) a_gens.push_back(2L * i);
    PoincareSeries rhs = free_ring_series(a_gens);
    // A + sum_{k>=1} A x^k + sum_{k>=1} A y^k = A (1 + s^m) / (1 - s^m).
    rhs.num = Poly(Rational(1)) + Poly::monomial(m, Rational(1));
    rhs.denom[m] += 1;

    const auto lc = lhs.expand(order);
    const auto rc = rhs.expand(order);
    rep.series_ok = true;
    for (long k = 0; k <= order; ++k) {
        if (lc[static_cast<size_t>(k)] != rc[static_cast<size_t>(k)]) {
            rep.series_ok = false;
            rep.first_mismatch = k;
            rep.lhs_at_mismatch = lc[static_cast<size_t>(k)];
            rep.rhs_at_mismatch = rc[static_cast<size_t>(k)];
            break;
        }
    }

    // Euler class of std: prod (a + tau_i) = sum e_i(tau) a^{m-i}.
    std::vector<std::string> vars{"a"};
    for (int i = 1; i <= m; ++i) vars.push_back("t" + std::to_string(i));
    MultiPoly prod = MultiPoly::constant(vars, Rational(1));
    const MultiPoly avar = MultiPoly::variable(vars, "a");
    for (int i = 1; i <= m; ++i)
        prod = prod * (avar + MultiPoly::variable(vars, "t" + std::to_string(i)));
    // Elementary symmetric polynomials by the generating recurrence.
    std::vector<MultiPoly> elem(static_cast<size_t>(m) + 1, MultiPoly::constant(vars, Rational(0)));
    elem[0] = MultiPoly::constant(vars, Rational(1));
    for (int i = 1; i <= m; ++i) {
        const MultiPoly ti = MultiPoly::variable(vars, "t" + std::to_string(i));
        for (int k = i; k >= 1; --k)
            elem[static_cast<size_t>(k)] = elem[static_cast<size_t>(k)] +
                                           ti * elem[static_cast<size_t>(k - 1)];
    }
    MultiPoly expansion(vars);
    for (int i = 0; i <= m; ++i)
        expansion = expansion + elem[static_cast<size_t>(i)] * avar.pow(m - i);
    rep.euler_ok = (prod == expansion);
    return rep;
}

bool gl1_algebra_check(int m) { return gl1_algebra_check_report(m).ok(); }

long localization_hom_degree(long k, int n) { return k >= 0 ? k * n : k * n - 2 * k; }

} // namespace loopslice
