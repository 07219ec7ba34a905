#include "loopslice/slodowy.hpp"

#include "loopslice/errors.hpp"

namespace loopslice {

Sl2Triple principal_sl2(int k) {
    if (k < 1) throw precondition_error("principal_sl2 requires k >= 1");
    Sl2Triple t{QMat(k, k), QMat(k, k), QMat(k, k)};
    for (int i = 0; i < k - 1; ++i) {
        t.e.at(i, i + 1) = Rational(1);
        t.f.at(i + 1, i) = Rational(static_cast<long>(i + 1) * (k - i - 1));
    }
    for (int i = 0; i < k; ++i) t.h.at(i, i) = Rational(k - 1 - 2L * i);
    return t;
}

std::vector<QMat> centralizer_basis(int n, int m) {
    if (n < 0 || m < n || m < 1) throw precondition_error("centralizer_basis requires 0 <= n <= m");
    QMat e(m, m);
    const int k = m - n;
    for (int i = 0; i < k - 1; ++i) e.at(n + i, n + i + 1) = Rational(1);
    // [e, z] = 0 as an m^2 x m^2 linear system in the entries of z.
    QMat sys(m * m, m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const int eq = i * m + j;
            for (int u = 0; u < m; ++u)
                for (int v = 0; v < m; ++v) {
                    Rational c(0);
                    if (v == j) c += e.at(i, u);
                    if (u == i) c -= e.at(v, j);
                    if (!c.is_zero()) sys.at(eq, u * m + v) += c;
                }
        }
    std::vector<QMat> basis;
    for (const auto& vec : qkernel(sys)) {
        QMat z(m, m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) z.at(i, j) = vec[static_cast<size_t>(i) * m + j];
        basis.push_back(std::move(z));
    }
    return basis;
}

namespace {

// ad(h)-weight of position (i, j) for h of the principal triple in the
// lower-right (m-n) block.
int position_weight(int n, int m, int i, int j) {
    const int k = m - n;
    const auto hw = [&](int idx) { return idx < n ? 0 : (k - 1) - 2 * (idx - n); };
    return hw(i) - hw(j);
}

} // namespace

SliceChart build_slice_chart(int n, int m) {
    if (n >= m) throw precondition_error("build_slice_chart requires n < m");
    if (n < 1) throw precondition_error("build_slice_chart requires n >= 1");
    SliceChart ch;
    ch.n = n;
    ch.m = m;
    const int k = m - n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            ch.coords.push_back({"x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1), i, j,
                                 2 + position_weight(n, m, i, j)});
    for (int i = 0; i < n; ++i)
        ch.coords.push_back({"v_" + std::to_string(i + 1), i, m - 1,
                             2 + position_weight(n, m, i, m - 1)});
    for (int j = 0; j < n; ++j)
        ch.coords.push_back({"vs_" + std::to_string(j + 1), n, j,
                             2 + position_weight(n, m, n, j)});
    for (int i = 1; i <= k; ++i)
        ch.coords.push_back({"a_" + std::to_string(i), n, n + i - 1,
                             2 + position_weight(n, m, n, n + i - 1)});
    for (int i = 1; i <= k - 1; ++i) ch.c.emplace_back(static_cast<long>(i) * (k - i));
    return ch;
}

std::vector<std::string> SliceChart::coord_names() const {
    std::vector<std::string> v;
    v.reserve(coords.size());
    for (const auto& c : coords) v.push_back(c.name);
    return v;
}

const SliceCoordinate& SliceChart::find(const std::string& name) const {
    for (const auto& c : coords)
        if (c.name == name) return c;
    throw precondition_error("unknown slice coordinate: " + name);
}

std::vector<std::vector<MultiPoly>> SliceChart::generic_matrix() const {
    return generic_matrix(coord_names());
}

std::vector<std::vector<MultiPoly>> SliceChart::generic_matrix(
    const std::vector<std::string>& vars) const {
    const int kk = m - n;
    std::vector<std::vector<MultiPoly>> p(static_cast<size_t>(m),
                                          std::vector<MultiPoly>(static_cast<size_t>(m),
                                                                 MultiPoly(vars)));
    for (const auto& c : coords)
        p[static_cast<size_t>(c.row)][static_cast<size_t>(c.col)] = MultiPoly::variable(vars, c.name);
    // Toeplitz band: a_i repeats along every block row; c_i on the subdiagonal.
    for (int row = 1; row < kk; ++row) {
        for (int i = 1; i <= kk - row; ++i) {
            const auto& src = find("a_" + std::to_string(i));
            p[static_cast<size_t>(n + row)][static_cast<size_t>(n + row + i - 1)] =
                MultiPoly::variable(vars, src.name);
        }
        p[static_cast<size_t>(n + row)][static_cast<size_t>(n + row - 1)] =
            MultiPoly::constant(vars, c[static_cast<size_t>(row - 1)]);
    }
    return p;
}

int grading_of(const SliceChart& chart, const std::string& coordinate) {
    return chart.find(coordinate).grading;
}

QMat assemble_slice_matrix(const SliceChart& chart, const SlicePoint& p) {
    if (p.n != chart.n || p.m != chart.m)
        throw precondition_error("slice point does not match chart dimensions");
    if (p.x.rows != p.n || p.x.cols != p.n || static_cast<int>(p.v.size()) != p.n ||
        static_cast<int>(p.vstar.size()) != p.n ||
        static_cast<int>(p.a.size()) != p.m - p.n)
        throw precondition_error("slice point has wrong block sizes");
    const int n = p.n, m = p.m, k = m - n;
    QMat out(m, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = p.x.at(i, j);
    for (int i = 0; i < n; ++i) out.at(i, m - 1) = p.v[static_cast<size_t>(i)];
    for (int j = 0; j < n; ++j) out.at(n, j) = p.vstar[static_cast<size_t>(j)];
    for (int row = 0; row < k; ++row) {
        for (int i = 1; i <= k - row; ++i)
            out.at(n + row, n + row + i - 1) = p.a[static_cast<size_t>(i - 1)];
        if (row >= 1) out.at(n + row, n + row - 1) = chart.c[static_cast<size_t>(row - 1)];
    }
    return out;
}

std::map<std::string, Rational> point_values(const SliceChart& chart, const SlicePoint& p) {
    std::map<std::string, Rational> vals;
    for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j)
            vals["x_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = p.x.at(i, j);
    for (int i = 0; i < p.n; ++i) vals["v_" + std::to_string(i + 1)] = p.v[static_cast<size_t>(i)];
    for (int j = 0; j < p.n; ++j) vals["vs_" + std::to_string(j + 1)] = p.vstar[static_cast<size_t>(j)];
    for (int i = 1; i <= p.m - p.n; ++i) vals["a_" + std::to_string(i)] = p.a[static_cast<size_t>(i - 1)];
    (void)chart;
    return vals;
}

} // namespace loopslice
