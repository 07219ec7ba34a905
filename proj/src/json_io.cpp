#include "loopslice/json_io.hpp"

#include <algorithm>

#include "loopslice/errors.hpp"

namespace loopslice::io {

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return {static_cast<long>(j.get<long long>()), 1L};
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw precondition_error("rational must be an integer or a \"p/q\" string");
}

json laurent_to_json(const Laurent& x, long default_prec) {
    long prec = x.precision();
    if (x.is_exact()) {
        const long content_end =
            x.is_zero() ? 0 : x.raw_val() + static_cast<long>(x.raw_coeffs().size());
        prec = std::max(default_prec, content_end);
    }
    json coeffs = json::array();
    for (const auto& c : x.raw_coeffs()) coeffs.push_back(rational_to_json(c));
    return {{"val", x.is_zero() ? prec : x.raw_val()}, {"coeffs", coeffs}, {"prec", prec}};
}

Laurent laurent_from_json(const json& j) {
    const long val = j.at("val").get<long>();
    const long prec = j.at("prec").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return Laurent::make(val, std::move(coeffs), prec);
}

json fmatrix_to_json(const FMatrix& m, long default_prec) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(laurent_to_json(m.at(i, j), default_prec));
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", rows}};
}

FMatrix fmatrix_from_json(const json& j) {
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    if (rows < 1 || cols < 1) throw precondition_error("matrix dimensions must be positive");
    FMatrix m(rows, cols);
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
        throw precondition_error("matrix entries row count mismatch");
    for (int i = 0; i < rows; ++i) {
        const auto& row = entries.at(static_cast<size_t>(i));
        if (static_cast<int>(row.size()) != cols)
            throw precondition_error("matrix entries column count mismatch");
        for (int c = 0; c < cols; ++c) m.at(i, c) = laurent_from_json(row.at(static_cast<size_t>(c)));
    }
    return m;
}

json pair_to_json(const LatticePair& p, long default_prec) {
    json out{{"context", p.context == GroupContext::GL ? "gl" : "osp"},
             {"v", fmatrix_to_json(p.v, default_prec)}};
    if (p.context == GroupContext::GL) out["vstar"] = fmatrix_to_json(p.vstar, default_prec);
    return out;
}

LatticePair pair_from_json(const json& j) {
    const std::string ctx = j.at("context").get<std::string>();
    if (ctx == "gl") {
        if (!j.contains("vstar")) throw precondition_error("GL pair requires a vstar matrix");
        return LatticePair::gl(fmatrix_from_json(j.at("v")), fmatrix_from_json(j.at("vstar")));
    }
    if (ctx == "osp") return LatticePair::osp(fmatrix_from_json(j.at("v")));
    throw precondition_error("context must be \"gl\" or \"osp\"");
}

json coweight_to_json(const Coweight& w) { return w.entries; }

json poly_to_json(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coeffs()) out.push_back(rational_to_json(c));
    return out;
}

Poly poly_from_json(const json& j) {
    if (!j.is_array()) throw precondition_error("polynomial must be a coefficient array");
    std::vector<Rational> c;
    for (const auto& x : j) c.push_back(rational_from_json(x));
    return Poly(std::move(c));
}

json slice_point_to_json(const SlicePoint& p) {
    json x = json::array();
    for (int i = 0; i < p.n; ++i) {
        json row = json::array();
        for (int j = 0; j < p.n; ++j) row.push_back(rational_to_json(p.x.at(i, j)));
        x.push_back(std::move(row));
    }
    json v = json::array(), vs = json::array(), a = json::array();
    for (const auto& c : p.v) v.push_back(rational_to_json(c));
    for (const auto& c : p.vstar) vs.push_back(rational_to_json(c));
    for (const auto& c : p.a) a.push_back(rational_to_json(c));
    return {{"n", p.n}, {"m", p.m}, {"x", x}, {"v", v}, {"vstar", vs}, {"a", a}};
}

SlicePoint slice_point_from_json(const json& j) {
    SlicePoint p;
    p.n = j.at("n").get<int>();
    p.m = j.at("m").get<int>();
    if (p.n < 1 || p.m <= p.n) throw precondition_error("slice point requires 1 <= n < m");
    p.x = QMat(p.n, p.n);
    const auto& x = j.at("x");
    for (int i = 0; i < p.n; ++i)
        for (int c = 0; c < p.n; ++c)
            p.x.at(i, c) = rational_from_json(x.at(static_cast<size_t>(i)).at(static_cast<size_t>(c)));
    for (const auto& c : j.at("v")) p.v.push_back(rational_from_json(c));
    for (const auto& c : j.at("vstar")) p.vstar.push_back(rational_from_json(c));
    for (const auto& c : j.at("a")) p.a.push_back(rational_from_json(c));
    if (static_cast<int>(p.v.size()) != p.n || static_cast<int>(p.vstar.size()) != p.n ||
        static_cast<int>(p.a.size()) != p.m - p.n)
        throw precondition_error("slice point block sizes do not match n, m");
    return p;
}

json graded_dims_to_json(const GradedDims& g) {
    json out = json::array();
    for (const auto& [d, v] : g) out.push_back(json::array({d, v}));
    return out;
}

json fiber_to_json(const FiberDescription& fd) {
    const char* tag = fd.stratum == Stratum::Generic          ? "generic"
                      : fd.stratum == Stratum::ResultantZero ? "resultant-zero"
                                                              : "double-root";
    json out{{"stratum", tag},
             {"structure", fd.structure},
             {"f", poly_to_json(fd.invariants.f)},
             {"g", poly_to_json(fd.invariants.g)},
             {"point", slice_point_to_json(fd.base)}};
    json e = json::array();
    for (const auto& c : fd.e) e.push_back(rational_to_json(c));
    out["e"] = e;
    json roots = json::array();
    for (const auto& c : fd.roots) roots.push_back(rational_to_json(c));
    out["roots"] = roots;
    if (fd.stratum == Stratum::ResultantZero) {
        out["pinched_index"] = fd.pinched_index;
        out["constraint"] = "X*Y = 0";
    }
    return out;
}

json multiplicity_to_json(const GradedMultiplicity& gm) {
    json out = json::array();
    // Highest weights first.
    for (auto it = gm.rbegin(); it != gm.rend(); ++it) {
        json q = json::array();
        for (const auto& [e, c] : it->second) q.push_back(json::array({e, c}));
        out.push_back(json{{"weight", it->first}, {"mult", q}});
    }
    return out;
}

} // namespace loopslice::io
