#include "loopslice/multipoly.hpp"

#include <algorithm>
#include <sstream>

#include "loopslice/errors.hpp"

namespace loopslice {

void MultiPoly::add_term(const Expo& e, const Rational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void MultiPoly::check_ring(const MultiPoly& g) const {
    if (vars_ != g.vars_) throw internal_error("MultiPoly ring mismatch");
}

MultiPoly MultiPoly::constant(std::vector<std::string> vars, const Rational& c) {
    MultiPoly p(std::move(vars));
    p.add_term(Expo(p.vars_.size(), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, const std::string& name) {
    MultiPoly p(std::move(vars));
    Expo e(p.vars_.size(), 0);
    e[p.var_index(name)] = 1;
    p.add_term(e, Rational(1));
    return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Expo e, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (e.size() != p.vars_.size()) throw internal_error("monomial exponent arity mismatch");
    p.add_term(e, c);
    return p;
}

size_t MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return i;
    throw internal_error("unknown variable: " + name);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

MultiPoly MultiPoly::operator+(const MultiPoly& g) const {
    check_ring(g);
    MultiPoly p = *this;
    for (const auto& [e, c] : g.terms_) p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::operator-(const MultiPoly& g) const { return *this + (-g); }

MultiPoly MultiPoly::operator*(const MultiPoly& g) const {
    check_ring(g);
    MultiPoly p(vars_);
    Expo sum(vars_.size(), 0);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : g.terms_) {
            for (size_t i = 0; i < sum.size(); ++i) sum[i] = e1[i] + e2[i];
            p.add_term(sum, c1 * c2);
        }
    }
    return p;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly p(vars_);
    if (c.is_zero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

MultiPoly MultiPoly::pow(long e) const {
    if (e < 0) {
        if (terms_.size() != 1) throw precondition_error("negative power of a non-monomial");
        const auto& [ex, c] = *terms_.begin();
        Expo ne(ex.size());
        for (size_t i = 0; i < ex.size(); ++i) ne[i] = static_cast<int>(ex[i] * e);
        return monomial(vars_, ne, c.pow(e));
    }
    MultiPoly r = constant(vars_, Rational(1));
    MultiPoly b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

std::pair<MultiPoly::Expo, Rational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw precondition_error("leading term of zero polynomial");
    auto it = terms_.rbegin();
    return {it->first, it->second};
}

Rational MultiPoly::coefficient(const Expo& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::coeff_of_power(size_t vi, int k) const {
    MultiPoly p(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[vi] != k) continue;
        Expo r = e;
        r[vi] = 0;
        p.terms_.emplace(r, c);
    }
    return p;
}

int MultiPoly::degree_in(size_t vi) const {
    int d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[vi]);
    return d;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> vals;
    vals.reserve(vars_.size());
    for (const auto& v : vars_) {
        auto it = point.find(v);
        if (it == point.end()) throw precondition_error("evaluation point missing variable " + v);
        vals.push_back(it->second);
    }
    Rational s(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= vals[i].pow(e[i]);
        s += t;
    }
    return s;
}

MultiPoly MultiPoly::substitute_monomials(const std::map<std::string, MultiPoly>& images,
                                          const std::vector<std::string>& target_vars) const {
    // Precompute per-variable monomial images.
    std::vector<Expo> img_expo(vars_.size());
    std::vector<Rational> img_coeff(vars_.size(), Rational(0));
    std::vector<bool> mapped(vars_.size(), false);
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = images.find(vars_[i]);
        if (it == images.end()) continue;
        if (it->second.vars() != target_vars || it->second.terms().size() != 1)
            throw precondition_error("substitution image must be a monomial in the target ring");
        img_expo[i] = it->second.terms().begin()->first;
        img_coeff[i] = it->second.terms().begin()->second;
        mapped[i] = true;
    }
    MultiPoly out(target_vars);
    for (const auto& [e, c] : terms_) {
        Expo ne(target_vars.size(), 0);
        Rational nc = c;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mapped[i])
                throw precondition_error("substitution missing image for variable " + vars_[i]);
            for (size_t j = 0; j < ne.size(); ++j) ne[j] += e[i] * img_expo[i][j];
            nc *= img_coeff[i].pow(e[i]);
        }
        out.add_term(ne, nc);
    }
    return out;
}

Poly MultiPoly::to_univariate(size_t vi) const {
    std::vector<Rational> c;
    for (const auto& [e, v] : terms_) {
        for (size_t i = 0; i < e.size(); ++i)
            if (i != vi && e[i] != 0)
                throw precondition_error("polynomial is not univariate in " + vars_[vi]);
        if (e[vi] < 0) throw precondition_error("negative exponent in univariate conversion");
        if (static_cast<size_t>(e[vi]) >= c.size()) c.resize(e[vi] + 1, Rational(0));
        c[e[vi]] = v;
    }
    return Poly(std::move(c));
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.abs();
        bool has_var = false;
        std::ostringstream term;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_var) term << "*";
            has_var = true;
            term << vars_[i];
            if (e[i] != 1) term << "^" << e[i];
        }
        if (!has_var) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << term.str();
        }
    }
    return os.str();
}

MultiPoly mp_det(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t n = m.size();
    if (n == 0) throw internal_error("determinant of empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw internal_error("determinant of non-square matrix");
    if (n == 1) return m[0][0];
    const auto& vars = m[0][0].vars();
    MultiPoly det(vars);
    // Expand along the first row, skipping zero entries.
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<MultiPoly>> minor(n - 1, std::vector<MultiPoly>());
        for (size_t i = 1; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if (k != j) minor[i - 1].push_back(m[i][k]);
        MultiPoly term = m[0][j] * mp_det(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

std::vector<std::vector<MultiPoly>> mp_adjugate(const std::vector<std::vector<MultiPoly>>& m) {
    const size_t n = m.size();
    const auto& vars = m[0][0].vars();
    std::vector<std::vector<MultiPoly>> adj(n, std::vector<MultiPoly>(n, MultiPoly(vars)));
    if (n == 1) {
        adj[0][0] = MultiPoly::constant(vars, Rational(1));
        return adj;
    }
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<std::vector<MultiPoly>> minor;
            minor.reserve(n - 1);
            for (size_t r = 0; r < n; ++r) {
                if (r == i) continue;
                std::vector<MultiPoly> row;
                row.reserve(n - 1);
                for (size_t c = 0; c < n; ++c)
                    if (c != j) row.push_back(m[r][c]);
                minor.push_back(std::move(row));
            }
            MultiPoly cof = mp_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[j][i] = std::move(cof); // transpose of cofactors
        }
    }
    return adj;
}

} // namespace loopslice
