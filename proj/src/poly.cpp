#include "loopslice/poly.hpp"

#include <algorithm>
#include <sstream>

#include "loopslice/errors.hpp"

namespace loopslice {

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int deg, const Rational& c) {
    Poly p;
    if (c.is_zero()) return p;
    p.c_.assign(static_cast<size_t>(deg) + 1, Rational(0));
    p.c_.back() = c;
    return p;
}

Poly Poly::from_roots(const std::vector<Rational>& roots) {
    Poly p(Rational(1));
    for (const auto& r : roots) p = p * Poly({-r, Rational(1)});
    return p;
}

const Rational& Poly::lc() const {
    if (c_.empty()) throw precondition_error("leading coefficient of zero polynomial");
    return c_.back();
}

Rational Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

Poly Poly::operator+(const Poly& g) const {
    Poly h;
    h.c_.assign(std::max(c_.size(), g.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) h.c_[i] += c_[i];
    for (size_t i = 0; i < g.c_.size(); ++i) h.c_[i] += g.c_[i];
    h.trim();
    return h;
}

Poly Poly::operator-(const Poly& g) const { return *this + (-g); }

Poly Poly::operator*(const Poly& g) const {
    if (is_zero() || g.is_zero()) return {};
    Poly h;
    h.c_.assign(c_.size() + g.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < g.c_.size(); ++j) h.c_[i + j] += c_[i] * g.c_[j];
    h.trim();
    return h;
}

Poly Poly::scaled(const Rational& c) const {
    Poly h = *this;
    for (auto& x : h.c_) x *= c;
    h.trim();
    return h;
}

Poly Poly::pow(long e) const {
    if (e < 0) throw precondition_error("negative polynomial power");
    Poly r(Rational(1));
    Poly b = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

Rational Poly::eval(const Rational& x) const {
    Rational s(0);
    for (size_t i = c_.size(); i-- > 0;) s = s * x + c_[i];
    return s;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    Poly d;
    d.c_.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * Rational(static_cast<long>(i)));
    d.trim();
    return d;
}

Poly Poly::monic() const {
    if (is_zero()) throw precondition_error("monic normalization of zero polynomial");
    return scaled(lc().inverse());
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() > 0 ? " + " : " - ");
        else if (c.sign() < 0) os << "-";
        first = false;
        const Rational a = c.abs();
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> poly_divmod(const Poly& g, const Poly& f) {
    if (f.is_zero()) throw precondition_error("division by zero polynomial");
    Poly q;
    Poly r = g;
    const Rational inv_lc = f.lc().inverse();
    while (r.degree() >= f.degree()) {
        const int k = r.degree() - f.degree();
        const Rational c = r.lc() * inv_lc;
        const Poly t = Poly::monomial(k, c);
        q = q + t;
        r = r - t * f;
    }
    return {q, r};
}

Poly poly_gcd(Poly a, Poly b) {
    if (a.is_zero() && b.is_zero()) throw precondition_error("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

// Determinant by fraction-full Gaussian elimination; exact over Q.
Rational dense_det(std::vector<std::vector<Rational>> m) {
    const size_t n = m.size();
    Rational det(1);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return Rational(0);
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        det *= m[k][k];
        const Rational inv = m[k][k].inverse();
        for (size_t i = k + 1; i < n; ++i) {
            if (m[i][k].is_zero()) continue;
            const Rational fac = m[i][k] * inv;
            for (size_t j = k; j < n; ++j) m[i][j] -= fac * m[k][j];
        }
    }
    return det;
}

} // namespace

Rational resultant(const Poly& f, const Poly& g) {
    if (f.is_zero() || g.is_zero()) throw precondition_error("resultant of zero polynomial");
    const int n = f.degree();
    const int m = g.degree();
    if (n == 0) return f.lc().pow(m);
    if (m == 0) return g.lc().pow(n);
    const size_t sz = static_cast<size_t>(n + m);
    std::vector<std::vector<Rational>> s(sz, std::vector<Rational>(sz, Rational(0)));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s[i][i + j] = f.coeff(n - j);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s[m + i][i + j] = g.coeff(m - j);
    return dense_det(std::move(s));
}

Rational discriminant(const Poly& f) {
    const int d = f.degree();
    if (d < 1) throw precondition_error("discriminant requires degree >= 1");
    const Rational r = resultant(f, f.derivative()) / f.lc();
    return (static_cast<long>(d) * (d - 1) / 2) % 2 == 0 ? r : -r;
}

namespace {

// Positive divisors of |n|, by trial division. Throws once the scan
// exceeds the bound rather than silently missing divisors.
std::vector<mpz_class> positive_divisors(const mpz_class& n_in) {
    mpz_class n = ::abs(n_in);
    if (n == 0) throw internal_error("divisors of zero requested");
    std::vector<mpz_class> small, large;
    const long kMaxTrials = 2000000;
    mpz_class d = 1;
    long trials = 0;
    for (; d * d <= n; ++d) {
        if (++trials > kMaxTrials)
            throw precondition_error("rational root search exceeded factorization bound");
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

std::vector<Rational> rational_roots(const Poly& f) {
    if (f.is_zero()) throw precondition_error("roots of zero polynomial");
    std::vector<Rational> roots;
    Poly p = f;
    while (!p.is_zero() && p.coeff(0).is_zero() && p.degree() >= 1) {
        roots.emplace_back(0);
        p = poly_divmod(p, Poly::monomial(1, Rational(1))).first;
    }
    if (p.degree() >= 1) {
        // Clear denominators to an integer polynomial; candidates are
        // (divisor of constant term) / (divisor of leading coefficient).
        mpz_class den_lcm = 1;
        for (const auto& c : p.coeffs()) {
            mpz_class g;
            mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
            den_lcm = den_lcm / g * c.den();
        }
        std::vector<mpz_class> ic(p.coeffs().size());
        for (size_t i = 0; i < ic.size(); ++i) {
            mpq_class scaled = p.coeffs()[i].raw() * mpq_class(den_lcm);
            ic[i] = scaled.get_num();
        }
        const auto ps = positive_divisors(ic.front());
        const auto qs = positive_divisors(ic.back());
        for (const auto& pd : ps) {
            for (const auto& qd : qs) {
                for (int sgn : {1, -1}) {
                    const Rational cand{mpq_class(sgn * pd, qd)};
                    while (p.degree() >= 1 && p.eval(cand).is_zero()) {
                        roots.push_back(cand);
                        p = poly_divmod(p, Poly({-cand, Rational(1)})).first;
                    }
                }
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

} // namespace loopslice
