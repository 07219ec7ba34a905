#pragma once

#include <string>
#include <utility>
#include <vector>

#include "loopslice/rational.hpp"

namespace loopslice {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// by exponent. The zero polynomial has an empty coefficient list and
/// degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(const Rational& c) { if (!c.is_zero()) c_ = {c}; }
    explicit Poly(std::vector<Rational> ascending) : c_(std::move(ascending)) { trim(); }

    static Poly monomial(int deg, const Rational& c);
    static Poly from_roots(const std::vector<Rational>& roots); // monic

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    const Rational& lc() const;
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly operator+(const Poly& g) const;
    Poly operator-(const Poly& g) const;
    Poly operator*(const Poly& g) const;
    Poly scaled(const Rational& c) const;
    Poly pow(long e) const;
    bool operator==(const Poly& g) const { return c_ == g.c_; }

    Rational eval(const Rational& x) const;
    Poly derivative() const;
    Poly monic() const; // throws on zero

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Euclidean division: g = q*f + r with deg r < deg f. Throws on zero f.
std::pair<Poly, Poly> poly_divmod(const Poly& g, const Poly& f);

/// Monic gcd by the Euclidean algorithm; gcd(0,0) is an error.
Poly poly_gcd(Poly a, Poly b);

/// Sylvester-determinant resultant; zero iff f and g share a root.
Rational resultant(const Poly& f, const Poly& g);

/// disc(f) = (-1)^{d(d-1)/2} resultant(f, f') / lc(f); zero iff f has a
/// repeated root. Requires deg f >= 1.
Rational discriminant(const Poly& f);

/// All rational roots of f, with multiplicity, sorted ascending. Complete:
/// either returns every rational root or throws if the divisor search
/// exceeds its factorization bound.
std::vector<Rational> rational_roots(const Poly& f);

} // namespace loopslice
