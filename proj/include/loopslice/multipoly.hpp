#pragma once

#include <map>
#include <string>
#include <vector>

#include "loopslice/poly.hpp"
#include "loopslice/rational.hpp"

namespace loopslice {

/// Sparse multivariate Laurent polynomial over a declared variable list.
/// Terms map exponent vectors (one integer per variable, negatives allowed)
/// to nonzero rational coefficients; the map order is lexicographic.
class MultiPoly {
public:
    using Expo = std::vector<int>;

    MultiPoly() = default;
    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c);
    static MultiPoly variable(std::vector<std::string> vars, const std::string& name);
    static MultiPoly monomial(std::vector<std::string> vars, Expo e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<Expo, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t var_index(const std::string& name) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& g) const;
    MultiPoly operator-(const MultiPoly& g) const;
    MultiPoly operator*(const MultiPoly& g) const;
    MultiPoly scaled(const Rational& c) const;
    MultiPoly pow(long e) const; // e >= 0, or the poly is a single term
    bool operator==(const MultiPoly& g) const { return vars_ == g.vars_ && terms_ == g.terms_; }

    /// Lexicographically greatest term. Throws on zero.
    std::pair<Expo, Rational> leading_term() const;

    Rational coefficient(const Expo& e) const;

    /// Collects terms with exponent k in variable `vi`, with that exponent
    /// zeroed out; the coefficient of var^k viewed in the same ring.
    MultiPoly coeff_of_power(size_t vi, int k) const;

    /// Largest exponent of variable `vi` that appears (0 for zero poly).
    int degree_in(size_t vi) const;

    Rational eval(const std::map<std::string, Rational>& point) const;

    /// Ring map sending each variable to a single-term (monomial) image in
    /// the target ring; variables absent from the map must not occur.
    MultiPoly substitute_monomials(const std::map<std::string, MultiPoly>& images,
                                   const std::vector<std::string>& target_vars) const;

    /// Conversion to a univariate Poly in variable `vi`; every other
    /// variable must be absent and exponents must be nonnegative.
    Poly to_univariate(size_t vi) const;

    std::string str() const;

private:
    void add_term(const Expo& e, const Rational& c);
    void check_ring(const MultiPoly& g) const;

    std::vector<std::string> vars_;
    std::map<Expo, Rational> terms_;
};

/// Determinant of a square matrix of MultiPoly entries (cofactor expansion;
/// intended for small symbolic matrices).
MultiPoly mp_det(const std::vector<std::vector<MultiPoly>>& m);

/// Adjugate of a square matrix of MultiPoly entries.
std::vector<std::vector<MultiPoly>> mp_adjugate(const std::vector<std::vector<MultiPoly>>& m);

} // namespace loopslice
