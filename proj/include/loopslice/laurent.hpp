#pragma once

#include <string>
#include <vector>

#include "loopslice/rational.hpp"

namespace loopslice {

/// Truncated Laurent series over Q: finitely many known coefficients
/// starting at the valuation, known modulo t^precision. A precision of
/// kInfPrec marks an exact value. An apparently-zero series stores no
/// coefficients and has valuation == precision (all that is known is that
/// it lies in t^precision * O).
///
/// Every operation records the tightest provable precision of its result.
class Laurent {
public:
    static constexpr long kInfPrec = 1L << 40;

    Laurent() : val_(kInfPrec), prec_(kInfPrec) {}

    static Laurent zero(long prec = kInfPrec);
    static Laurent exact(const Rational& c, long exp = 0);
    static Laurent monomial(const Rational& c, long exp, long prec);
    /// coeffs[i] is the coefficient of t^(val+i); normalized on construction.
    static Laurent make(long val, std::vector<Rational> coeffs, long prec);

    long precision() const { return prec_; }
    bool is_exact() const { return prec_ == kInfPrec; }
    bool is_zero() const { return c_.empty(); }
    long valuation() const;
    /// Valuation for nonzero series, precision for apparent zeros: the
    /// certified lower bound on the t-adic valuation.
    long val_lower_bound() const { return c_.empty() ? prec_ : val_; }
    /// Coefficient of t^k; requires k < precision.
    Rational coeff(long k) const;
    const std::vector<Rational>& raw_coeffs() const { return c_; }
    long raw_val() const { return val_; }

    Laurent operator-() const;
    Laurent operator+(const Laurent& g) const;
    Laurent operator-(const Laurent& g) const;
    Laurent operator*(const Laurent& g) const;

    /// Multiplicative inverse via geometric expansion. out_prec bounds the
    /// absolute precision of the result when the input is exact.
    Laurent inverse(long out_prec = kInfPrec) const;

    /// Coefficient of t^{-1}; requires precision >= 0.
    Rational residue() const;

    Laurent truncated(long p) const;
    /// Negative-exponent part, as the exact representative of the class
    /// modulo O (requires precision >= 0 to be exact).
    Laurent polar_part() const;
    bool is_integral() const; // val_lower_bound() >= 0; throws if undecidable

    bool operator==(const Laurent& g) const {
        return val_ == g.val_ && prec_ == g.prec_ && c_ == g.c_;
    }

    std::string str() const;

private:
    void normalize();

    long val_;
    std::vector<Rational> c_;
    long prec_;
};

} // namespace loopslice
