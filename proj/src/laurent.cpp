#include "loopslice/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "loopslice/errors.hpp"

namespace loopslice {

namespace {
long clamp_prec(long p) { return std::min(p, Laurent::kInfPrec); }
} // namespace

void Laurent::normalize() {
    prec_ = clamp_prec(prec_);
    // Drop coefficients at or beyond the precision.
    if (!c_.empty() && val_ + static_cast<long>(c_.size()) > prec_) {
        const long keep = std::max<long>(0, prec_ - val_);
        c_.resize(static_cast<size_t>(keep));
    }
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
        val_ += static_cast<long>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) val_ = prec_;
}

Laurent Laurent::zero(long prec) {
    Laurent x;
    x.val_ = clamp_prec(prec);
    x.prec_ = x.val_;
    return x;
}

Laurent Laurent::exact(const Rational& c, long exp) {
    return make(exp, {c}, kInfPrec);
}

Laurent Laurent::monomial(const Rational& c, long exp, long prec) {
    return make(exp, {c}, prec);
}

Laurent Laurent::make(long val, std::vector<Rational> coeffs, long prec) {
    Laurent x;
    x.val_ = val;
    x.c_ = std::move(coeffs);
    x.prec_ = clamp_prec(prec);
    x.normalize();
    if (!x.c_.empty() && x.val_ >= x.prec_) throw internal_error("laurent valuation >= precision");
    return x;
}

long Laurent::valuation() const {
    if (c_.empty())
        throw precondition_error("valuation of (apparent) zero series");
    return val_;
}

Rational Laurent::coeff(long k) const {
    if (k >= prec_) throw precondition_error("coefficient beyond recorded precision");
    if (c_.empty() || k < val_ || k >= val_ + static_cast<long>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(k - val_)];
}

Laurent Laurent::operator-() const {
    Laurent x = *this;
    for (auto& c : x.c_) c = -c;
    return x;
}

Laurent Laurent::operator+(const Laurent& g) const {
    const long prec = std::min(prec_, g.prec_);
    const long lo = std::min(val_lower_bound(), g.val_lower_bound());
    if (lo >= prec) return zero(prec);
    long hi = lo;
    if (!c_.empty()) hi = std::max(hi, val_ + static_cast<long>(c_.size()));
    if (!g.c_.empty()) hi = std::max(hi, g.val_ + static_cast<long>(g.c_.size()));
    hi = std::min(hi, prec);
    std::vector<Rational> c(static_cast<size_t>(hi - lo), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        const long k = val_ + static_cast<long>(i);
        if (k < hi) c[static_cast<size_t>(k - lo)] += c_[i];
    }
    for (size_t i = 0; i < g.c_.size(); ++i) {
        const long k = g.val_ + static_cast<long>(i);
        if (k < hi) c[static_cast<size_t>(k - lo)] += g.c_[i];
    }
    return make(lo, std::move(c), prec);
}

Laurent Laurent::operator-(const Laurent& g) const { return *this + (-g); }

Laurent Laurent::operator*(const Laurent& g) const {
    const long prec = (is_exact() && g.is_exact())
                          ? kInfPrec
                          : clamp_prec(std::min(prec_ + g.val_lower_bound(),
                                                g.prec_ + val_lower_bound()));
    if (c_.empty() || g.c_.empty()) return zero(prec);
    const long lo = val_ + g.val_;
    if (lo >= prec) return zero(prec);
    const long hi = std::min(lo + static_cast<long>(c_.size() + g.c_.size()) - 1, prec);
    std::vector<Rational> c(static_cast<size_t>(hi - lo), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < g.c_.size(); ++j) {
            const long k = lo + static_cast<long>(i + j);
            if (k >= hi) break;
            c[static_cast<size_t>(k - lo)] += c_[i] * g.c_[j];
        }
    }
    return make(lo, std::move(c), prec);
}

Laurent Laurent::inverse(long out_prec) const {
    if (c_.empty()) throw precondition_error("inverting (apparent) zero series");
    const long v = val_;
    long prec = clamp_prec(std::min(out_prec + 2 * v, prec_)); // input window needed
    long rel = prec - v;                                       // relative known terms
    if (prec_ == kInfPrec && out_prec == kInfPrec) {
        if (c_.size() == 1) return exact(c_[0].inverse(), -v);
        throw precondition_error("inverse of a non-monomial exact series requires a precision");
    }
    if (rel <= 0) throw precondition_error("insufficient precision to invert");
    // x = c0 t^v (1 + u); 1/x = (1/c0) t^{-v} sum (-u)^k, u of positive valuation.
    const Rational c0inv = c_[0].inverse();
    std::vector<Rational> u(static_cast<size_t>(rel), Rational(0));
    for (size_t i = 1; i < c_.size() && i < static_cast<size_t>(rel); ++i) u[i] = c_[i] * c0inv;
    std::vector<Rational> inv(static_cast<size_t>(rel), Rational(0));
    inv[0] = Rational(1);
    // inv = 1 / (1+u) by the recurrence inv[k] = -sum_{j>=1} u[j] inv[k-j].
    for (long k = 1; k < rel; ++k) {
        Rational s(0);
        for (long j = 1; j <= k; ++j) s += u[static_cast<size_t>(j)] * inv[static_cast<size_t>(k - j)];
        inv[static_cast<size_t>(k)] = -s;
    }
    for (auto& c : inv) c *= c0inv;
    return make(-v, std::move(inv), rel - v);
}

Rational Laurent::residue() const {
    if (prec_ < 0)
        throw precondition_error("precision too low to determine the t^-1 coefficient");
    return coeff(-1);
}

Laurent Laurent::truncated(long p) const {
    Laurent x = *this;
    x.prec_ = clamp_prec(std::min(prec_, p));
    x.normalize();
    return x;
}

Laurent Laurent::polar_part() const {
    Laurent x;
    x.val_ = val_;
    for (size_t i = 0; i < c_.size(); ++i)
        if (val_ + static_cast<long>(i) < 0) x.c_.push_back(c_[i]);
    x.prec_ = prec_ >= 0 ? kInfPrec : prec_;
    x.normalize();
    return x;
}

bool Laurent::is_integral() const {
    if (!c_.empty()) return val_ >= 0;
    if (prec_ >= 0) return true;
    throw precondition_error(
        "integrality undecidable at current precision (known terms vanish below t^0)");
}

std::string Laurent::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        const long k = val_ + static_cast<long>(i);
        if (!first) os << (c_[i].sign() > 0 ? " + " : " - ");
        else if (c_[i].sign() < 0) os << "-";
        first = false;
        const Rational a = c_[i].abs();
        if (k == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << "t";
            if (k != 1) os << "^" << k;
        }
    }
    if (first) os << "0";
    if (prec_ != kInfPrec) os << " + O(t^" << prec_ << ")";
    return os.str();
}

} // namespace loopslice
