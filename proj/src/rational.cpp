#include "loopslice/rational.hpp"

#include <ostream>

namespace loopslice {

Rational::Rational(long num, long den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
    if (s.empty()) throw precondition_error("empty rational literal");
    if (s.find_first_of(".eE") != std::string::npos)
        throw precondition_error("rational literal must be decimal-free: " + s);
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw precondition_error("malformed rational literal: " + s);
    if (q.get_den() == 0) throw precondition_error("rational with zero denominator: " + s);
    q.canonicalize();
    return Rational(std::move(q));
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw precondition_error("division by zero rational");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw precondition_error("inverse of zero rational");
    return Rational(mpq_class(1) / q_);
}

Rational Rational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    mpq_class r(1);
    mpq_class b = q_;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r *= b;
        if (k > 1) b *= b;
    }
    return Rational(std::move(r));
}

std::string Rational::str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace loopslice
