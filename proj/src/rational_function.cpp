#include "tds/rational_function.hpp"

namespace tds::arith {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InternalError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial{Rational(1)};
        return;
    }
    Polynomial g = poly_gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.divmod(g).first;
        den_ = den_.divmod(g).first;
    }
    Rational c = den_.content();
    num_ = num_ * (Rational(1) / c);
    den_ = den_ * (Rational(1) / c);
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw InternalError("rational function division by zero");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator*(const Rational& k) const {
    return RationalFunction(num_ * k, den_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

SurdValue RationalFunction::eval(const SurdValue& x) const {
    SurdValue d = den_.eval(x);
    if (d.is_zero()) throw InternalError("rational function pole at evaluation point");
    return num_.eval(x) / d;
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw InternalError("rational function pole at evaluation point");
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (den_ == Polynomial{Rational(1)}) return num_.str(var);
    return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

}  // namespace tds::arith
