#include "tds/polynomial.hpp"

#include <algorithm>

namespace tds::arith {

void Polynomial::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(const Rational& coeff, std::size_t power) {
    if (coeff == 0) return {};
    std::vector<Rational> c(power + 1, Rational(0));
    c[power] = coeff;
    return Polynomial(std::move(c));
}

const Rational& Polynomial::leading() const {
    if (c_.empty()) throw InternalError("leading coefficient of zero polynomial");
    return c_.back();
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c(c_);
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& k) const {
    if (k == 0) return {};
    std::vector<Rational> c(c_);
    for (auto& x : c) x *= k;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::pow(unsigned long e) const {
    Polynomial acc{Rational(1)};
    Polynomial base = *this;
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> c(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return Polynomial(std::move(c));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

SurdValue Polynomial::eval(const SurdValue& x) const {
    SurdValue acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + SurdValue(*it);
    return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw InternalError("polynomial division by zero");
    Polynomial rem = *this;
    std::vector<Rational> q;
    long dd = divisor.degree();
    if (rem.degree() >= dd) q.assign(static_cast<std::size_t>(rem.degree() - dd) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= dd) {
        long k = rem.degree() - dd;
        Rational f = rem.leading() / divisor.leading();
        q[static_cast<std::size_t>(k)] = f;
        rem = rem - Polynomial::monomial(f, static_cast<std::size_t>(k)) * divisor;
    }
    return {Polynomial(std::move(q)), rem};
}

Rational Polynomial::content() const {
    if (is_zero()) return Rational(1);
    Integer num_gcd(0), den_lcm(1);
    for (const auto& q : c_) {
        num_gcd = gcd(num_gcd, abs(q.get_num()));
        den_lcm = den_lcm / gcd(den_lcm, q.get_den()) * q.get_den();
    }
    Rational c = make_rational(num_gcd, den_lcm);
    if (sgn(leading()) < 0) c = -c;
    return c;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
        Rational a = coeff(static_cast<std::size_t>(i));
        if (a == 0) continue;
        if (!s.empty()) s += sgn(a) > 0 ? " + " : " - ";
        else if (sgn(a) < 0) s += "-";
        Rational mag = abs(a);
        bool unit = (mag == 1) && i > 0;
        if (!unit) s += to_string(mag);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

namespace {

// Integer-coefficient primitive part (content removed).
Polynomial primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.content());
}

}  // namespace

Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.is_zero() ? b : primitive(b);
    if (b.is_zero()) return primitive(a);
    a = primitive(a);
    b = primitive(b);
    // Euclidean remainders, re-primitivized each step to tame growth.
    while (!b.is_zero()) {
        Polynomial r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? r : primitive(r);
    }
    return a;
}

Polynomial mobius_numerator(const Polynomial& p, const Integer& a, const Integer& b,
                            const Integer& c, const Integer& d) {
    if (p.is_zero()) return {};
    Polynomial num{Rational(b), Rational(a)};   // a*tau + b
    Polynomial den{Rational(d), Rational(c)};   // c*tau + d
    // Horner in (a tau + b), padding each step with (c tau + d).
    Polynomial acc;
    for (long i = p.degree(); i >= 0; --i) {
        acc = acc * num + den.pow(static_cast<unsigned long>(p.degree() - i)) *
                              p.coeff(static_cast<std::size_t>(i));
    }
    return acc;
}

}  // namespace tds::arith
