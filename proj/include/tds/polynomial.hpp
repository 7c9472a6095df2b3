#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "tds/integer.hpp"
#include "tds/surd.hpp"

namespace tds::arith {

/// Dense univariate polynomial over Q; index = power of the variable.
/// The coefficient of the highest stored power is nonzero (zero polynomial
/// stores nothing).
class Polynomial {
  public:
    Polynomial() = default;
    Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { normalize(); }
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }
    explicit Polynomial(Rational constant) : c_{std::move(constant)} { normalize(); }

    static Polynomial monomial(const Rational& coeff, std::size_t power);

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& k) const;
    Polynomial pow(unsigned long e) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial derivative() const;

    Rational eval(const Rational& x) const;
    SurdValue eval(const SurdValue& x) const;

    /// Quotient and remainder over Q; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

    /// Content (gcd of coefficients as a positive rational scaling) such that
    /// (*this)/content has coprime integer coefficients; sign chosen so the
    /// primitive part has positive leading coefficient.
    Rational content() const;

    std::string str(const std::string& var = "tau") const;

  private:
    void normalize();
    std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& k, const Polynomial& p) { return p * k; }

/// Primitive gcd with positive leading coefficient (1 for coprime inputs).
Polynomial poly_gcd(Polynomial a, Polynomial b);

/// (c*tau + d)^deg(p) * p((a*tau + b)/(c*tau + d)) — the polynomial part of a
/// Moebius substitution.
Polynomial mobius_numerator(const Polynomial& p, const Integer& a, const Integer& b,
                            const Integer& c, const Integer& d);

}  // namespace tds::arith
