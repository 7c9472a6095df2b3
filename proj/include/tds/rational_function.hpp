#pragma once

#include <string>

#include "tds/polynomial.hpp"

namespace tds::arith {

/// Ratio of polynomials over Q in canonical form: gcd(num, den) = 1 and the
/// denominator is a primitive integer polynomial with positive leading
/// coefficient, so equality is plain coefficient comparison.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_{Rational(1)} {}
    RationalFunction(Rational constant)  // NOLINT(google-explicit-constructor)
        : num_(Polynomial(std::move(constant))), den_{Rational(1)} {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction variable() { return RationalFunction(Polynomial{Rational(0), Rational(1)}, Polynomial{Rational(1)}); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction operator*(const Rational& k) const;

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RationalFunction& o) const { return !(*this == o); }

    RationalFunction derivative() const;

    /// Exact evaluation; throws InternalError if the denominator vanishes.
    SurdValue eval(const SurdValue& x) const;
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "tau") const;

  private:
    Polynomial num_, den_;
};

inline RationalFunction operator*(const Rational& k, const RationalFunction& f) { return f * k; }

}  // namespace tds::arith
