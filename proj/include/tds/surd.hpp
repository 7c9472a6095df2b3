#pragma once

#include <string>
#include <tuple>

#include "tds/integer.hpp"

namespace tds::arith {

/// An element x + y*sqrt(d) of a real quadratic field, with exact rational
/// parts. d is a squarefree integer > 1 whenever y != 0; pure rationals
/// carry d = 1. Values are immutable after construction.
class SurdValue {
  public:
    SurdValue() : x_(0), y_(0), d_(1) {}
    SurdValue(Rational x) : x_(std::move(x)), y_(0), d_(1) {}  // NOLINT(google-explicit-constructor)
    SurdValue(Rational x, Rational y, Integer d);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Integer& d() const { return d_; }

    bool is_zero() const { return x_ == 0 && y_ == 0; }
    bool is_rational() const { return y_ == 0; }

    SurdValue operator-() const { return SurdValue(-x_, -y_, d_); }
    SurdValue operator+(const SurdValue& o) const;
    SurdValue operator-(const SurdValue& o) const;
    SurdValue operator*(const SurdValue& o) const;
    SurdValue operator/(const SurdValue& o) const;
    SurdValue inverse() const;
    SurdValue pow(long e) const;

    /// Galois conjugate x - y*sqrt(d).
    SurdValue conjugate() const { return SurdValue(x_, -y_, d_); }

    bool operator==(const SurdValue& o) const;
    bool operator!=(const SurdValue& o) const { return !(*this == o); }

    /// Exact sign (-1, 0, +1) via integer square comparisons.
    int sign() const;

    std::string str() const;

  private:
    Rational x_, y_;
    Integer d_;
};

inline SurdValue operator*(const Rational& c, const SurdValue& v) {
    return SurdValue(c) * v;
}

/// floor(x), computed exactly with integer square roots (no floating point).
Integer surd_floor(const SurdValue& v);

/// A normalized real quadratic irrationality rho = (p + q*sqrt(d))/r with
/// d squarefree > 1, r > 0, gcd(p,q,r) = 1, together with its minimal
/// polynomial A x^2 + B x + C (A > 0, gcd(A,B,C) = 1) and discriminant
/// Delta = B^2 - 4AC > 0.
class QuadraticIrrational {
  public:
    const Integer& p() const { return p_; }
    const Integer& q() const { return q_; }
    const Integer& r() const { return r_; }
    const Integer& d() const { return d_; }
    const Integer& A() const { return A_; }
    const Integer& B() const { return B_; }
    const Integer& C() const { return C_; }
    const Integer& delta() const { return delta_; }

    SurdValue value() const {
        return SurdValue(make_rational(p_, r_), make_rational(q_, r_), d_);
    }

    /// rho^2 in Q, i.e. rho is a pure multiple of sqrt(d).
    bool square_is_rational() const { return p_ == 0; }

    /// The quadratic irrational mu*rho + sigma (mu != 0), renormalized.
    QuadraticIrrational affine(const Rational& mu, const Rational& sigma) const;

    bool operator==(const QuadraticIrrational& o) const {
        return p_ == o.p_ && q_ == o.q_ && r_ == o.r_ && d_ == o.d_;
    }

    auto key() const { return std::tie(p_, q_, r_, d_); }

    std::string str() const;

    friend QuadraticIrrational normalize_surd(Integer p, Integer q, Integer r, Integer d);

  private:
    QuadraticIrrational() = default;
    Integer p_, q_, r_, d_;
    Integer A_, B_, C_, delta_;
};

/// Canonical representative of (p + q*sqrt(d))/r. Square factors of d are
/// pulled into q; throws RationalInput if the value is rational and
/// NonRealInput if d < 0.
QuadraticIrrational normalize_surd(Integer p, Integer q, Integer r, Integer d);

}  // namespace tds::arith
