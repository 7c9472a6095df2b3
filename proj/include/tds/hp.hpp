#pragma once

#include <mpfr.h>

#include <string>
#include <utility>

#include "tds/integer.hpp"
#include "tds/surd.hpp"

namespace tds::numerics {

using arith::Integer;
using arith::Rational;
using arith::SurdValue;

/// Arbitrary-precision real backed by MPFR. Every value carries its own
/// precision; binary operations compute at the larger operand precision with
/// round-to-nearest (error <= 1/2 ulp per operation).
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 64) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of(const Integer& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of(const Rational& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real parse(const std::string& text, mpfr_prec_t prec) {
        Real r(prec);
        if (mpfr_set_str(r.v_, text.c_str(), 10, MPFR_RNDN) != 0)
            throw ParseError("bad decimal literal '" + text + "'", 0);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    static Real zeta(unsigned long s, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_zeta_ui(r.v_, s, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    Real rounded_to(mpfr_prec_t prec) const {
        Real r(prec);
        mpfr_set(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }

    /// Value as "d.ddd...e±x" with the given number of significant digits,
    /// correctly rounded from this value.
    std::string str(int sig_digits = 40) const;

  private:
    mpfr_t v_;
};

inline Real abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sin(const Real& a) {
    Real r(a.prec());
    mpfr_sin(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cos(const Real& a) {
    Real r(a.prec());
    mpfr_cos(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real sinh(const Real& a) {
    Real r(a.prec());
    mpfr_sinh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real cosh(const Real& a) {
    Real r(a.prec());
    mpfr_cosh(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
inline Real pow_si(const Real& a, long e) {
    Real r(a.prec());
    mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}
/// 2^e as an exact Real (for tolerance thresholds).
inline Real exp2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
}

/// Exact surd image x + y*sqrt(d) rounded to the working precision.
inline Real surd_to_real(const SurdValue& v, mpfr_prec_t prec) {
    Real x = Real::of(v.x(), prec + 8);
    if (v.y() == 0) return x.rounded_to(prec);
    Real y = Real::of(v.y(), prec + 8);
    Real sd = sqrt(Real::of(v.d(), prec + 8));
    return (x + y * sd).rounded_to(prec);
}

/// Complex value with Real components (shared precision conventions).
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    Complex(Real re_, Real im_) : re(std::move(re_)), im(std::move(im_)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
    Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
    Complex operator-() const { return {-re, -im}; }
    Complex operator*(const Complex& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    Complex operator*(const Real& k) const { return {re * k, im * k}; }
    Complex operator/(const Complex& o) const {
        Real n = o.re * o.re + o.im * o.im;
        return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
    }
};

inline Real abs(const Complex& z) {
    Real r(z.prec());
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

inline Complex cpow(Complex base, long e) {
    mpfr_prec_t p = base.prec();
    bool invert = e < 0;
    unsigned long n = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Complex acc(Real::of(1L, p), Real::of(0L, p));
    while (n) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    if (invert) {
        Complex one(Real::of(1L, p), Real::of(0L, p));
        return one / acc;
    }
    return acc;
}

/// sin(x + iy) = sin x cosh y + i cos x sinh y
inline Complex csin(const Complex& z) {
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}
/// cos(x + iy) = cos x cosh y - i sin x sinh y
inline Complex ccos(const Complex& z) {
    return {cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))};
}
/// e^{iz} = e^{-y} (cos x + i sin x)
inline Complex cexp_i(const Complex& z) {
    Real damp = exp(-z.im);
    return {cos(z.re) * damp, sin(z.re) * damp};
}

}  // namespace tds::numerics
