#include "tds/evaluate.hpp"

#include <map>

#include "tds/bernoulli.hpp"

namespace tds::evaluator {

using arith::bernoulli_poly;
using arith::factorial;
using arith::Integer;
using arith::make_rational;
using arith::pow_int;
using arith::pow_rat;
using arith::Rational;
using arith::surd_floor;
using arith::zeta_even_pi_coeff;
using cocycle::eval_derivative_at_fixed_point;
using cocycle::SeriesKind;

namespace {

// pi^s coefficient of sum_n cos(2 pi n x)/n^s (even s) or
// sum_n sin(2 pi n x)/n^s (odd s): (-1)^{floor(s/2)+1} 2^{s-1}/s! B_s(x).
Rational harmonic_pi_coeff(long s) {
    Rational c = Rational(pow_int(Integer(2), static_cast<unsigned long>(s - 1))) /
                 Rational(factorial(static_cast<unsigned long>(s)));
    return ((s / 2) % 2 == 0) ? -c : c;
}

}  // namespace

SurdValue eval_nonpositive(long a, long b, long s, const QuadraticIrrational& rho) {
    if (a > 0 || b > 0) throw InternalError("eval_nonpositive needs a <= 0 and b <= 0");
    if (s <= 1) throw ConvergenceBound("convergence: nonpositive branch needs s > 1");
    if (((s - b) % 2 + 2) % 2 != 0)
        throw ParityError("parity: s and b must have the same parity");
    long p = -a, q = -b;

    // cos^p sin^q = 1/(2^{p+q} i^q) sum_{j,k} binom(p,j) binom(q,k) (-1)^{q-k}
    //               e^{i(2(j+k)-(p+q)) x}; collect integer coefficients per
    //               frequency e.
    std::map<long, Integer> freq;
    for (long j = 0; j <= p; ++j)
        for (long k = 0; k <= q; ++k) {
            Integer c = arith::binomial(static_cast<unsigned long>(p), static_cast<unsigned long>(j)) *
                        arith::binomial(static_cast<unsigned long>(q), static_cast<unsigned long>(k));
            if ((q - k) % 2 != 0) c = -c;
            freq[2 * (j + k) - (p + q)] += c;
        }

    Rational two_pow = Rational(pow_int(Integer(2), static_cast<unsigned long>(p + q)));
    SurdValue total;
    SurdValue rho_val = rho.value();
    if (q % 2 == 0) {
        // Even function: cosine harmonics plus the constant term via zeta(s).
        Rational pref = Rational(1) / two_pow;
        if ((q / 2) % 2 != 0) pref = -pref;
        Integer c0 = freq.count(0) ? freq[0] : Integer(0);
        if (c0 != 0) total = total + SurdValue(pref * Rational(c0) * zeta_even_pi_coeff(static_cast<unsigned long>(s)));
        for (const auto& [e, c] : freq) {
            if (e <= 0 || c == 0) continue;
            SurdValue arg = rho_val * SurdValue(make_rational(e, 2));
            SurdValue x = arg - SurdValue(Rational(surd_floor(arg)));
            total = total + SurdValue(pref * Rational(2) * Rational(c) * harmonic_pi_coeff(s)) *
                                bernoulli_poly(static_cast<unsigned long>(s), x);
        }
    } else {
        // Odd function: sine harmonics only.
        Rational pref = Rational(2) / two_pow;
        if (((q - 1) / 2) % 2 != 0) pref = -pref;
        for (const auto& [e, c] : freq) {
            if (e <= 0 || c == 0) continue;
            SurdValue arg = rho_val * SurdValue(make_rational(e, 2));
            SurdValue x = arg - SurdValue(Rational(surd_floor(arg)));
            total = total + SurdValue(pref * Rational(c) * harmonic_pi_coeff(s)) *
                                bernoulli_poly(static_cast<unsigned long>(s), x);
        }
    }
    return total;
}

SurdValue eval_csc_tan_derivative(CscTan kind, long j, long s, const QuadraticIrrational& rho) {
    if (s % 2 == 0) throw ParityError("parity: cosecant/tangent derivatives need odd s");
    if (s < 2 * j + 2) throw ConvergenceBound("convergence: needs s >= 2j + 2");
    if (kind == CscTan::Csc) {
        SurdValue half = eval_derivative_at_fixed_point(SeriesKind::Cotangent, j, s,
                                                        rho.affine(make_rational(1, 2), Rational(0)));
        SurdValue one = eval_derivative_at_fixed_point(SeriesKind::Cotangent, j, s, rho);
        return SurdValue(pow_rat(make_rational(1, 2), j)) * half - one;
    }
    SurdValue one = eval_derivative_at_fixed_point(SeriesKind::Cotangent, j, s, rho);
    SurdValue dbl = eval_derivative_at_fixed_point(SeriesKind::Cotangent, j, s,
                                                   rho.affine(Rational(2), Rational(0)));
    return one - SurdValue(pow_rat(Rational(2), j + 1)) * dbl;
}

Evaluation evaluate(long a, long b, long s, const QuadraticIrrational& rho) {
    LinearCombination plan = lower_plan(a, b, s);
    SurdValue total;
    for (const auto& t : plan.terms) {
        switch (t.kind) {
            case TermKind::NonPositive:
                total = total + SurdValue(t.coeff) * eval_nonpositive(t.a, t.b, s, rho);
                break;
            case TermKind::DSecant: {
                QuadraticIrrational point = (t.scale == 1 && t.shift == 0)
                                                ? rho
                                                : rho.affine(t.scale, t.shift);
                total = total + SurdValue(t.coeff) *
                                    eval_derivative_at_fixed_point(SeriesKind::Secant, t.order,
                                                                   t.weight, point);
                break;
            }
            case TermKind::DCotangent: {
                QuadraticIrrational point = (t.scale == 1 && t.shift == 0)
                                                ? rho
                                                : rho.affine(t.scale, t.shift);
                total = total + SurdValue(t.coeff) *
                                    eval_derivative_at_fixed_point(SeriesKind::Cotangent, t.order,
                                                                   t.weight, point);
                break;
            }
            default:
                throw InternalError("unlowered term in evaluation plan");
        }
    }
    if (a + b >= 0 && rho.square_is_rational()) {
        // Theorem control: for rho with rho^2 rational the value lies in
        // (pi rho)^s Q, i.e. the coefficient is purely rational (even s) or a
        // pure sqrt(d) multiple (odd s).
        bool ok = (s % 2 == 0) ? total.y() == 0 : total.x() == 0;
        if (!ok) throw InternalError("evaluation escaped (pi rho)^s Q");
    }
    return Evaluation(total, s, a, b, rho);
}

TwistedVariant twisted_from_name(const std::string& name) {
    if (name == "alt-csc") return TwistedVariant::AltCsc;
    if (name == "odd-tan") return TwistedVariant::OddTan;
    if (name == "chi-sec") return TwistedVariant::ChiSec;
    throw ParseError("unknown twisted variant '" + name + "'", 0);
}

std::string twisted_name(TwistedVariant v) {
    switch (v) {
        case TwistedVariant::AltCsc: return "alt-csc";
        case TwistedVariant::OddTan: return "odd-tan";
        case TwistedVariant::ChiSec: return "chi-sec";
    }
    throw InternalError("unknown twisted variant");
}

Evaluation eval_twisted(TwistedVariant variant, long s, const QuadraticIrrational& rho) {
    if (s % 2 == 0)
        throw ParityError("parity: twisted variant '" + twisted_name(variant) + "' needs odd s");
    SurdValue coeff;
    Rational half = make_rational(1, 2);
    Rational two_pow_s = Rational(pow_int(Integer(2), static_cast<unsigned long>(s)));
    switch (variant) {
        case TwistedVariant::AltCsc:
            coeff = -evaluate(0, 1, s, rho.affine(Rational(1), Rational(1))).coeff;
            break;
        case TwistedVariant::OddTan:
            coeff = SurdValue(Rational(1) / two_pow_s) *
                        evaluate(-1, 1, s, rho.affine(Rational(2), Rational(0))).coeff -
                    evaluate(-1, 1, s, rho.affine(Rational(1), half)).coeff;
            break;
        case TwistedVariant::ChiSec:
            coeff = evaluate(0, 1, s, rho.affine(Rational(1), half)).coeff -
                    SurdValue(Rational(1) / two_pow_s) *
                        evaluate(0, 1, s, rho.affine(Rational(2), Rational(1))).coeff;
            break;
    }
    return Evaluation(coeff, s, 0, 0, rho, twisted_name(variant));
}

}  // namespace tds::evaluator
