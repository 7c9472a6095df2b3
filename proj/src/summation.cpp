#include "tds/summation.hpp"

#include <map>

#include "tds/decompose.hpp"

namespace tds::numerics {

using arith::make_rational;
using arith::Polynomial;
using arith::Rational;
using arith::RationalFunction;
using arith::SurdValue;
using arith::surd_floor;

ConvergentSeq convergents(const QuadraticIrrational& rho, std::size_t count) {
    if (count < 1) throw InternalError("convergents needs count >= 1");
    ConvergentSeq seq;
    SurdValue x = rho.value();
    Integer p_prev = 1, q_prev = 0;
    Integer p = 0, q = 1;  // p_{-1}/q_{-1} staging; overwritten below
    bool first = true;
    for (std::size_t i = 0; i < count; ++i) {
        Integer a = surd_floor(x);
        seq.partial_quotients.push_back(a);
        if (first) {
            p = a;
            q = 1;
            first = false;
        } else {
            Integer pn = a * p + p_prev;
            Integer qn = a * q + q_prev;
            p_prev = p;
            q_prev = q;
            p = pn;
            q = qn;
        }
        seq.convergents.emplace_back(p, q);
        x = (x - SurdValue(Rational(a))).inverse();
    }
    return seq;
}

namespace {

mpfr_prec_t working_prec(mpfr_prec_t prec, unsigned long N) {
    if (prec < 64) throw PrecisionUnderflow("summation needs prec >= 64 bits");
    if (N < 1) throw DomainError("summation needs at least one term");
    unsigned long guard = 32;
    unsigned long log2n = 0;
    while ((1UL << log2n) < N && log2n < 63) ++log2n;
    return prec + static_cast<mpfr_prec_t>(log2n + guard);
}

// sin and cos of pi*n*rho with the argument reduced to 2*pi*frac(n*rho/2)
// from the exact surd floor.
struct ReducedTrig {
    Real sin_v, cos_v;
};

class RealSummer {
  public:
    RealSummer(const QuadraticIrrational& rho, mpfr_prec_t wprec)
        : rho_(rho),
          wprec_(wprec),
          pi_(Real::pi(wprec)),
          sqrt_d_(sqrt(Real::of(rho.d(), wprec))) {}

    ReducedTrig at(unsigned long n) const {
        Integer nz(static_cast<unsigned long>(n));
        // n*rho/2 = (n p + n q sqrt(d)) / (2 r); subtract the floor exactly.
        Integer np = nz * rho_.p(), nq = nz * rho_.q();
        Integer den = 2 * rho_.r();
        SurdValue half_arg(make_rational(np, den), make_rational(nq, den), rho_.d());
        Integer fl = surd_floor(half_arg);
        Integer A = np - fl * den;
        // theta = 2 pi frac = pi (A + nq sqrt(d)) / r in (0, 2 pi).
        Real frac_num = Real::of(A, wprec_) + Real::of(nq, wprec_) * sqrt_d_;
        Real theta = pi_ * frac_num / Real::of(rho_.r(), wprec_);
        return {sin(theta), cos(theta)};
    }

  private:
    const QuadraticIrrational& rho_;
    mpfr_prec_t wprec_;
    Real pi_;
    Real sqrt_d_;
};

Real term_power(const ReducedTrig& t, long a, long b) {
    // trig^{a,b} = cos^{-a} sin^{-b}
    return pow_si(t.cos_v, -a) * pow_si(t.sin_v, -b);
}

}  // namespace

Real partial_sum(long a, long b, long s, const QuadraticIrrational& rho, unsigned long N,
                 mpfr_prec_t prec) {
    mpfr_prec_t wp = working_prec(prec, N);
    RealSummer summer(rho, wp);
    Real acc(wp);
    for (unsigned long n = 1; n <= N; ++n) {
        Real term = term_power(summer.at(n), a, b) / pow_si(Real::of(static_cast<long>(n), wp), s);
        acc = acc + term;
    }
    return acc.rounded_to(prec);
}

Complex partial_sum(long a, long b, long s, const Complex& tau, unsigned long N,
                    mpfr_prec_t prec) {
    mpfr_prec_t wp = working_prec(prec, N);
    Real pi = Real::pi(wp);
    Complex acc(wp);
    for (unsigned long n = 1; n <= N; ++n) {
        Complex z = tau * (pi * Real::of(static_cast<long>(n), wp));
        Complex term = trig_ab(a, b, z);
        Real nn = pow_si(Real::of(static_cast<long>(n), wp), s);
        acc = acc + Complex{term.re / nn, term.im / nn};
    }
    return {acc.re.rounded_to(prec), acc.im.rounded_to(prec)};
}

Real twisted_partial_sum(TwistedVariant variant, long s, const QuadraticIrrational& rho,
                         unsigned long N, mpfr_prec_t prec) {
    mpfr_prec_t wp = working_prec(prec, N);
    RealSummer summer(rho, wp);
    Real acc(wp);
    for (unsigned long n = 1; n <= N; ++n) {
        long sign = 0;
        long a = 0, b = 0;
        switch (variant) {
            case TwistedVariant::AltCsc:  // (-1)^{n+1} csc
                sign = (n % 2 == 1) ? 1 : -1;
                b = 1;
                break;
            case TwistedVariant::OddTan:  // odd n only
                sign = (n % 2 == 1) ? 1 : 0;
                a = 1, b = -1;
                break;
            case TwistedVariant::ChiSec:  // (-4/n) character
                sign = (n % 2 == 0) ? 0 : ((n % 4 == 1) ? 1 : -1);
                a = 1;
                break;
        }
        if (sign == 0) continue;
        Real term = term_power(summer.at(n), a, b) / pow_si(Real::of(static_cast<long>(n), wp), s);
        acc = (sign > 0) ? acc + term : acc - term;
    }
    return acc.rounded_to(prec);
}

namespace {

// Integer-coefficient polynomial in (u, v) = (sec, tan) or (csc, cot),
// closed under d/dz: sec' = sec tan, tan' = sec^2, csc' = -csc cot,
// cot' = -csc^2.
struct TrigPoly {
    bool csc_basis;
    std::map<std::pair<long, long>, Integer> terms;  // (p, q) -> coeff of u^p v^q
};

TrigPoly basis_seed(TrigBase base) {
    switch (base) {
        case TrigBase::Sec: return {false, {{{1, 0}, 1}}};
        case TrigBase::Tan: return {false, {{{0, 1}, 1}}};
        case TrigBase::Csc: return {true, {{{1, 0}, 1}}};
        case TrigBase::Cot: return {true, {{{0, 1}, 1}}};
    }
    throw InternalError("unknown trig base");
}

TrigPoly differentiate(const TrigPoly& f) {
    TrigPoly g{f.csc_basis, {}};
    long sgn = f.csc_basis ? -1 : 1;
    for (const auto& [pq, c] : f.terms) {
        auto [p, q] = pq;
        // d(u^p v^q) = sign * (p u^p v^{q+1} + q u^{p+2} v^{q-1})
        if (p != 0) g.terms[{p, q + 1}] += sgn * Integer(p) * c;
        if (q != 0) g.terms[{p + 2, q - 1}] += sgn * Integer(q) * c;
    }
    return g;
}

Complex eval_trig_poly(const TrigPoly& f, const Complex& z) {
    mpfr_prec_t p = z.prec();
    Complex sz = csin(z), cz = ccos(z);
    Complex u = f.csc_basis ? Complex{Real::of(1L, p), Real::of(0L, p)} / sz
                            : Complex{Real::of(1L, p), Real::of(0L, p)} / cz;
    Complex v = f.csc_basis ? cz / sz : sz / cz;
    Complex acc(p);
    for (const auto& [pq, c] : f.terms) {
        Complex t = cpow(u, pq.first) * cpow(v, pq.second);
        acc = acc + t * Real::of(c, p);
    }
    return acc;
}

}  // namespace

Complex trig_derivative(TrigBase base, long m, const Complex& z) {
    TrigPoly f = basis_seed(base);
    for (long i = 0; i < m; ++i) f = differentiate(f);
    return eval_trig_poly(f, z);
}

Complex trig_ab(long a, long b, const Complex& z) {
    return cpow(ccos(z), -a) * cpow(csin(z), -b);
}

Complex uhp_psi_derivative(SeriesKind kind, long m, long s, const Complex& tau, mpfr_prec_t prec,
                           long tail_bits) {
    if (!(tau.im.sign() > 0)) throw InternalError("upper half-plane summation needs Im tau > 0");
    cocycle::check_parity(kind, s);
    mpfr_prec_t wp = prec + 64;
    Real pi = Real::pi(wp);
    double y = tau.im.to_double();
    if (tail_bits <= 0) tail_bits = static_cast<long>(prec) + 16;
    // Terms decay like e^{-pi n y} (secant and all cotangent derivatives) or
    // e^{-2 pi n y} (csc^2 and higher); use the weaker bound plus slop for
    // the polynomial prefactor (pi n)^m.
    auto N = static_cast<unsigned long>(static_cast<double>(tail_bits) * 0.6931 / (3.1415 * y)) +
             40 + 4 * static_cast<unsigned long>(m);
    Complex acc(wp);
    Complex taup{tau.re.rounded_to(wp), tau.im.rounded_to(wp)};
    bool cot_limit = (kind == SeriesKind::Cotangent && m == 0);
    TrigPoly f = basis_seed(kind == SeriesKind::Secant ? TrigBase::Sec : TrigBase::Cot);
    for (long i = 0; i < m; ++i) f = differentiate(f);
    for (unsigned long n = 1; n <= N; ++n) {
        Real nr = Real::of(static_cast<long>(n), wp);
        Complex z = taup * (pi * nr);
        Complex val(wp);
        if (cot_limit) {
            // cot z + i = e^{iz}/sin z decays; the subtracted -i tail is
            // restored through zeta(s) after the loop.
            val = cexp_i(z) / csin(z);
        } else {
            val = eval_trig_poly(f, z);
        }
        Real scale = pow_si(pi * nr, m) / pow_si(nr, s);
        acc = acc + val * scale;
    }
    if (cot_limit) {
        Real z = Real::zeta(static_cast<unsigned long>(s), wp);
        acc = acc - Complex{Real::of(0L, wp), z};
    }
    return {acc.re.rounded_to(prec), acc.im.rounded_to(prec)};
}

Complex rf_eval(const arith::RationalFunction& f, const Complex& z) {
    mpfr_prec_t p = z.prec();
    auto horner = [&](const Polynomial& poly) {
        Complex acc(p);
        for (long i = poly.degree(); i >= 0; --i) {
            acc = acc * z;
            acc.re = acc.re + Real::of(poly.coeff(static_cast<std::size_t>(i)), p);
        }
        return acc;
    };
    return horner(f.num()) / horner(f.den());
}

Complex balanced_point(const UnimodularMatrix& gamma, mpfr_prec_t prec) {
    if (gamma.c == 0) return {Real::of(1L, prec), Real::of(2L, prec)};
    Real c = Real::of(gamma.c, prec);
    return {-(Real::of(gamma.d, prec) / c), abs(Real::of(1L, prec) / c)};
}

Real cocycle_residual(SeriesKind kind, const UnimodularMatrix& gamma, long s, const Complex& tau,
                      mpfr_prec_t prec, long tail_bits) {
    cocycle::check_parity(kind, s);
    cocycle::PeriodFunction p =
        kind == SeriesKind::Secant
            ? cocycle::compose_cocycle(modular::decompose_gamma2(gamma), kind, s)
            : cocycle::compose_cocycle(modular::decompose_full(gamma), kind, s);
    mpfr_prec_t wp = prec + 32;
    Complex taup{tau.re.rounded_to(wp), tau.im.rounded_to(wp)};
    Complex num = taup * Real::of(gamma.a, wp);
    num.re = num.re + Real::of(gamma.b, wp);
    Complex den = taup * Real::of(gamma.c, wp);
    den.re = den.re + Real::of(gamma.d, wp);
    Complex gamma_tau = num / den;
    Complex psi_t = uhp_psi_derivative(kind, 0, s, taup, wp, tail_bits);
    Complex psi_gt = uhp_psi_derivative(kind, 0, s, gamma_tau, wp, tail_bits);
    Complex lhs = cpow(den, s - 1) * psi_gt - psi_t;
    Complex pval = rf_eval(p.body, taup) * pow_si(Real::pi(wp), s);
    return abs(lhs - pval).rounded_to(prec);
}

Real combination_residual(const LinearCombination& lc, const Complex& tau0, mpfr_prec_t prec) {
    mpfr_prec_t wp = prec + 32;
    Real pi = Real::pi(wp);
    Complex tau{tau0.re.rounded_to(wp), tau0.im.rounded_to(wp)};
    Real worst(wp);
    for (long n = 1; n <= 4; ++n) {
        Real nr = Real::of(n, wp);
        Real ns = pow_si(nr, lc.s);
        Complex z = tau * (pi * nr);
        Complex lhs = trig_ab(lc.a, lc.b, z);
        lhs = {lhs.re / ns, lhs.im / ns};
        Complex rhs(wp);
        for (const auto& t : lc.terms) {
            Complex contrib(wp);
            if (t.kind == evaluator::TermKind::Family || t.kind == evaluator::TermKind::NonPositive) {
                contrib = trig_ab(t.a, t.b, z);
                contrib = {contrib.re / ns, contrib.im / ns};
            } else {
                TrigBase base;
                switch (t.kind) {
                    case evaluator::TermKind::DSecant: base = TrigBase::Sec; break;
                    case evaluator::TermKind::DCotangent: base = TrigBase::Cot; break;
                    case evaluator::TermKind::DCosecant: base = TrigBase::Csc; break;
                    case evaluator::TermKind::DTangent: base = TrigBase::Tan; break;
                    default: throw InternalError("unexpected term kind");
                }
                // pi^{-j} (pi n)^j / n^{s+j} = 1/n^s at the termwise level.
                Complex zt = tau * Real::of(t.scale, wp);
                zt.re = zt.re + Real::of(t.shift, wp);
                zt = zt * (pi * nr);
                contrib = trig_derivative(base, t.order, zt);
                contrib = {contrib.re / ns, contrib.im / ns};
            }
            Real c = Real::of(t.coeff, wp);
            rhs = rhs + contrib * c;
        }
        Real res = abs(lhs - rhs);
        if (res > worst) worst = res;
    }
    return worst.rounded_to(prec);
}

}  // namespace tds::numerics
