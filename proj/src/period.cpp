#include "tds/period.hpp"

#include "tds/bernoulli.hpp"

namespace tds::cocycle {

using arith::bernoulli_number;
using arith::factorial;
using arith::Integer;
using arith::make_rational;
using arith::pow_int;

GroupId group_of(SeriesKind kind) {
    return kind == SeriesKind::Secant ? GroupId::gamma_two() : GroupId::full();
}

void check_parity(SeriesKind kind, long s) {
    if (kind == SeriesKind::Secant) {
        if (s < 2 || s % 2 != 0)
            throw ParityError("parity: secant series needs even s >= 2, got s = " + std::to_string(s));
    } else {
        if (s < 3 || s % 2 == 0)
            throw ParityError("parity: cotangent series needs odd s >= 3, got s = " + std::to_string(s));
    }
}

RationalFunction rf_slash(const RationalFunction& f, long k, const UnimodularMatrix& m) {
    if (f.is_zero()) return f;
    Polynomial num = arith::mobius_numerator(f.num(), m.a, m.b, m.c, m.d);
    Polynomial den = arith::mobius_numerator(f.den(), m.a, m.b, m.c, m.d);
    // f(gamma tau) = num_sub (c tau + d)^{deg den - deg num} / den_sub; the
    // slash contributes another (c tau + d)^{-k}.
    long e = f.den().degree() - f.num().degree() - k;
    Polynomial j{Rational(m.d), Rational(m.c)};
    if (e >= 0) return RationalFunction(num * j.pow(static_cast<unsigned long>(e)), den);
    return RationalFunction(num, den * j.pow(static_cast<unsigned long>(-e)));
}

PeriodFunction sec_period_generator(Gen g, long s) {
    check_parity(SeriesKind::Secant, s);
    if (g == Gen::T2) return {RationalFunction(), 1 - s};
    if (g != Gen::R2) throw NotInGroup("secant periods are defined on T^2 and R^2");
    // [z^{s-1}] sin(tau z) / (sin(z) sin((2 tau + 1) z)), with guard terms
    // past the requested index.
    long order = s + 5;
    arith::LaurentSeries num = arith::LaurentSeries::sine(Polynomial{Rational(0), Rational(1)}, order);
    arith::LaurentSeries den = arith::LaurentSeries::sine(Polynomial{Rational(1)}, order) *
                               arith::LaurentSeries::sine(Polynomial{Rational(1), Rational(2)}, order);
    return {arith::laurent_div_coefficient(num, den, s - 1), 1 - s};
}

PeriodFunction cot_period_generator(Gen g, long s) {
    check_parity(SeriesKind::Cotangent, s);
    if (g == Gen::T) return {RationalFunction(), 1 - s};
    if (g != Gen::S) throw NotInGroup("cotangent periods are defined on T and S");
    long m = (s + 1) / 2;
    Rational outer = make_rational(m % 2 == 0 ? 1 : -1, 1) * Rational(pow_int(Integer(2), static_cast<unsigned long>(s)));
    // Sum of B_{2n}/(2n)! * B_{2(m-n)}/(2(m-n))! tau^{2n-1}: numerator over den = tau.
    std::vector<Rational> num(static_cast<std::size_t>(2 * m + 1), Rational(0));
    for (long n = 0; n <= m; ++n) {
        Rational c = bernoulli_number(static_cast<unsigned long>(2 * n)) /
                     Rational(factorial(static_cast<unsigned long>(2 * n)));
        c *= bernoulli_number(static_cast<unsigned long>(2 * (m - n))) /
             Rational(factorial(static_cast<unsigned long>(2 * (m - n))));
        num[static_cast<std::size_t>(2 * n)] = outer * c;
    }
    return {RationalFunction(Polynomial(std::move(num)), Polynomial{Rational(0), Rational(1)}),
            1 - s};
}

namespace {

PeriodFunction generator_period(Gen g, SeriesKind kind, long s) {
    return kind == SeriesKind::Secant ? sec_period_generator(g, s) : cot_period_generator(g, s);
}

}  // namespace

PeriodFunction compose_cocycle(const GeneratorWord& word, SeriesKind kind, long s) {
    check_parity(kind, s);
    if (word.sign < 0 && kind == SeriesKind::Secant)
        throw NotInGroup("-I is not an element of Gamma_2");
    long k = 1 - s;
    RationalFunction acc;
    for (const auto& [g, e] : word.letters) {
        if (kind == SeriesKind::Secant && g != Gen::T2 && g != Gen::R2)
            throw NotInGroup("secant cocycle word must use T^2 and R^2");
        if (kind == SeriesKind::Cotangent && g != Gen::T && g != Gen::S)
            throw NotInGroup("cotangent cocycle word must use T and S");
        if (g == Gen::T || g == Gen::T2) {
            // Zero generator period: the letter only slashes the accumulator,
            // and its full power has the closed form [[1, e],[0, 1]].
            if (acc.is_zero()) continue;
            Integer shift = Integer(e) * (g == Gen::T ? 1 : 2);
            acc = rf_slash(acc, k, UnimodularMatrix(1, shift, 0, 1));
            continue;
        }
        if (e > 100000 || e < -100000)
            throw ResourceCap("cocycle word exponent too large to fold");
        RationalFunction pg = generator_period(g, kind, s).body;
        UnimodularMatrix step = gen_matrix(g);
        RationalFunction pstep = pg;
        if (e < 0) {
            step = step.inverse();
            pstep = -rf_slash(pg, k, step);
        }
        for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = rf_slash(acc, k, step) + pstep;
    }
    // -I acts trivially at the even weights where it can occur.
    return {acc, k};
}

}  // namespace tds::cocycle
