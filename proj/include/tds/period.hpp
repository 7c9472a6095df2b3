#pragma once

#include "tds/laurent.hpp"
#include "tds/matrix.hpp"
#include "tds/rational_function.hpp"

namespace tds::cocycle {

using arith::Polynomial;
using arith::Rational;
using arith::RationalFunction;
using modular::Gen;
using modular::GeneratorWord;
using modular::GroupId;
using modular::UnimodularMatrix;

/// The two Eichler-integral series handled by the cocycle machinery:
/// Secant is psi^{1,0} (invariance group generated by T^2, R^2; s even),
/// Cotangent is psi^{-1,1} (full modular group; s odd).
enum class SeriesKind { Secant, Cotangent };

GroupId group_of(SeriesKind kind);
void check_parity(SeriesKind kind, long s);

/// A period function at weight 1-s. body is the coefficient of pi^s: the
/// cocycle value is pi^s * body(tau).
struct PeriodFunction {
    RationalFunction body;
    long weight;
};

/// Slash action (f|_k gamma)(tau) = (c tau + d)^{-k} f((a tau + b)/(c tau + d))
/// as an exact rational-function substitution.
RationalFunction rf_slash(const RationalFunction& f, long k, const UnimodularMatrix& m);

/// Generator periods of the secant series: p_s(T^2) = 0 and
/// p_s(R^2) = [z^{s-1}] sin(tau z) / (sin(z) sin((2 tau + 1) z)).
PeriodFunction sec_period_generator(Gen g, long s);

/// Generator periods of the cotangent series: p_s(T) = 0 and, for s = 2m-1,
/// p_s(S) = (-1)^m 2^s sum_{n=0}^{m} B_{2n}/(2n)! B_{2(m-n)}/(2(m-n))! tau^{2n-1}.
PeriodFunction cot_period_generator(Gen g, long s);

/// p_s(product(word); tau) by folding the cocycle relation
/// p(alpha beta) = p(alpha)|_{1-s} beta + p(beta); inverse letters use
/// p(g^{-1}) = -p(g)|_{1-s} g^{-1}.
PeriodFunction compose_cocycle(const GeneratorWord& word, SeriesKind kind, long s);

}  // namespace tds::cocycle
