#pragma once

#include <vector>

#include "tds/integer.hpp"

namespace tds::evaluator {

using arith::Rational;

/// What a LinearCombination term refers to.
///   Family       — an unexpanded base family psi^{a,b} (a>0, b in {0,-1} or
///                  b>0, a in {0,-1})
///   NonPositive  — the Bernoulli branch psi^{a,b} with a <= 0, b <= 0
///   DSecant etc. — coeff * pi^{-j} (D^j psi^{kind}_weight)(mu*tau + sigma)
enum class TermKind { Family, NonPositive, DSecant, DCotangent, DCosecant, DTangent };

struct Term {
    Rational coeff;
    TermKind kind;
    long a = 0, b = 0;   // Family / NonPositive payload
    long order = 0;      // derivative order j
    long weight = 0;     // inner exponent s'
    Rational scale{1};   // argument multiplier mu
    Rational shift{0};   // argument offset sigma
};

/// Terms summing to psi^{a,b}_s(tau) wherever both sides converge.
struct LinearCombination {
    long a = 0, b = 0, s = 0;  // the left-hand side
    std::vector<Term> terms;
};

void check_query(long a, long b, long s);

/// Recursive application of trig^{a,b} = trig^{a-2,b} + trig^{a,b-2} (and its
/// rearrangements) down to the four base families plus the nonpositive branch.
LinearCombination reduce_to_base(long a, long b, long s);

/// Operator decomposition of one base family into derivatives of the four
/// one-function series, e.g. sec^a = 1/(a-1)! (D^2+(a-2)^2)...(D^2+1^2) sec
/// for odd a. Term weights are s + order.
LinearCombination operator_decompose(long a, long b, long s);

/// Fully lowered plan: only NonPositive, DSecant and DCotangent terms remain
/// (cosecant and tangent are rewritten through csc z = cot(z/2) - cot z and
/// tan z = cot z - 2 cot 2z, which introduce the scales 1/2 and 2).
LinearCombination lower_plan(long a, long b, long s);

}  // namespace tds::evaluator
