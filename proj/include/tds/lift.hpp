#pragma once

#include <map>

#include "tds/period.hpp"
#include "tds/surd.hpp"

namespace tds::cocycle {

using arith::QuadraticIrrational;
using arith::SurdValue;

/// Cocycle of D^level(psi) at the given weight, kept affine in the symbols
/// <D^m psi>: the value is pi^s free(tau) + sum_m deriv[m](tau) (D^m psi)(tau),
/// with every index m < level.
struct AffineCocycle {
    long weight = 0;
    long level = 0;
    RationalFunction free;
    std::map<long, RationalFunction> deriv;
};

/// One application of the differentiation rule for period functions:
/// p_{DF, k+2}(gamma; tau) = ck/(c tau + d) (F(tau) + p_{F,k}(gamma; tau))
///                           + D p_{F,k}(gamma; tau),
/// pushing the symbol ladder up by one level.
AffineCocycle derivative_lift(const AffineCocycle& P, const UnimodularMatrix& gamma);

/// (D^j psi)(rho) / pi^s as an exact element of Q(rho): fixing matrix (N = 4
/// for Secant since Gamma(4) <= Gamma_2, N = 1 for Cotangent), generator
/// decomposition, cocycle composition, j derivative lifts, then the
/// triangular solve dividing by (c rho + d)^{s-2m-1} - 1 at each level.
/// Results are memoized per (kind, j, s, rho).
SurdValue eval_derivative_at_fixed_point(SeriesKind kind, long j, long s,
                                         const QuadraticIrrational& rho);

}  // namespace tds::cocycle
