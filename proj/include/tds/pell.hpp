#pragma once

#include <vector>

#include "tds/integer.hpp"
#include "tds/matrix.hpp"

namespace tds::modular {

/// Continued fraction of sqrt(k): [a0; (a1, ..., aL) repeating].
struct CFExpansion {
    Integer a0;
    std::vector<Integer> period;
};

/// CF of sqrt(k) for nonsquare k > 1; throws PerfectSquare otherwise.
CFExpansion cf_sqrt(const Integer& k);

/// Least positive solution of X^2 - k Y^2 = 1.
struct PellSolution {
    Integer X, Y, k;
};

/// Fundamental solution via the continued fraction of sqrt(k); an odd period
/// yields X^2 - kY^2 = -1 first, which is squared. Throws ResourceCap when
/// the digits of X exceed the configured cap.
PellSolution pell_fundamental(const Integer& k);

/// Decimal-digit cap for Pell X (default 100000; the TDS_MAX_PELL_DIGITS
/// environment variable overrides the default at first use).
std::size_t pell_digit_cap();
void set_pell_digit_cap(std::size_t cap);

/// gamma in SL2(Z) with gamma != +-I fixing rho under the Moebius action
/// and congruent to I mod N, built from the fundamental solution of
/// X^2 - (Delta N^2) Y^2 = 1 via t = 2X, u = 2NY. If X != 1 (mod N) the
/// solution is squared first, which forces X = 1 (mod N^2).
UnimodularMatrix fixing_matrix(const QuadraticIrrational& rho, const Integer& N);

}  // namespace tds::modular
