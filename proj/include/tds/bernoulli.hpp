#pragma once

#include "tds/integer.hpp"
#include "tds/surd.hpp"

namespace tds::arith {

/// Bernoulli number B_n with the convention B_1 = -1/2 (generating function
/// t e^{xt}/(e^t - 1)). Values are memoized; the cache behaves as an atomic
/// memo table and is safe for concurrent callers.
Rational bernoulli_number(unsigned long n);

/// Bernoulli polynomial B_n(x) = sum_k binom(n,k) B_k x^{n-k}, exact in the
/// field of x.
SurdValue bernoulli_poly(unsigned long n, const SurdValue& x);
Rational bernoulli_poly(unsigned long n, const Rational& x);

/// zeta(s)/pi^s for even s >= 2, from the Bernoulli closed form
/// zeta(2m) = (-1)^{m+1} B_{2m} (2 pi)^{2m} / (2 (2m)!).
Rational zeta_even_pi_coeff(unsigned long s);

}  // namespace tds::arith
