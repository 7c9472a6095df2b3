#pragma once

#include <vector>

#include "tds/rational_function.hpp"

namespace tds::arith {

/// Truncated Laurent series in z whose coefficients are rational functions
/// of tau. coeffs[i] is the coefficient of z^(lowest_index + i); indices at
/// and beyond truncation_order are undetermined.
class LaurentSeries {
  public:
    LaurentSeries(long lowest_index, std::vector<RationalFunction> coeffs, long truncation_order);

    /// sin(w(tau) * z) as a series in z, determined for indices < order.
    static LaurentSeries sine(const Polynomial& w, long order);

    long lowest_index() const { return low_; }
    long truncation_order() const { return trunc_; }
    /// Coefficient of z^k; throws InsufficientPrecision for k >= truncation.
    RationalFunction coeff(long k) const;

    LaurentSeries operator*(const LaurentSeries& o) const;

  private:
    void normalize();
    long low_;
    std::vector<RationalFunction> c_;
    long trunc_;
};

/// Coefficient of z^k in num/den. The divisor's leading stored coefficient
/// must be nonzero; throws InsufficientPrecision when the operands do not
/// determine index k of the quotient.
RationalFunction laurent_div_coefficient(const LaurentSeries& num, const LaurentSeries& den,
                                         long k);

}  // namespace tds::arith
