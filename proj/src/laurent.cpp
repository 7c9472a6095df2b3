#include "tds/laurent.hpp"

namespace tds::arith {

LaurentSeries::LaurentSeries(long lowest_index, std::vector<RationalFunction> coeffs,
                             long truncation_order)
    : low_(lowest_index), c_(std::move(coeffs)), trunc_(truncation_order) {
    if (low_ + static_cast<long>(c_.size()) > trunc_)
        throw InternalError("laurent series stores coefficients beyond its truncation");
    normalize();
}

void LaurentSeries::normalize() {
    while (!c_.empty() && c_.front().is_zero()) {
        c_.erase(c_.begin());
        ++low_;
    }
    if (c_.empty()) low_ = trunc_;
}

LaurentSeries LaurentSeries::sine(const Polynomial& w, long order) {
    std::vector<RationalFunction> c;
    if (order <= 1) return LaurentSeries(order, {}, order);
    c.assign(static_cast<std::size_t>(order - 1), RationalFunction());
    Rational fact(1);
    for (long m = 0; 2 * m + 1 < order; ++m) {
        if (m > 0) fact *= Rational(2 * m) * Rational(2 * m + 1);
        Rational coeff = make_rational((m % 2 == 0) ? 1 : -1, 1) / fact;
        Polynomial p = w.pow(static_cast<unsigned long>(2 * m + 1)) * coeff;
        c[static_cast<std::size_t>(2 * m)] = RationalFunction(p, Polynomial{Rational(1)});
    }
    return LaurentSeries(1, std::move(c), order);
}

RationalFunction LaurentSeries::coeff(long k) const {
    if (k >= trunc_)
        throw InsufficientPrecision("laurent coefficient " + std::to_string(k) +
                                    " beyond truncation " + std::to_string(trunc_));
    long i = k - low_;
    if (i < 0 || i >= static_cast<long>(c_.size())) return RationalFunction();
    return c_[static_cast<std::size_t>(i)];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& o) const {
    // Relative precision is limited by the less precise factor.
    long low = low_ + o.low_;
    long trunc = std::min(low_ + o.trunc_, o.low_ + trunc_);
    if (c_.empty() || o.c_.empty()) return LaurentSeries(trunc, {}, trunc);
    std::vector<RationalFunction> c(static_cast<std::size_t>(trunc - low), RationalFunction());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            if (static_cast<long>(i + j) >= trunc - low) continue;
            c[i + j] = c[i + j] + c_[i] * o.c_[j];
        }
    return LaurentSeries(low, std::move(c), trunc);
}

RationalFunction laurent_div_coefficient(const LaurentSeries& num, const LaurentSeries& den,
                                         long k) {
    if (den.lowest_index() >= den.truncation_order())
        throw InternalError("laurent division by zero series");
    // Quotient q starts at low_n - low_d with relative precision bounded by
    // both operands' determined windows.
    long low_q = num.lowest_index() - den.lowest_index();
    long rel = std::min(num.truncation_order() - num.lowest_index(),
                        den.truncation_order() - den.lowest_index());
    if (k - low_q >= rel)
        throw InsufficientPrecision("quotient coefficient " + std::to_string(k) +
                                    " needs more series terms");
    if (k < low_q) return RationalFunction();
    RationalFunction lead = den.coeff(den.lowest_index());
    std::vector<RationalFunction> q;
    long n_terms = k - low_q + 1;
    q.reserve(static_cast<std::size_t>(n_terms));
    for (long i = 0; i < n_terms; ++i) {
        RationalFunction acc = num.coeff(num.lowest_index() + i);
        for (long j = 0; j < i; ++j)
            acc = acc - q[static_cast<std::size_t>(j)] * den.coeff(den.lowest_index() + i - j);
        q.push_back(acc / lead);
    }
    return q.back();
}

}  // namespace tds::arith
