#include "tds/verify.hpp"

namespace tds::numerics {

VerificationReport verify(const Evaluation& ev, unsigned long N, mpfr_prec_t prec,
                          const std::string& tol, bool relative) {
    Real numeric = ev.label.empty()
                       ? partial_sum(ev.a, ev.b, ev.pi_power, ev.rho, N, prec)
                       : twisted_partial_sum(evaluator::twisted_from_name(ev.label), ev.pi_power,
                                             ev.rho, N, prec);
    mpfr_prec_t wp = prec + 32;
    Real exact = surd_to_real(ev.coeff, wp) * pow_si(Real::pi(wp), ev.pi_power);
    Real abs_err = abs(numeric.rounded_to(wp) - exact);
    Real denom = abs(exact);
    Real rel_err = denom.is_zero() ? abs_err : abs_err / denom;
    Real tol_v = Real::parse(tol, wp);

    VerificationReport report;
    report.terms_used = N;
    report.precision_bits = prec;
    report.numeric_value = numeric.str();
    report.exact_value_decimal = exact.rounded_to(prec).str();
    report.abs_error = abs_err.str(8);
    report.rel_error = rel_err.str(8);
    report.tolerance = tol;
    report.relative = relative;
    report.pass = relative ? (rel_err <= tol_v) : (abs_err <= tol_v);
    return report;
}

}  // namespace tds::numerics
